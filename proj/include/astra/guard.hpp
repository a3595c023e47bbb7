#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "astra/core.hpp"

namespace astra {

/// Explicit set of letters over a fixed alphabet 2^P.
class LetterSet {
public:
    LetterSet() = default;
    explicit LetterSet(std::size_t alphabet_size) : bits_(alphabet_size, false) {}

    static LetterSet full(std::size_t alphabet_size);

    std::size_t alphabet_size() const { return bits_.size(); }
    bool contains(Letter l) const { return bits_.at(l); }
    void insert(Letter l) { bits_.at(l) = true; }
    void erase(Letter l) { bits_.at(l) = false; }
    std::size_t count() const;
    bool empty() const { return count() == 0; }
    bool is_full() const { return count() == bits_.size(); }
    std::vector<Letter> letters() const;

    LetterSet& operator|=(const LetterSet& other);
    LetterSet& operator&=(const LetterSet& other);
    LetterSet complement() const;
    bool intersects(const LetterSet& other) const;

    bool operator==(const LetterSet&) const = default;

private:
    std::vector<bool> bits_;
};

/// Boolean combination of propositions labeling an automaton edge.
class Guard {
public:
    enum class Kind { True, False, Var, Not, And, Or };

    Guard();  // true

    static Guard truth();
    static Guard falsity();
    static Guard var(std::size_t prop);
    static Guard negation(Guard g);
    static Guard conjunction(Guard lhs, Guard rhs);
    static Guard disjunction(Guard lhs, Guard rhs);

    /// Sum-of-products cover of exactly the given letters.
    static Guard from_letters(const LetterSet& letters, std::size_t num_props);

    Kind kind() const;
    bool evaluate(Letter l) const;
    LetterSet letters(std::size_t num_props) const;
    std::string to_string(const Propositions& props) const;

    struct Node;

private:
    explicit Guard(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Parses a guard in formula syntax; temporal operators are rejected.
Guard parse_guard(std::string_view text, const Propositions& props);

}  // namespace astra
