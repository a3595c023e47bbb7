#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "astra/errors.hpp"

namespace astra {

// Indices into the declaration-ordered symbol tables of a system.
using State = std::size_t;
using Control = std::size_t;
using Disturbance = std::size_t;
using Observation = std::size_t;

/// A set of atomic propositions, encoded as a bit mask over a Propositions table.
using Letter = std::uint32_t;

inline constexpr std::size_t kMaxPropositions = 16;

/// Declaration-ordered name table with reverse lookup.
class SymbolTable {
public:
    SymbolTable() = default;
    SymbolTable(std::string kind, std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    bool empty() const { return names_.empty(); }
    const std::string& name(std::size_t index) const { return names_.at(index); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> find(std::string_view name) const;
    /// Like find() but throws UndeclaredSymbol.
    std::size_t at(std::string_view name) const;

    bool operator==(const SymbolTable& other) const { return names_ == other.names_; }

private:
    std::string kind_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

class Propositions : public SymbolTable {
public:
    Propositions() = default;
    explicit Propositions(std::vector<std::string> names);

    /// Number of letters of the alphabet 2^P.
    std::size_t alphabet_size() const { return std::size_t{1} << size(); }
};

std::string letter_to_string(Letter letter, const Propositions& props);

struct Transition {
    State from;
    Control control;
    Disturbance disturbance;
    State to;

    auto operator<=>(const Transition&) const = default;
};

/// Unvalidated system description, as read from a system file.
struct RawSystem {
    struct Edge {
        std::string from;
        std::string control;
        std::string disturbance;
        std::string to;
    };

    std::vector<std::string> states;
    std::vector<std::string> controls;
    std::vector<std::string> disturbances;
    std::vector<Edge> transitions;
    /// state -> observation; empty means identity.
    std::vector<std::pair<std::string, std::string>> observations;
    /// state -> propositions holding there; missing states get the empty set.
    std::vector<std::pair<std::string, std::vector<std::string>>> valuation;
};

class AlternatingTransitionSystem;
AlternatingTransitionSystem validate_ats(const RawSystem& raw);

/// Finite, non-blocking alternating transition system (Q, A, B, ->, O, H).
class AlternatingTransitionSystem {
public:
    const SymbolTable& states() const { return states_; }
    const SymbolTable& controls() const { return controls_; }
    const SymbolTable& disturbances() const { return disturbances_; }
    const SymbolTable& observations() const { return observations_; }
    std::size_t num_states() const { return states_.size(); }
    std::size_t num_controls() const { return controls_.size(); }
    std::size_t num_disturbances() const { return disturbances_.size(); }

    const std::vector<Transition>& transitions() const { return transitions_; }
    Observation observation(State q) const { return obs_map_.at(q); }

    /// {q' : q -(a,b)-> q'}, sorted, never empty.
    std::span<const State> post(State q, Control a, Disturbance b) const;
    /// {q' : q -(a,b)-> q' for some b}, sorted, never empty.
    std::span<const State> successors(State q, Control a) const;

private:
    friend AlternatingTransitionSystem validate_ats(const RawSystem& raw);
    AlternatingTransitionSystem() = default;

    std::size_t slot(State q, Control a) const { return q * controls_.size() + a; }

    SymbolTable states_;
    SymbolTable controls_;
    SymbolTable disturbances_;
    SymbolTable observations_;
    std::vector<Transition> transitions_;
    std::vector<Observation> obs_map_;
    std::vector<std::vector<State>> post_;        // (q, a, b)
    std::vector<std::vector<State>> successors_;  // (q, a)
};

using Ats = AlternatingTransitionSystem;

inline std::span<const State> successors(const Ats& ats, State q, Control a) {
    return ats.successors(q, a);
}

/// Valuation function from states to sets of propositions.
class Valuation {
public:
    Valuation() = default;
    Valuation(Propositions props, std::vector<Letter> labels);

    const Propositions& props() const { return props_; }
    Letter operator()(State q) const { return labels_.at(q); }
    std::size_t num_states() const { return labels_.size(); }

private:
    Propositions props_;
    std::vector<Letter> labels_;
};

/// Builds the valuation of `raw` over the states of `ats`. Propositions are
/// declared in first-mention order unless `props` is given.
Valuation make_valuation(const Ats& ats, const RawSystem& raw,
                         std::optional<Propositions> props = std::nullopt);

struct AgentEntry {
    Control action;
    unsigned duration = 1;
    std::vector<State> successors;

    bool operator==(const AgentEntry&) const = default;
};

struct ReactiveAgent {
    State initial;
    std::vector<std::vector<AgentEntry>> succ;
};

ReactiveAgent to_reactive_agent(const Ats& ats, State q0);

/// Non-empty finite state sequence with 1-based access.
class StateSequence {
public:
    explicit StateSequence(std::vector<State> items);
    StateSequence(std::initializer_list<State> items)
        : StateSequence(std::vector<State>(items)) {}

    std::size_t size() const { return items_.size(); }
    State operator[](std::size_t i) const { return items_.at(i - 1); }
    State back() const { return items_.back(); }
    StateSequence slice(std::size_t i, std::size_t j) const;
    StateSequence extended(State q) const;
    std::span<const State> view() const { return items_; }
    const std::vector<State>& items() const { return items_; }

    auto operator<=>(const StateSequence&) const = default;

private:
    std::vector<State> items_;
};

/// Ultimately periodic word prefix . cycle^omega.
template <typename T>
struct Lasso {
    std::vector<T> prefix;
    std::vector<T> cycle;

    std::size_t span() const { return prefix.size() + cycle.size(); }

    /// Folds a 1-based position into [1, span()].
    std::size_t normalize(std::size_t i) const {
        const std::size_t u = prefix.size();
        if (i <= span()) return i;
        return u + 1 + (i - u - 1) % cycle.size();
    }

    std::size_t next(std::size_t i) const {
        i = normalize(i);
        return i == span() ? prefix.size() + 1 : i + 1;
    }

    const T& at(std::size_t i) const {
        i = normalize(i);
        return i <= prefix.size() ? prefix[i - 1] : cycle[i - prefix.size() - 1];
    }

    /// Unique representation of the denoted infinite word: primitive cycle,
    /// shortest prefix.
    Lasso canonical() const {
        Lasso out = *this;
        const std::size_t n = out.cycle.size();
        for (std::size_t p = 1; p <= n; ++p) {
            if (n % p != 0) continue;
            bool periodic = true;
            for (std::size_t i = p; i < n && periodic; ++i) periodic = out.cycle[i] == out.cycle[i - p];
            if (periodic) {
                out.cycle.resize(p);
                break;
            }
        }
        while (!out.prefix.empty() && out.prefix.back() == out.cycle.back()) {
            std::rotate(out.cycle.rbegin(), out.cycle.rbegin() + 1, out.cycle.rend());
            out.prefix.pop_back();
        }
        return out;
    }

    template <typename F>
    auto map(F&& f) const {
        using U = std::decay_t<decltype(f(std::declval<const T&>()))>;
        Lasso<U> out;
        out.prefix.reserve(prefix.size());
        out.cycle.reserve(cycle.size());
        for (const auto& x : prefix) out.prefix.push_back(f(x));
        for (const auto& x : cycle) out.cycle.push_back(f(x));
        return out;
    }

    auto operator<=>(const Lasso&) const = default;
};

}  // namespace astra
