#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "astra/core.hpp"

namespace astra {

/// Node kinds of the core grammar. `True` is kept as a constant so that
/// true/false/F/G stay expressible over an empty proposition set.
enum class FormulaKind { True, Atom, Not, And, Until };

/// Immutable LTL formula without the next operator, in core grammar only.
class Formula {
public:
    static Formula truth();
    static Formula atom(std::size_t prop, std::string name);
    static Formula negation(Formula f);
    static Formula conjunction(Formula lhs, Formula rhs);
    static Formula until(Formula lhs, Formula rhs);

    // Derived forms, expanded into the core grammar on construction.
    static Formula falsity();
    static Formula disjunction(Formula lhs, Formula rhs);
    static Formula implication(Formula lhs, Formula rhs);
    static Formula eventually(Formula f);
    static Formula always(Formula f);

    FormulaKind kind() const;
    std::size_t prop() const;
    const std::string& name() const;
    /// Operand of Not, left operand of And/Until.
    const Formula& lhs() const;
    const Formula& rhs() const;

    /// Number of core-grammar nodes.
    std::size_t size() const;
    std::string to_string() const;

    bool operator==(const Formula& other) const;

    struct Node;

private:
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

Formula parse_formula(std::string_view text, const Propositions& props);

/// Truth of `f` at 1-based position `i` of `word`.
bool eval_lasso(const Lasso<Letter>& word, const Formula& f, std::size_t i);

/// sigma |= f with respect to the valuation, evaluated at position 1.
bool trajectory_satisfies(const Lasso<State>& sigma, const Formula& f, const Valuation& val);

}  // namespace astra
