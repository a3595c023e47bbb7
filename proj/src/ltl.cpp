#include "astra/ltl.hpp"

#include <functional>

#include "syntax.hpp"

namespace astra {

struct Formula::Node {
    FormulaKind kind;
    std::size_t prop = 0;
    std::string name;
    std::optional<Formula> lhs;
    std::optional<Formula> rhs;
    std::size_t size = 1;
};

Formula Formula::truth() {
    static const Formula t(std::make_shared<const Node>(Node{FormulaKind::True, 0, {}, std::nullopt, std::nullopt, 1}));
    return t;
}

Formula Formula::atom(std::size_t prop, std::string name) {
    return Formula(std::make_shared<const Node>(Node{FormulaKind::Atom, prop, std::move(name), std::nullopt, std::nullopt, 1}));
}

Formula Formula::negation(Formula f) {
    const std::size_t size = f.size() + 1;
    return Formula(std::make_shared<const Node>(
        Node{FormulaKind::Not, 0, {}, std::move(f), std::nullopt, size}));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
    const std::size_t size = lhs.size() + rhs.size() + 1;
    return Formula(std::make_shared<const Node>(
        Node{FormulaKind::And, 0, {}, std::move(lhs), std::move(rhs), size}));
}

Formula Formula::until(Formula lhs, Formula rhs) {
    const std::size_t size = lhs.size() + rhs.size() + 1;
    return Formula(std::make_shared<const Node>(
        Node{FormulaKind::Until, 0, {}, std::move(lhs), std::move(rhs), size}));
}

Formula Formula::falsity() { return negation(truth()); }

Formula Formula::disjunction(Formula lhs, Formula rhs) {
    return negation(conjunction(negation(std::move(lhs)), negation(std::move(rhs))));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
    return negation(conjunction(std::move(lhs), negation(std::move(rhs))));
}

Formula Formula::eventually(Formula f) { return until(truth(), std::move(f)); }

Formula Formula::always(Formula f) { return negation(eventually(negation(std::move(f)))); }

FormulaKind Formula::kind() const { return node_->kind; }
std::size_t Formula::prop() const { return node_->prop; }
const std::string& Formula::name() const { return node_->name; }
const Formula& Formula::lhs() const { return *node_->lhs; }
const Formula& Formula::rhs() const { return *node_->rhs; }
std::size_t Formula::size() const { return node_->size; }

bool Formula::operator==(const Formula& other) const {
    if (node_ == other.node_) return true;
    if (kind() != other.kind() || size() != other.size()) return false;
    switch (kind()) {
        case FormulaKind::True:
            return true;
        case FormulaKind::Atom:
            return prop() == other.prop();
        case FormulaKind::Not:
            return lhs() == other.lhs();
        case FormulaKind::And:
        case FormulaKind::Until:
            return lhs() == other.lhs() && rhs() == other.rhs();
    }
    return false;
}

std::string Formula::to_string() const {
    switch (kind()) {
        case FormulaKind::True:
            return "true";
        case FormulaKind::Atom:
            return name();
        case FormulaKind::Not:
            return "!" + (lhs().kind() == FormulaKind::And || lhs().kind() == FormulaKind::Until
                              ? "(" + lhs().to_string() + ")"
                              : lhs().to_string());
        case FormulaKind::And:
            return "(" + lhs().to_string() + " & " + rhs().to_string() + ")";
        case FormulaKind::Until:
            return "(" + lhs().to_string() + " U " + rhs().to_string() + ")";
    }
    return "?";
}

namespace {

Formula lower(const syntax::Expr& e, const Propositions& props) {
    using Op = syntax::Expr::Op;
    switch (e.op) {
        case Op::True:
            return Formula::truth();
        case Op::False:
            return Formula::falsity();
        case Op::Ident: {
            auto i = props.find(e.name);
            if (!i) throw UnknownProposition(e.name);
            return Formula::atom(*i, e.name);
        }
        case Op::Not:
            return Formula::negation(lower(*e.lhs, props));
        case Op::And:
            return Formula::conjunction(lower(*e.lhs, props), lower(*e.rhs, props));
        case Op::Or:
            return Formula::disjunction(lower(*e.lhs, props), lower(*e.rhs, props));
        case Op::Implies:
            return Formula::implication(lower(*e.lhs, props), lower(*e.rhs, props));
        case Op::Until:
            return Formula::until(lower(*e.lhs, props), lower(*e.rhs, props));
        case Op::Eventually:
            return Formula::eventually(lower(*e.lhs, props));
        case Op::Always:
            return Formula::always(lower(*e.lhs, props));
    }
    throw SyntaxError("unsupported operator", e.position);
}

// Truth value of f at every position 1..span of the word (index 0-based).
std::vector<bool> truth_table(const Lasso<Letter>& word, const Formula& f) {
    const std::size_t n = word.span();
    std::vector<bool> out(n);
    switch (f.kind()) {
        case FormulaKind::True:
            out.assign(n, true);
            break;
        case FormulaKind::Atom:
            for (std::size_t i = 1; i <= n; ++i) out[i - 1] = (word.at(i) >> f.prop() & 1u) != 0;
            break;
        case FormulaKind::Not: {
            auto sub = truth_table(word, f.lhs());
            for (std::size_t i = 0; i < n; ++i) out[i] = !sub[i];
            break;
        }
        case FormulaKind::And: {
            auto a = truth_table(word, f.lhs());
            auto b = truth_table(word, f.rhs());
            for (std::size_t i = 0; i < n; ++i) out[i] = a[i] && b[i];
            break;
        }
        case FormulaKind::Until: {
            auto hold = truth_table(word, f.lhs());
            auto goal = truth_table(word, f.rhs());
            // A witness, if any, lies within n steps: the suffix from position j
            // only depends on the position class of j.
            for (std::size_t i = 1; i <= n; ++i) {
                std::size_t j = i;
                bool result = false;
                for (std::size_t step = 0; step < n; ++step) {
                    if (goal[j - 1]) {
                        result = true;
                        break;
                    }
                    if (!hold[j - 1]) break;
                    j = word.next(j);
                }
                out[i - 1] = result;
            }
            break;
        }
    }
    return out;
}

}  // namespace

Formula parse_formula(std::string_view text, const Propositions& props) {
    return lower(*syntax::parse(text), props);
}

bool eval_lasso(const Lasso<Letter>& word, const Formula& f, std::size_t i) {
    if (word.cycle.empty()) throw Error("lasso cycle must be non-empty");
    if (i < 1) throw Error("positions are 1-based");
    return truth_table(word, f)[word.normalize(i) - 1];
}

bool trajectory_satisfies(const Lasso<State>& sigma, const Formula& f, const Valuation& val) {
    return eval_lasso(sigma.map([&](State q) { return val(q); }), f, 1);
}

}  // namespace astra
