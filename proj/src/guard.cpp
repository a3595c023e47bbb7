#include "astra/guard.hpp"

#include <algorithm>

#include "syntax.hpp"

namespace astra {

LetterSet LetterSet::full(std::size_t alphabet_size) {
    LetterSet s(alphabet_size);
    s.bits_.assign(alphabet_size, true);
    return s;
}

std::size_t LetterSet::count() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<Letter> LetterSet::letters() const {
    std::vector<Letter> out;
    for (std::size_t l = 0; l < bits_.size(); ++l) {
        if (bits_[l]) out.push_back(static_cast<Letter>(l));
    }
    return out;
}

LetterSet& LetterSet::operator|=(const LetterSet& other) {
    for (std::size_t l = 0; l < bits_.size(); ++l) bits_[l] = bits_[l] || other.bits_.at(l);
    return *this;
}

LetterSet& LetterSet::operator&=(const LetterSet& other) {
    for (std::size_t l = 0; l < bits_.size(); ++l) bits_[l] = bits_[l] && other.bits_.at(l);
    return *this;
}

LetterSet LetterSet::complement() const {
    LetterSet out = *this;
    out.bits_.flip();
    return out;
}

bool LetterSet::intersects(const LetterSet& other) const {
    for (std::size_t l = 0; l < bits_.size(); ++l) {
        if (bits_[l] && other.bits_.at(l)) return true;
    }
    return false;
}

struct Guard::Node {
    Kind kind;
    std::size_t prop = 0;
    std::vector<Guard> children;
};

Guard::Guard() : Guard(truth()) {}

Guard Guard::truth() {
    static const Guard g(std::make_shared<const Node>(Node{Kind::True, 0, {}}));
    return g;
}

Guard Guard::falsity() {
    static const Guard g(std::make_shared<const Node>(Node{Kind::False, 0, {}}));
    return g;
}

Guard Guard::var(std::size_t prop) {
    return Guard(std::make_shared<const Node>(Node{Kind::Var, prop, {}}));
}

Guard Guard::negation(Guard g) {
    return Guard(std::make_shared<const Node>(Node{Kind::Not, 0, {std::move(g)}}));
}

Guard Guard::conjunction(Guard lhs, Guard rhs) {
    if (lhs.kind() == Kind::True) return rhs;
    if (rhs.kind() == Kind::True) return lhs;
    return Guard(std::make_shared<const Node>(Node{Kind::And, 0, {std::move(lhs), std::move(rhs)}}));
}

Guard Guard::disjunction(Guard lhs, Guard rhs) {
    if (lhs.kind() == Kind::False) return rhs;
    if (rhs.kind() == Kind::False) return lhs;
    return Guard(std::make_shared<const Node>(Node{Kind::Or, 0, {std::move(lhs), std::move(rhs)}}));
}

Guard::Kind Guard::kind() const { return node_->kind; }

bool Guard::evaluate(Letter l) const {
    switch (node_->kind) {
        case Kind::True:
            return true;
        case Kind::False:
            return false;
        case Kind::Var:
            return (l >> node_->prop & 1u) != 0;
        case Kind::Not:
            return !node_->children[0].evaluate(l);
        case Kind::And:
            return node_->children[0].evaluate(l) && node_->children[1].evaluate(l);
        case Kind::Or:
            return node_->children[0].evaluate(l) || node_->children[1].evaluate(l);
    }
    return false;
}

LetterSet Guard::letters(std::size_t num_props) const {
    LetterSet out(std::size_t{1} << num_props);
    for (std::size_t l = 0; l < out.alphabet_size(); ++l) {
        if (evaluate(static_cast<Letter>(l))) out.insert(static_cast<Letter>(l));
    }
    return out;
}

namespace {

int precedence(Guard::Kind k) {
    switch (k) {
        case Guard::Kind::Or:
            return 1;
        case Guard::Kind::And:
            return 2;
        default:
            return 3;
    }
}

}  // namespace

std::string Guard::to_string(const Propositions& props) const {
    auto wrap = [&](const Guard& child, int parent) {
        std::string s = child.to_string(props);
        return precedence(child.kind()) < parent ? "(" + s + ")" : s;
    };
    switch (node_->kind) {
        case Kind::True:
            return "true";
        case Kind::False:
            return "false";
        case Kind::Var:
            return props.name(node_->prop);
        case Kind::Not:
            return "!" + wrap(node_->children[0], 3);
        case Kind::And:
            return wrap(node_->children[0], 2) + " & " + wrap(node_->children[1], 2);
        case Kind::Or:
            return wrap(node_->children[0], 1) + " | " + wrap(node_->children[1], 1);
    }
    return "?";
}

Guard Guard::from_letters(const LetterSet& letters, std::size_t num_props) {
    const std::size_t n = std::size_t{1} << num_props;
    if (letters.alphabet_size() != n) throw Error("letter set does not match proposition count");
    if (letters.empty()) return falsity();
    if (letters.is_full()) return truth();

    LetterSet uncovered = letters;
    Guard out = falsity();
    while (!uncovered.empty()) {
        const Letter m = uncovered.letters().front();
        // A cube is (care mask, value); grow it greedily one variable at a time.
        Letter care = static_cast<Letter>(n - 1);
        for (std::size_t v = 0; v < num_props; ++v) {
            const Letter trial = care & ~(Letter{1} << v);
            bool inside = true;
            for (Letter l = 0; l < n && inside; ++l) {
                if ((l & trial) == (m & trial) && !letters.contains(l)) inside = false;
            }
            if (inside) care = trial;
        }
        Guard cube = truth();
        for (std::size_t v = 0; v < num_props; ++v) {
            if (!(care >> v & 1u)) continue;
            Guard lit = (m >> v & 1u) ? var(v) : negation(var(v));
            cube = conjunction(std::move(cube), std::move(lit));
        }
        for (Letter l = 0; l < n; ++l) {
            if ((l & care) == (m & care)) uncovered.erase(l);
        }
        out = disjunction(std::move(out), std::move(cube));
    }
    return out;
}

namespace {

Guard lower(const syntax::Expr& e, const Propositions& props) {
    using Op = syntax::Expr::Op;
    switch (e.op) {
        case Op::True:
            return Guard::truth();
        case Op::False:
            return Guard::falsity();
        case Op::Ident: {
            auto i = props.find(e.name);
            if (!i) throw UnknownProposition(e.name);
            return Guard::var(*i);
        }
        case Op::Not:
            return Guard::negation(lower(*e.lhs, props));
        case Op::And:
            return Guard::conjunction(lower(*e.lhs, props), lower(*e.rhs, props));
        case Op::Or:
            return Guard::disjunction(lower(*e.lhs, props), lower(*e.rhs, props));
        case Op::Implies:
            return Guard::disjunction(Guard::negation(lower(*e.lhs, props)), lower(*e.rhs, props));
        case Op::Until:
        case Op::Eventually:
        case Op::Always:
            break;
    }
    throw SyntaxError("temporal operators are not allowed in guards", e.position);
}

}  // namespace

Guard parse_guard(std::string_view text, const Propositions& props) {
    return lower(*syntax::parse(text), props);
}

}  // namespace astra
