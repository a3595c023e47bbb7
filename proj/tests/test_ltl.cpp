#include <catch_amalgamated.hpp>

#include "astra/guard.hpp"
#include "astra/ltl.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace astra;
using namespace astra::testing;

namespace {

const Propositions kProps({"p1", "p2", "p3"});

Formula atom(const std::string& name) { return Formula::atom(kProps.at(name), name); }

Letter letter(std::initializer_list<const char*> names) {
    Letter l = 0;
    for (auto n : names) l |= Letter{1} << kProps.at(n);
    return l;
}

}  // namespace

TEST_CASE("until parses to the core node") {
    const auto f = parse_formula("p2 U p3", kProps);
    CHECK(f == Formula::until(atom("p2"), atom("p3")));
    CHECK(f.size() == 3);
}

TEST_CASE("double negation is kept") {
    const auto f = parse_formula("!(!p1)", kProps);
    CHECK(f.kind() == FormulaKind::Not);
    CHECK(f.lhs().kind() == FormulaKind::Not);
    CHECK(f.lhs().lhs() == atom("p1"));
}

TEST_CASE("sugar expands into the core grammar") {
    const auto t = Formula::truth();
    const auto p1 = atom("p1"), p2 = atom("p2");
    const auto f_p2 = Formula::until(t, p2);
    const auto implies = Formula::negation(Formula::conjunction(p1, Formula::negation(f_p2)));
    const auto expected = Formula::negation(Formula::until(t, Formula::negation(implies)));
    CHECK(parse_formula("G(p1 -> F p2)", kProps) == expected);

    CHECK(parse_formula("false", kProps) == Formula::negation(t));
    CHECK(parse_formula("p1 | p2", kProps) ==
          Formula::negation(Formula::conjunction(Formula::negation(p1), Formula::negation(p2))));
}

TEST_CASE("precedence and associativity") {
    const auto p1 = atom("p1"), p2 = atom("p2"), p3 = atom("p3");
    CHECK(parse_formula("p1 & p2 U p3", kProps) == Formula::until(Formula::conjunction(p1, p2), p3));
    CHECK(parse_formula("p1 U p2 U p3", kProps) == Formula::until(p1, Formula::until(p2, p3)));
    CHECK(parse_formula("p1 -> p2 -> p3", kProps) ==
          Formula::implication(p1, Formula::implication(p2, p3)));
    CHECK(parse_formula("!p1 & p2", kProps) == Formula::conjunction(Formula::negation(p1), p2));
    CHECK(parse_formula("p1 | p2 & p3", kProps) == Formula::disjunction(p1, Formula::conjunction(p2, p3)));
    CHECK(parse_formula("p1 | p2 U p3", kProps) == Formula::until(Formula::disjunction(p1, p2), p3));
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_formula("X p1", kProps), SyntaxError);
    CHECK_THROWS_AS(parse_formula("p1 &", kProps), SyntaxError);
    CHECK_THROWS_AS(parse_formula("(p1", kProps), SyntaxError);
    CHECK_THROWS_AS(parse_formula("p9", kProps), UnknownProposition);
    try {
        parse_formula("p1 $ p2", kProps);
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.position == 3);
    }
}

TEST_CASE("printing round-trips through the parser") {
    Rng rng(21);
    for (int n = 0; n < 200; ++n) {
        const auto f = random_formula(rng, kProps, uniform(rng, 1, 8));
        CHECK(parse_formula(f.to_string(), kProps) == f);
    }
}

TEST_CASE("evaluation on the agent word") {
    const Lasso<Letter> w{{letter({"p1", "p2"}), letter({"p2", "p3"})}, {letter({"p1", "p3"})}};
    CHECK(eval_lasso(w, parse_formula("p2 U p3", kProps), 1));
    CHECK_FALSE(eval_lasso(w, parse_formula("G p2", kProps), 1));
    CHECK(eval_lasso(w, parse_formula("G F p3", kProps), 1));
    CHECK_FALSE(eval_lasso(w, parse_formula("F G p2", kProps), 1));
}

TEST_CASE("atoms read the first letter") {
    Rng rng(22);
    for (int n = 0; n < 100; ++n) {
        const auto w = random_word(rng, 3, 5);
        for (std::size_t p = 0; p < 3; ++p) {
            CHECK(eval_lasso(w, Formula::atom(p, kProps.name(p)), 1) == ((w.at(1) >> p & 1u) != 0));
        }
    }
}

TEST_CASE("evaluation agrees with the unrolling oracle") {
    Rng rng(23);
    for (int n = 0; n < 1000; ++n) {
        const auto f = random_formula(rng, kProps, uniform(rng, 1, 6));
        const auto w = random_word(rng, 3, 5);
        INFO(f.to_string());
        CHECK(eval_lasso(w, f, 1) == oracle_eval(w, f));
    }
}

TEST_CASE("evaluation is position-consistent along the lasso") {
    Rng rng(24);
    for (int n = 0; n < 200; ++n) {
        const auto f = random_formula(rng, kProps, uniform(rng, 1, 6));
        const auto w = random_word(rng, 3, 5);
        for (std::size_t i = 1; i <= w.span(); ++i) {
            Lasso<Letter> shifted;
            for (std::size_t k = i; k <= w.prefix.size(); ++k) shifted.prefix.push_back(w.at(k));
            const std::size_t start = std::max(i, w.prefix.size() + 1);
            for (std::size_t k = 0; k < w.cycle.size(); ++k) shifted.cycle.push_back(w.at(start + k));
            CHECK(eval_lasso(w, f, i) == oracle_eval(shifted, f));
        }
    }
}

TEST_CASE("trajectory satisfaction") {
    const auto s = agent_system();
    const auto q1 = s.q("q1"), q2 = s.q("q2"), q3 = s.q("q3");
    const auto until = parse_formula("p2 U p3", s.val.props());
    CHECK(trajectory_satisfies({{q1, q2}, {q3}}, until, s.val));
    CHECK(trajectory_satisfies({{q1, q2, q1}, {q3}}, until, s.val));
    CHECK(trajectory_satisfies({{}, {q3}}, parse_formula("p1", s.val.props()), s.val));
}

TEST_CASE("guards") {
    const auto g = parse_guard("p1 & !p2 | p3", kProps);
    CHECK(g.evaluate(letter({"p1"})));
    CHECK_FALSE(g.evaluate(letter({"p1", "p2"})));
    CHECK(g.evaluate(letter({"p3"})));
    CHECK(g.letters(3).count() == 5);
    CHECK_THROWS_AS(parse_guard("F p1", kProps), SyntaxError);
    CHECK_THROWS_AS(parse_guard("p1 U p2", kProps), SyntaxError);

    Rng rng(25);
    for (int n = 0; n < 200; ++n) {
        LetterSet set(8);
        for (Letter l = 0; l < 8; ++l) {
            if (coin(rng, 0.5)) set.insert(l);
        }
        const auto h = Guard::from_letters(set, 3);
        CHECK(h.letters(3) == set);
        CHECK(parse_guard(h.to_string(kProps), kProps).letters(3) == set);
    }
}
