#include <catch_amalgamated.hpp>

#include "astra/completeness.hpp"
#include "astra/graph.hpp"
#include "astra/planner.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace astra;
using namespace astra::testing;

namespace {

struct Built {
    ProductAutomaton product;
    AcceptingTransitionSystem tfin;
    ReactivePlan plan;
};

Built build(const Ats& ats, const BuchiAutomaton& total, const Valuation& val, const ReactivePlan& rp) {
    auto p = product(ats, rp.at(1).world, total, val);
    auto tf = build_tfin(p, Controller(rp));
    auto plan = plan_from_tfin(tf, p);
    return {std::move(p), std::move(tf), std::move(plan)};
}

// Structural invariants of T_fin for the controller of `rp`.
void check_shape(const Ats& ats, const Built& b, const ReactivePlan& rp) {
    const auto& p = b.product;
    const auto& tf = b.tfin;
    REQUIRE(tf.size() > 0);
    CHECK(tf.nodes[0] == std::vector<ProductState>{p.initial()});
    for (std::size_t i = 0; i < tf.size(); ++i) {
        const auto& node = tf.nodes[i];
        CHECK_FALSE(ren(node, p.accepting()).has_value());
        CHECK(node.size() <= tfin_cap(p));

        StateSequence worlds({p.world(node[0])});
        for (std::size_t k = 1; k < node.size(); ++k) worlds = worlds.extended(p.world(node[k]));
        CHECK(tf.actions[i] == strategy_action(rp, worlds));

        for (auto j : tf.edges[i]) {
            const auto& succ = p.successors(tf.label(i), tf.actions[i]);
            CHECK(std::find(succ.begin(), succ.end(), tf.label(j)) != succ.end());
            auto extended = node;
            extended.push_back(tf.label(j));
            if (tf.nodes[j] == extended) continue;
            // Fold-back: the extension repeats an accepting state and the
            // target is the proper prefix ending there.
            CHECK(p.is_accepting(tf.label(j)));
            CHECK(ren(extended, p.accepting()).has_value());
            REQUIRE(tf.nodes[j].size() < extended.size());
            CHECK(std::equal(tf.nodes[j].begin(), tf.nodes[j].end(), extended.begin()));
        }
        // Every world successor of the chosen action is covered.
        for (auto q : ats.successors(p.world(tf.label(i)), tf.actions[i])) {
            bool covered = false;
            for (auto j : tf.edges[i]) covered = covered || p.world(tf.label(j)) == q;
            CHECK(covered);
        }
    }
    // No cycle stays among non-accepting labels.
    RootedGraph g{{0}, {}};
    g.adj.resize(tf.size());
    for (std::size_t i = 0; i < tf.size(); ++i) {
        if (p.is_accepting(tf.label(i))) continue;
        for (auto j : tf.edges[i]) {
            if (!p.is_accepting(tf.label(j))) g.adj[i].push_back(j);
        }
    }
    const auto scc = strongly_connected_components(g);
    for (std::size_t i = 0; i < tf.size(); ++i) CHECK_FALSE(scc.cyclic[scc.component[i]]);
}

}  // namespace

TEST_CASE("recurrence index") {
    const std::vector<bool> acc{true, false};
    CHECK_FALSE(ren({0, 1}, acc).has_value());
    CHECK(ren({0, 1, 0}, acc) == std::optional<std::size_t>{3});
    CHECK_FALSE(ren({1, 1, 1}, acc).has_value());
    CHECK(ren({1, 0, 1, 0, 0}, acc) == std::optional<std::size_t>{4});
}

TEST_CASE("recurrence index is infinite on every shorter prefix") {
    Rng rng(71);
    for (int n = 0; n < 500; ++n) {
        std::vector<bool> acc(4);
        for (auto&& a : acc) a = coin(rng, 0.5);
        std::vector<ProductState> seq;
        const std::size_t len = uniform(rng, 1, 10);
        for (std::size_t i = 0; i < len; ++i) seq.push_back(uniform(rng, 0, 3));
        const auto r = ren(seq, acc);
        if (!r) continue;
        CHECK(acc[seq[*r - 1]]);
        for (std::size_t k = 1; k < *r; ++k) {
            CHECK_FALSE(ren(std::vector<ProductState>(seq.begin(), seq.begin() + k), acc).has_value());
        }
    }
}

TEST_CASE("single accepting loop folds back onto itself") {
    const auto s = single_disturbance_system({"q"}, {"a"}, {}, {{"q", {"p"}}}, {"p"});
    const auto spec = Specification::from_formula(parse_formula("G p", s.val.props()), s.val.props());
    REQUIRE(spec.automaton());
    const ReactivePlan rp({{1, 0, 0, {1}}});
    const auto b = build(s.ats, *spec.automaton(), s.val, rp);
    REQUIRE(b.tfin.size() == 1);
    CHECK(b.tfin.edges[0] == std::vector<std::size_t>{0});
    CHECK(b.plan == ReactivePlan({{1, 0, 0, {1}}}));
}

TEST_CASE("agent plan: accepting labels fold back") {
    const auto s = agent_system();
    const auto f = parse_formula("p2 U p3", s.val.props());
    const auto spec = Specification::from_formula(f, s.val.props());
    REQUIRE(spec.automaton());
    const auto rp = agent_plan(s);
    const auto b = build(s.ats, *spec.automaton(), s.val, rp);
    check_shape(s.ats, b, rp);
    bool folded = false;
    for (std::size_t i = 0; i < b.tfin.size(); ++i) {
        for (auto j : b.tfin.edges[i]) folded = folded || b.tfin.nodes[j].size() <= b.tfin.nodes[i].size();
    }
    CHECK(folded);
    CHECK(b.plan.size() == b.tfin.size());
    CHECK(plan_satisfies(b.plan, f, s.val));
}

TEST_CASE("a losing controller exceeds the length cap") {
    const auto s = agent_system();
    const auto spec = Specification::from_formula(parse_formula("G p2", s.val.props()), s.val.props());
    REQUIRE(spec.automaton());
    const ReactivePlan rp({{1, s.q("q1"), s.a("b1"), {2}}, {2, s.q("q3"), s.a("a3"), {2}}});
    const auto p = product(s.ats, s.q("q1"), *spec.automaton(), s.val);
    CHECK(tfin_cap(p) == p.full_size() * (p.full_accepting() + 1) + 1);
    CHECK_THROWS_AS(build_tfin(p, Controller(rp)), CapExceeded);
}

TEST_CASE("round trip on synthesized controllers") {
    const auto corpus = spec_corpus(72, 150);
    int found = 0;
    for (const auto& inst : corpus) {
        const auto r = synthesize(inst.sys.ats, inst.spec, inst.sys.val);
        if (r.verdict != Verdict::Found) continue;
        ++found;
        const auto b = build(inst.sys.ats, *inst.spec.automaton(), inst.sys.val, *r.plan);
        check_shape(inst.sys.ats, b, *r.plan);
        CHECK(b.plan.size() == b.tfin.size());
        for (std::size_t i = 0; i < b.tfin.size(); ++i) {
            const auto& scr = b.plan.at(i + 1);
            CHECK(scr.world == b.product.world(b.tfin.label(i)));
            CHECK(scr.action == b.tfin.actions[i]);
        }
        INFO(inst.formula.to_string());
        CHECK(plan_satisfies(b.plan, inst.formula, inst.sys.val));
        CHECK(plan_satisfies(b.plan, *inst.spec.automaton(), inst.sys.val));
    }
    CHECK(found > 50);
}

TEST_CASE("lifting a world trajectory into the product is unique") {
    const auto corpus = spec_corpus(73, 60);
    Rng rng(74);
    for (const auto& inst : corpus) {
        const auto& a = *inst.spec.automaton();
        const auto& ats = inst.sys.ats;
        for (int n = 0; n < 10; ++n) {
            std::vector<State> worlds{uniform(rng, 0, ats.num_states() - 1)};
            for (int k = 0; k < 5; ++k) {
                const auto w = ats.successors(worlds.back(), uniform(rng, 0, ats.num_controls() - 1));
                worlds.push_back(w[uniform(rng, 0, w.size() - 1)]);
            }
            std::vector<AutState> runs{a.initial().front()};
            for (std::size_t k = 0; k + 1 < worlds.size(); ++k) {
                std::vector<AutState> next;
                for (auto x : runs) {
                    for (auto y : a.successors(x, inst.sys.val(worlds[k]))) next.push_back(y);
                }
                runs = next;
                CHECK(runs.size() == 1);
            }
        }
    }
}
