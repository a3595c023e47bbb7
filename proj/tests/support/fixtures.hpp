#pragma once

#include <map>
#include <string>
#include <vector>

#include "astra/core.hpp"
#include "astra/plan.hpp"

namespace astra::testing {

struct SystemFixture {
    Ats ats;
    Valuation val;
    RawSystem raw;

    State q(const std::string& name) const { return ats.states().at(name); }
    Control a(const std::string& name) const { return ats.controls().at(name); }
};

/// Builds a system with a single disturbance "b". Moves not listed in
/// `moves` are idle self-loops.
inline SystemFixture single_disturbance_system(
    const std::vector<std::string>& states, const std::vector<std::string>& controls,
    const std::map<std::pair<std::string, std::string>, std::vector<std::string>>& moves,
    const std::vector<std::pair<std::string, std::vector<std::string>>>& valuation,
    const std::vector<std::string>& props) {
    RawSystem raw;
    raw.states = states;
    raw.controls = controls;
    raw.disturbances = {"b"};
    for (const auto& q : states) {
        for (const auto& a : controls) {
            auto it = moves.find({q, a});
            if (it == moves.end()) {
                raw.transitions.push_back({q, a, "b", q});
                continue;
            }
            for (const auto& t : it->second) raw.transitions.push_back({q, a, "b", t});
        }
    }
    raw.valuation = valuation;
    Ats ats = validate_ats(raw);
    Valuation val = make_valuation(ats, raw, Propositions(props));
    return {std::move(ats), std::move(val), std::move(raw)};
}

/// The three-state agent: q1 -a1-> q2, q1 -b1-> q3, q2 -a2-> {q1, q3},
/// q3 -a3-> q3, labeled {p1,p2}, {p2,p3}, {p1,p3}.
inline SystemFixture agent_system() {
    return single_disturbance_system(
        {"q1", "q2", "q3"}, {"a1", "b1", "a2", "a3"},
        {{{"q1", "a1"}, {"q2"}},
         {{"q1", "b1"}, {"q3"}},
         {{"q2", "a2"}, {"q1", "q3"}},
         {{"q3", "a3"}, {"q3"}}},
        {{"q1", {"p1", "p2"}}, {"q2", {"p2", "p3"}}, {"q3", {"p1", "p3"}}}, {"p1", "p2", "p3"});
}

/// {(1,q1,a1,{2}), (2,q2,a2,{3,4}), (3,q3,a3,{3}), (4,q1,b1,{3})}
inline ReactivePlan agent_plan(const SystemFixture& s) {
    return ReactivePlan({{1, s.q("q1"), s.a("a1"), {2}},
                         {2, s.q("q2"), s.a("a2"), {3, 4}},
                         {3, s.q("q3"), s.a("a3"), {3}},
                         {4, s.q("q1"), s.a("b1"), {3}}});
}

/// System underlying the four-rule plan with a duplicated world successor.
inline SystemFixture loop_system() {
    return single_disturbance_system(
        {"q1", "q2", "q3"}, {"a1", "a2", "a3", "a4"},
        {{{"q1", "a1"}, {"q2"}},
         {{"q2", "a2"}, {"q1"}},
         {{"q3", "a3"}, {"q1"}},
         {{"q1", "a4"}, {"q3"}}},
        {{"q1", {"p1"}}, {"q2", {"p2"}}, {"q3", {"p3"}}}, {"p1", "p2", "p3"});
}

/// {(1,q1,a1,{2}), (2,q2,a2,{1,4}), (3,q3,a3,{1}), (4,q1,a4,{3})}
inline ReactivePlan loop_plan(const SystemFixture& s) {
    return ReactivePlan({{1, s.q("q1"), s.a("a1"), {2}},
                         {2, s.q("q2"), s.a("a2"), {1, 4}},
                         {3, s.q("q3"), s.a("a3"), {1}},
                         {4, s.q("q1"), s.a("a4"), {3}}});
}

}  // namespace astra::testing
