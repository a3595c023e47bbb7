#include "astra/planner.hpp"

#include <map>
#include <queue>

#include "astra/log.hpp"

namespace astra {

Specification Specification::from_formula(const Formula& f, const Propositions& props) {
    Specification s;
    s.formula_ = f;
    s.source_ = ltl_to_buchi(f, props);
    auto total = totalize(*s.source_);
    if (auto* a = std::get_if<BuchiAutomaton>(&total)) s.total_ = std::move(*a);
    else s.reason_ = std::get<Unsupported>(total).reason;
    return s;
}

Specification Specification::from_automaton(const BuchiAutomaton& a) {
    Specification s;
    s.source_ = a;
    auto total = totalize(a);
    if (auto* t = std::get_if<BuchiAutomaton>(&total)) s.total_ = std::move(*t);
    else s.reason_ = std::get<Unsupported>(total).reason;
    return s;
}

const BuchiAutomaton* Specification::automaton() const { return total_ ? &*total_ : nullptr; }

std::optional<Lasso<State>> Specification::counterexample(const ReactivePlan& rp,
                                                          const Valuation& val) const {
    if (formula_) return plan_counterexample(rp, *formula_, val);
    if (total_) return plan_counterexample(rp, *total_, val);
    throw Error("specification automaton is not total: " + reason_);
}

bool Specification::satisfied_by(const ReactivePlan& rp, const Valuation& val) const {
    return plan_trajectory_exists(rp) && !counterexample(rp, val);
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Found:
            return "found";
        case Verdict::NotFound:
            return "not found";
        case Verdict::Unknown:
            return "unknown";
    }
    return "?";
}

SolvedProduct solve_product(const Ats& ats, State q0, const BuchiAutomaton& total,
                            const Valuation& val) {
    auto p = product(ats, q0, total, val);
    auto arena = product_arena(p);
    auto solution = solve_buchi_game(arena);
    return {std::move(p), std::move(arena), std::move(solution)};
}

PlanResult find_reactive_plan(const Ats& ats, State q0, const Specification& spec,
                              const Valuation& val) {
    const BuchiAutomaton* a = spec.automaton();
    if (!a) return {Verdict::Unknown, std::nullopt, spec.unsupported_reason()};

    auto solved = solve_product(ats, q0, *a, val);
    const auto& p = solved.product;
    log_debug("product from " + ats.states().name(q0) + ": " + std::to_string(p.size()) +
              " states, arena " + std::to_string(solved.arena.size()) + " nodes");
    if (!solved.solution.winning[p.initial()]) return {Verdict::NotFound, std::nullopt, {}};

    // Unfold the positional strategy breadth-first from (q0, x0).
    std::map<ProductState, PlanId> ids;
    std::vector<ProductState> order;
    auto id_of = [&](ProductState s) {
        auto [it, fresh] = ids.emplace(s, order.size() + 1);
        if (fresh) order.push_back(s);
        return it->second;
    };
    id_of(p.initial());
    std::vector<Scr> scrs;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const ProductState s = order[i];
        const auto edge = solved.solution.strategy[s];
        if (!edge) throw VerificationFailure("strategy undefined on a reachable winning state");
        const Control action = solved.arena.edges[s][*edge].label;
        Scr scr{i + 1, p.world(s), action, {}};
        for (Disturbance b = 0; b < ats.num_disturbances(); ++b) {
            for (auto t : p.post(s, action, b)) scr.successors.push_back(id_of(t));
        }
        scrs.push_back(std::move(scr));
    }
    ReactivePlan plan(std::move(scrs));
    if (!spec.satisfied_by(plan, val)) {
        throw VerificationFailure("synthesized plan from " + ats.states().name(q0) +
                                  " fails independent verification");
    }
    return {Verdict::Found, std::move(plan), {}};
}

PlanResult find_reactive_plan(const Ats& ats, State q0, const Formula& f, const Valuation& val) {
    return find_reactive_plan(ats, q0, Specification::from_formula(f, val.props()), val);
}

SynthesisResult synthesize(const Ats& ats, const Specification& spec, const Valuation& val,
                           std::optional<State> initial_hint) {
    if (!spec.automaton()) {
        return {Verdict::Unknown, std::nullopt, std::nullopt, std::nullopt, spec.unsupported_reason()};
    }
    std::vector<State> candidates;
    if (initial_hint) candidates.push_back(*initial_hint);
    else for (State q = 0; q < ats.num_states(); ++q) candidates.push_back(q);

    for (auto q0 : candidates) {
        auto result = find_reactive_plan(ats, q0, spec, val);
        if (result.verdict != Verdict::Found) continue;
        log_info("plan found from " + ats.states().name(q0) + " with " +
                 std::to_string(result.plan->size()) + " plan states");
        auto simplified = simplify_plan(*result.plan);
        Controller ctrl(simplified);
        return {Verdict::Found, q0, std::move(simplified), std::move(ctrl), {}};
    }
    return {Verdict::NotFound, std::nullopt, std::nullopt, std::nullopt, {}};
}

SynthesisResult synthesize(const Ats& ats, const Formula& f, const Valuation& val,
                           std::optional<State> initial_hint) {
    return synthesize(ats, Specification::from_formula(f, val.props()), val, initial_hint);
}

}  // namespace astra
