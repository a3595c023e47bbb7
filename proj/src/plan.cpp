#include "astra/plan.hpp"

#include <algorithm>
#include <map>

#include "astra/graph.hpp"
#include "lassos.hpp"

namespace astra {

ReactivePlan::ReactivePlan(std::vector<Scr> scrs) : scrs_(std::move(scrs)) {
    if (scrs_.empty()) throw InvalidPlan("a reactive plan needs at least the SCR of plan state 1");
    std::sort(scrs_.begin(), scrs_.end(), [](const Scr& a, const Scr& b) { return a.id < b.id; });
    for (std::size_t i = 0; i < scrs_.size(); ++i) {
        if (scrs_[i].id != i + 1) {
            throw InvalidPlan("plan state ids must be exactly 1.." + std::to_string(scrs_.size()));
        }
    }
    for (auto& scr : scrs_) {
        auto& n = scr.successors;
        std::sort(n.begin(), n.end());
        n.erase(std::unique(n.begin(), n.end()), n.end());
        for (auto j : n) {
            if (j < 1 || j > scrs_.size()) {
                throw InvalidPlan("plan state " + std::to_string(scr.id) +
                                  " refers to missing plan state " + std::to_string(j));
            }
        }
    }
}

void check_plan_against(const ReactivePlan& rp, const Ats& ats) {
    for (const auto& scr : rp.scrs()) {
        if (scr.world >= ats.num_states()) {
            throw InvalidPlan("plan state " + std::to_string(scr.id) + " has an undeclared world state");
        }
        if (scr.action >= ats.num_controls()) {
            throw InvalidPlan("plan state " + std::to_string(scr.id) + " has an undeclared action");
        }
        auto succ = ats.successors(scr.world, scr.action);
        for (auto j : scr.successors) {
            const State q = rp.at(j).world;
            if (!std::binary_search(succ.begin(), succ.end(), q)) {
                throw InvalidPlan("plan state " + std::to_string(scr.id) + " lists successor " +
                                  std::to_string(j) + " labeled " + ats.states().name(q) +
                                  ", which is not reachable under " +
                                  ats.controls().name(scr.action));
            }
        }
        for (auto q : succ) {
            const bool covered = std::any_of(scr.successors.begin(), scr.successors.end(),
                                             [&](PlanId j) { return rp.at(j).world == q; });
            if (!covered) {
                throw InvalidPlan("plan state " + std::to_string(scr.id) +
                                  " does not cover world successor " + ats.states().name(q) +
                                  " of action " + ats.controls().name(scr.action));
            }
        }
    }
}

void check_uniqueness(const ReactivePlan& rp) {
    for (const auto& scr : rp.scrs()) {
        std::map<State, PlanId> seen;
        for (auto j : scr.successors) {
            auto [it, fresh] = seen.emplace(rp.at(j).world, j);
            if (!fresh) throw UniquenessViolated(scr.id, it->second, j);
        }
    }
}

namespace {

// Plan graph on 0-based nodes, rooted at plan state 1.
RootedGraph plan_graph(const ReactivePlan& rp) {
    RootedGraph g{{0}, std::vector<std::vector<std::size_t>>(rp.size())};
    for (const auto& scr : rp.scrs()) {
        for (auto j : scr.successors) g.adj[scr.id - 1].push_back(j - 1);
    }
    return g;
}

// Plan graph times a Buchi automaton reading the world labels.
struct PlanProduct {
    RootedGraph graph;
    std::size_t aut_states;

    State world(const ReactivePlan& rp, std::size_t node) const {
        return rp.at(node % (rp.size() * aut_states) / aut_states + 1).world;
    }
};

PlanProduct plan_product(const ReactivePlan& rp, const BuchiAutomaton& a, const Valuation& val,
                         bool two_copies) {
    const std::size_t k = rp.size();
    const std::size_t m = a.num_states();
    const std::size_t copy = k * m;
    PlanProduct out{{{}, std::vector<std::vector<std::size_t>>(two_copies ? 2 * copy : copy)}, m};
    for (auto x0 : a.initial()) out.graph.roots.push_back(x0);
    for (const auto& scr : rp.scrs()) {
        const Letter l = val(scr.world);
        for (AutState x = 0; x < m; ++x) {
            const std::size_t from = (scr.id - 1) * m + x;
            for (auto y : a.successors(x, l)) {
                for (auto j : scr.successors) {
                    const std::size_t to = (j - 1) * m + y;
                    out.graph.adj[from].push_back(to);
                    if (two_copies && !a.is_accepting(y)) {
                        out.graph.adj[from].push_back(copy + to);
                        if (!a.is_accepting(x)) out.graph.adj[copy + from].push_back(copy + to);
                    }
                }
            }
        }
    }
    return out;
}

Lasso<State> to_worlds(const ReactivePlan& rp, const PlanProduct& p, const Lasso<std::size_t>& l) {
    return l.map([&](std::size_t node) { return p.world(rp, node); }).canonical();
}

}  // namespace

bool plan_trajectory_exists(const ReactivePlan& rp) {
    auto g = plan_graph(rp);
    return accepting_lasso(g, std::vector<bool>(g.size(), true)).has_value();
}

std::set<Lasso<State>> plan_trajectories(const ReactivePlan& rp, std::size_t bound,
                                         std::size_t cap) {
    return detail::enumerate_lassos(plan_graph(rp), bound, cap,
                                    [&](std::size_t node) { return rp.at(node + 1).world; });
}

std::optional<Lasso<State>> plan_counterexample(const ReactivePlan& rp, const Formula& f,
                                                const Valuation& val) {
    auto negated = ltl_to_buchi(Formula::negation(f), val.props());
    auto p = plan_product(rp, negated, val, false);
    std::vector<bool> accepting(p.graph.size());
    for (std::size_t v = 0; v < accepting.size(); ++v) {
        accepting[v] = negated.is_accepting(v % negated.num_states());
    }
    auto lasso = accepting_lasso(p.graph, accepting);
    if (!lasso) return std::nullopt;
    return to_worlds(rp, p, *lasso);
}

std::optional<Lasso<State>> plan_counterexample(const ReactivePlan& rp,
                                                const BuchiAutomaton& total,
                                                const Valuation& val) {
    if (!is_total(total)) throw Error("automaton specification must be total");
    // A run that stays outside F from some point on is a violation: the
    // second copy keeps only non-accepting automaton states.
    auto p = plan_product(rp, total, val, true);
    std::vector<bool> accepting(p.graph.size(), false);
    for (std::size_t v = rp.size() * total.num_states(); v < accepting.size(); ++v) {
        accepting[v] = true;
    }
    auto lasso = accepting_lasso(p.graph, accepting);
    if (!lasso) return std::nullopt;
    return to_worlds(rp, p, *lasso);
}

bool plan_satisfies(const ReactivePlan& rp, const Formula& f, const Valuation& val) {
    return plan_trajectory_exists(rp) && !plan_counterexample(rp, f, val);
}

bool plan_satisfies(const ReactivePlan& rp, const BuchiAutomaton& total, const Valuation& val) {
    return plan_trajectory_exists(rp) && !plan_counterexample(rp, total, val);
}

std::optional<ReachableCycle> find_reachable_cycle(const ReactivePlan& rp) {
    auto g = plan_graph(rp);
    auto to_ids = [](std::vector<std::size_t> path) {
        for (auto& v : path) ++v;
        return path;
    };
    for (std::size_t i = 0; i < rp.size(); ++i) {
        auto suffix = shortest_path(g, i, i);
        if (suffix.empty()) continue;
        auto prefix = i == 0 ? suffix : shortest_path(g, 0, i);
        if (prefix.empty()) continue;
        return ReachableCycle{to_ids(prefix), to_ids(suffix)};
    }
    return std::nullopt;
}

ReactivePlan simplify_plan(const ReactivePlan& rp) {
    auto cycle = find_reachable_cycle(rp);
    if (!cycle) return rp;
    auto on_path = [](const std::vector<PlanId>& path, PlanId i, PlanId j) {
        for (std::size_t n = 0; n + 1 < path.size(); ++n) {
            if (path[n] == i && path[n + 1] == j) return true;
        }
        return false;
    };
    std::vector<Scr> out;
    for (const auto& scr : rp.scrs()) {
        std::map<State, std::vector<PlanId>> groups;
        for (auto j : scr.successors) groups[rp.at(j).world].push_back(j);
        Scr simplified = scr;
        simplified.successors.clear();
        for (const auto& [world, members] : groups) {
            PlanId keep = members.front();
            auto hit = [&](const std::vector<PlanId>& path) {
                return std::find_if(members.begin(), members.end(),
                                    [&](PlanId j) { return on_path(path, scr.id, j); });
            };
            if (auto it = hit(cycle->prefix); it != members.end()) keep = *it;
            else if (auto it2 = hit(cycle->suffix); it2 != members.end()) keep = *it2;
            simplified.successors.push_back(keep);
        }
        out.push_back(std::move(simplified));
    }
    return ReactivePlan(std::move(out));
}

Control strategy_action(const ReactivePlan& rp, const StateSequence& s) {
    check_uniqueness(rp);
    const Control a1 = rp.at(1).action;
    if (s[1] != rp.at(1).world) return a1;
    PlanId cur = 1;
    for (std::size_t i = 2; i <= s.size(); ++i) {
        const auto& n = rp.at(cur).successors;
        auto it = std::find_if(n.begin(), n.end(), [&](PlanId j) { return rp.at(j).world == s[i]; });
        if (it == n.end()) return a1;
        cur = *it;
    }
    return rp.at(cur).action;
}

}  // namespace astra
