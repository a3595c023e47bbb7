#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "astra/buchi.hpp"
#include "astra/core.hpp"
#include "astra/ltl.hpp"

namespace astra {

using PlanId = std::size_t;  // 1-based plan state number

/// Situation control rule (n, q, a, N).
struct Scr {
    PlanId id;
    State world;
    Control action;
    std::vector<PlanId> successors;  // sorted, deduplicated

    bool operator==(const Scr&) const = default;
};

/// Reactive plan with plan states numbered 1..k.
class ReactivePlan {
public:
    /// Ids must be exactly 1..k in some order; successors must exist.
    explicit ReactivePlan(std::vector<Scr> scrs);

    std::size_t size() const { return scrs_.size(); }
    const Scr& at(PlanId id) const { return scrs_.at(id - 1); }
    const std::vector<Scr>& scrs() const { return scrs_; }

    bool operator==(const ReactivePlan&) const = default;

private:
    std::vector<Scr> scrs_;
};

/// Throws InvalidPlan unless every SCR uses declared symbols, lists only
/// real world successors, and covers every world successor of its action.
void check_plan_against(const ReactivePlan& rp, const Ats& ats);

/// Throws UniquenessViolated when two successors of an SCR share a world.
void check_uniqueness(const ReactivePlan& rp);

bool plan_trajectory_exists(const ReactivePlan& rp);

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

/// Canonical world-state lassos of plan-state lassos from plan state 1 with
/// |u| + |v| <= bound.
std::set<Lasso<State>> plan_trajectories(const ReactivePlan& rp, std::size_t bound,
                                         std::size_t cap = kDefaultEnumerationCap);

bool plan_satisfies(const ReactivePlan& rp, const Formula& f, const Valuation& val);
/// Variant for a specification given by a total automaton.
bool plan_satisfies(const ReactivePlan& rp, const BuchiAutomaton& total, const Valuation& val);

/// A generated trajectory violating the specification, if any.
std::optional<Lasso<State>> plan_counterexample(const ReactivePlan& rp, const Formula& f,
                                                const Valuation& val);
std::optional<Lasso<State>> plan_counterexample(const ReactivePlan& rp,
                                                const BuchiAutomaton& total,
                                                const Valuation& val);

struct ReachableCycle {
    std::vector<PlanId> prefix;
    std::vector<PlanId> suffix;

    bool operator==(const ReachableCycle&) const = default;
};

std::optional<ReachableCycle> find_reachable_cycle(const ReactivePlan& rp);

/// Keeps one successor per world state in every SCR, preferring edges of the
/// reachable cycle found by find_reachable_cycle.
ReactivePlan simplify_plan(const ReactivePlan& rp);

/// f_RP(s): the action of the plan state reached by the unique plan path
/// matching s, or the action of plan state 1 when there is none.
Control strategy_action(const ReactivePlan& rp, const StateSequence& s);

/// Finite-memory executable form of f_RP.
class Controller {
public:
    enum class Phase { Start, Tracking, Detached };

    explicit Controller(std::shared_ptr<const ReactivePlan> plan);
    explicit Controller(ReactivePlan plan)
        : Controller(std::make_shared<const ReactivePlan>(std::move(plan))) {}

    const ReactivePlan& plan() const { return *plan_; }
    Phase phase() const { return phase_; }
    /// Current plan state while Tracking.
    std::optional<PlanId> cursor() const;
    Control default_action() const { return plan_->at(1).action; }

    friend std::pair<Controller, Control> controller_step(const Controller& c, State observed);

    bool operator==(const Controller& other) const {
        return plan_ == other.plan_ && phase_ == other.phase_ && cursor_ == other.cursor_;
    }

private:
    std::shared_ptr<const ReactivePlan> plan_;
    Phase phase_ = Phase::Start;
    PlanId cursor_ = 0;
};

std::pair<Controller, Control> controller_step(const Controller& c, State observed);

/// Out^n(q, f) for the strategy executed by `ctrl`.
std::set<StateSequence> outcomes_prefixes(const Ats& ats, State q, const Controller& ctrl,
                                          std::size_t n, std::size_t cap = kDefaultEnumerationCap);

/// Canonical lassos of Out(q, f) with |u| + |v| <= bound, enumerated on the
/// finite closed loop of the system with the controller.
std::set<Lasso<State>> outcome_lassos(const Ats& ats, State q, const Controller& ctrl,
                                      std::size_t bound, std::size_t cap = kDefaultEnumerationCap);

}  // namespace astra
