#pragma once

#include <optional>
#include <string>
#include <variant>

#include "astra/buchi.hpp"
#include "astra/game.hpp"
#include "astra/ltl.hpp"
#include "astra/plan.hpp"

namespace astra {

/// A specification prepared for synthesis: the formula (when known) and its
/// total automaton, or the reason why no total automaton was found.
class Specification {
public:
    static Specification from_formula(const Formula& f, const Propositions& props);
    static Specification from_automaton(const BuchiAutomaton& a);

    const std::optional<Formula>& formula() const { return formula_; }
    /// Total automaton, if totalization succeeded.
    const BuchiAutomaton* automaton() const;
    const std::string& unsupported_reason() const { return reason_; }

    /// Independent check of a plan against this specification.
    bool satisfied_by(const ReactivePlan& rp, const Valuation& val) const;
    std::optional<Lasso<State>> counterexample(const ReactivePlan& rp, const Valuation& val) const;

private:
    std::optional<Formula> formula_;
    std::optional<BuchiAutomaton> source_;
    std::optional<BuchiAutomaton> total_;
    std::string reason_;
};

enum class Verdict { Found, NotFound, Unknown };

std::string to_string(Verdict v);

struct PlanResult {
    Verdict verdict;
    std::optional<ReactivePlan> plan;
    std::string reason;  // for Unknown
};

/// Plan for (q0, succ_T) enforcing the specification, via the Buchi game on
/// the product. Found plans are re-verified; failure raises VerificationFailure.
PlanResult find_reactive_plan(const Ats& ats, State q0, const Specification& spec,
                              const Valuation& val);
PlanResult find_reactive_plan(const Ats& ats, State q0, const Formula& f, const Valuation& val);

struct SynthesisResult {
    Verdict verdict;
    std::optional<State> initial;
    std::optional<ReactivePlan> plan;  // simplified
    std::optional<Controller> controller;
    std::string reason;
};

/// Tries initial states in declaration order (or only `initial_hint`).
SynthesisResult synthesize(const Ats& ats, const Specification& spec, const Valuation& val,
                           std::optional<State> initial_hint = std::nullopt);
SynthesisResult synthesize(const Ats& ats, const Formula& f, const Valuation& val,
                           std::optional<State> initial_hint = std::nullopt);

/// Game solution on the product rooted at q0, exposed for simulation.
struct SolvedProduct {
    ProductAutomaton product;
    GameArena arena;
    GameSolution solution;
};

SolvedProduct solve_product(const Ats& ats, State q0, const BuchiAutomaton& total,
                            const Valuation& val);

}  // namespace astra
