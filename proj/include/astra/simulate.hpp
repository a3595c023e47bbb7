#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "astra/core.hpp"
#include "astra/plan.hpp"
#include "astra/planner.hpp"

namespace astra {

enum class DisturbancePolicy { Random, Adversarial, Scripted };

struct SimulationOptions {
    DisturbancePolicy policy = DisturbancePolicy::Random;
    std::uint64_t seed = 0;
    std::size_t steps = 20;
    /// Disturbances for the scripted policy; the run stops when exhausted.
    std::vector<Disturbance> script;
};

struct SimulationStep {
    std::size_t step;
    State state;
    Control action;
    Disturbance disturbance;
    State next;
};

struct SimulationResult {
    std::vector<SimulationStep> steps;
    /// The controller left the plan at some step.
    bool detached = false;
    /// Some (plan state, world state) pair was visited twice.
    bool lasso_detected = false;

    std::string verdict() const {
        return lasso_detected ? "satisfied (lasso detected)" : "inconclusive prefix";
    }
};

/// Closed loop of the system with the plan's controller from the world
/// state of plan state 1. The adversarial policy needs the solved product
/// rooted at that state.
SimulationResult simulate(const Ats& ats, const ReactivePlan& plan, const SimulationOptions& opts,
                          const SolvedProduct* adversary = nullptr);

/// One line per step: "step state action disturbance next".
std::string format_trace(const SimulationResult& r, const Ats& ats);

}  // namespace astra
