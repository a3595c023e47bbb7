#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "astra/core.hpp"
#include "astra/game.hpp"
#include "astra/ltl.hpp"
#include "astra/plan.hpp"
#include "astra/planner.hpp"

namespace astra::testing {

using Rng = std::mt19937_64;

struct SystemInstance {
    Ats ats;
    Valuation val;
};

struct SystemLimits {
    std::size_t max_states = 5;
    std::size_t max_controls = 2;
    std::size_t max_disturbances = 2;
    std::size_t max_props = 3;
};

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);  // inclusive
bool coin(Rng& rng, double p);

SystemInstance random_system(Rng& rng, const SystemLimits& limits = {});

/// Core-grammar formula with exactly `size` nodes.
Formula random_formula(Rng& rng, const Propositions& props, std::size_t size);

Lasso<Letter> random_word(Rng& rng, std::size_t num_props, std::size_t max_span);
Lasso<State> random_state_lasso(Rng& rng, std::size_t num_states, std::size_t max_span);

/// Plan over `num_worlds` worlds and `num_actions` actions; every plan state
/// has at least one successor.
ReactivePlan random_plan(Rng& rng, std::size_t max_scrs, std::size_t num_worlds,
                         std::size_t num_actions);

/// Arena without dead ends.
GameArena random_arena(Rng& rng, std::size_t max_nodes);

/// Random system and formula whose automaton totalizes.
struct SpecInstance {
    SystemInstance sys;
    Formula formula;
    Specification spec;
};

/// `count` instances drawn from one seed, formulas of size at most 6.
std::vector<SpecInstance> spec_corpus(std::uint64_t seed, std::size_t count);

}  // namespace astra::testing
