#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "astra/buchi.hpp"

namespace astra {

enum class Player { Control, Adversary };

/// Two-player game graph with a Buchi objective for Control.
struct GameArena {
    struct Edge {
        std::size_t to;
        std::size_t label;  // action index on control edges
    };

    std::vector<Player> owner;
    std::vector<bool> accepting;
    std::vector<std::vector<Edge>> edges;

    std::size_t size() const { return owner.size(); }
    std::size_t add_node(Player p, bool acc);
};

inline constexpr std::size_t kUnranked = std::numeric_limits<std::size_t>::max();

struct GameSolution {
    std::vector<bool> winning;
    /// Attractor rank towards the recurrent accepting set; kUnranked outside
    /// the winning region.
    std::vector<std::size_t> rank;
    /// Chosen edge index per winning Control node.
    std::vector<std::optional<std::size_t>> strategy;
};

GameSolution solve_buchi_game(const GameArena& arena);

/// Arena of a product: node s < P.size() is the product state s (Control),
/// node P.size() + s * |A| + a is the choice node ((q, x), a) (Adversary).
GameArena product_arena(const ProductAutomaton& p);

}  // namespace astra
