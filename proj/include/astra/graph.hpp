#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "astra/core.hpp"

namespace astra {

/// Finite directed graph with designated roots. Successor lists are kept in
/// insertion order; searches visit them in that order.
struct RootedGraph {
    std::vector<std::size_t> roots;
    std::vector<std::vector<std::size_t>> adj;

    std::size_t size() const { return adj.size(); }
};

/// Nodes reachable from the roots.
std::vector<bool> reachable(const RootedGraph& g);

/// Shortest path from `from` to `to` with at least one edge, as the list of
/// visited nodes (both ends included). Empty if none exists.
std::vector<std::size_t> shortest_path(const RootedGraph& g, std::size_t from, std::size_t to);

/// Some lasso from a root whose cycle visits an accepting node, or nullopt.
/// The prefix runs from a root to that accepting node f inclusive; the cycle
/// lists the nodes after f and ends at f.
std::optional<Lasso<std::size_t>> accepting_lasso(const RootedGraph& g,
                                                  const std::vector<bool>& accepting);

/// Tarjan SCC numbering over all nodes; also reports which components
/// contain a cycle.
struct SccDecomposition {
    std::vector<std::size_t> component;
    std::vector<bool> cyclic;
};

SccDecomposition strongly_connected_components(const RootedGraph& g);

}  // namespace astra
