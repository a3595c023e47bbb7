#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "astra/core.hpp"
#include "astra/graph.hpp"

namespace astra::detail {

/// Labels of every lasso u.v^w of g from its first root with |u| + |v| <=
/// bound, canonicalized. Throws ExplosionGuard after `cap` explored paths.
template <typename Label>
std::set<Lasso<State>> enumerate_lassos(const RootedGraph& g, std::size_t bound, std::size_t cap,
                                        Label&& label) {
    std::set<Lasso<State>> out;
    if (g.roots.empty() || bound == 0) return out;
    std::size_t explored = 0;
    std::vector<std::size_t> path{g.roots.front()};
    // Each frame remembers the next successor to try for path[depth].
    std::vector<std::size_t> next_child{0};

    auto close_cycles = [&] {
        const std::size_t last = path.back();
        const auto& succ = g.adj[last];
        for (std::size_t c = 0; c < path.size(); ++c) {
            if (std::find(succ.begin(), succ.end(), path[c]) == succ.end()) continue;
            Lasso<State> l;
            for (std::size_t i = 0; i < c; ++i) l.prefix.push_back(label(path[i]));
            for (std::size_t i = c; i < path.size(); ++i) l.cycle.push_back(label(path[i]));
            out.insert(l.canonical());
        }
    };

    close_cycles();
    while (!path.empty()) {
        const std::size_t u = path.back();
        auto& pos = next_child.back();
        if (path.size() < bound && pos < g.adj[u].size()) {
            const std::size_t v = g.adj[u][pos++];
            if (++explored > cap) throw ExplosionGuard(cap);
            path.push_back(v);
            next_child.push_back(0);
            close_cycles();
            continue;
        }
        path.pop_back();
        next_child.pop_back();
    }
    return out;
}

}  // namespace astra::detail
