#include "astra/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace astra {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Breadth-first predecessor tree from the given sources.
std::vector<std::size_t> bfs_tree(const RootedGraph& g, const std::vector<std::size_t>& sources) {
    std::vector<std::size_t> parent(g.size(), kNone);
    std::vector<bool> seen(g.size(), false);
    std::queue<std::size_t> queue;
    for (auto s : sources) {
        if (seen[s]) continue;
        seen[s] = true;
        parent[s] = s;
        queue.push(s);
    }
    while (!queue.empty()) {
        auto u = queue.front();
        queue.pop();
        for (auto v : g.adj[u]) {
            if (seen[v]) continue;
            seen[v] = true;
            parent[v] = u;
            queue.push(v);
        }
    }
    return parent;
}

std::vector<std::size_t> unwind(const std::vector<std::size_t>& parent, std::size_t to) {
    std::vector<std::size_t> path{to};
    while (parent[path.back()] != path.back()) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

std::vector<bool> reachable(const RootedGraph& g) {
    auto parent = bfs_tree(g, g.roots);
    std::vector<bool> out(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) out[v] = parent[v] != kNone;
    return out;
}

std::vector<std::size_t> shortest_path(const RootedGraph& g, std::size_t from, std::size_t to) {
    // Start from the successors of `from` so that paths have at least one edge.
    std::vector<std::size_t> parent(g.size(), kNone);
    std::vector<bool> seen(g.size(), false);
    std::queue<std::size_t> queue;
    for (auto v : g.adj.at(from)) {
        if (seen[v]) continue;
        seen[v] = true;
        parent[v] = v;
        queue.push(v);
    }
    while (!queue.empty() && !seen[to]) {
        auto u = queue.front();
        queue.pop();
        for (auto v : g.adj[u]) {
            if (seen[v]) continue;
            seen[v] = true;
            parent[v] = u;
            queue.push(v);
        }
    }
    if (!seen[to]) return {};
    auto path = unwind(parent, to);
    path.insert(path.begin(), from);
    return path;
}

SccDecomposition strongly_connected_components(const RootedGraph& g) {
    const std::size_t n = g.size();
    SccDecomposition out{std::vector<std::size_t>(n, kNone), {}};
    std::vector<std::size_t> index(n, kNone), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::size_t counter = 0;

    // Iterative Tarjan: frames hold (node, next child position).
    std::vector<std::pair<std::size_t, std::size_t>> frames;
    for (std::size_t start = 0; start < n; ++start) {
        if (index[start] != kNone) continue;
        frames.push_back({start, 0});
        index[start] = low[start] = counter++;
        stack.push_back(start);
        on_stack[start] = true;
        while (!frames.empty()) {
            auto& [u, pos] = frames.back();
            if (pos < g.adj[u].size()) {
                const std::size_t v = g.adj[u][pos++];
                if (index[v] == kNone) {
                    index[v] = low[v] = counter++;
                    stack.push_back(v);
                    on_stack[v] = true;
                    frames.push_back({v, 0});
                } else if (on_stack[v]) {
                    low[u] = std::min(low[u], index[v]);
                }
                continue;
            }
            const std::size_t done = u;
            frames.pop_back();
            if (!frames.empty()) {
                auto parent = frames.back().first;
                low[parent] = std::min(low[parent], low[done]);
            }
            if (low[done] != index[done]) continue;
            const std::size_t id = out.cyclic.size();
            std::size_t members = 0;
            bool self_loop = false;
            std::size_t w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                out.component[w] = id;
                ++members;
                if (std::find(g.adj[w].begin(), g.adj[w].end(), w) != g.adj[w].end()) self_loop = true;
            } while (w != done);
            out.cyclic.push_back(members > 1 || self_loop);
        }
    }
    return out;
}

std::optional<Lasso<std::size_t>> accepting_lasso(const RootedGraph& g,
                                                  const std::vector<bool>& accepting) {
    if (g.roots.empty()) return std::nullopt;
    auto parent = bfs_tree(g, g.roots);
    auto scc = strongly_connected_components(g);

    // Earliest-discovered reachable accepting node on a cycle.
    std::optional<std::size_t> target;
    {
        std::vector<bool> seen(g.size(), false);
        std::queue<std::size_t> queue;
        for (auto r : g.roots) {
            if (!seen[r]) {
                seen[r] = true;
                queue.push(r);
            }
        }
        while (!queue.empty() && !target) {
            auto u = queue.front();
            queue.pop();
            if (accepting.at(u) && scc.cyclic[scc.component[u]]) {
                target = u;
                break;
            }
            for (auto v : g.adj[u]) {
                if (!seen[v]) {
                    seen[v] = true;
                    queue.push(v);
                }
            }
        }
    }
    if (!target) return std::nullopt;

    const std::size_t f = *target;
    Lasso<std::size_t> out;
    out.prefix = unwind(parent, f);

    // Cycle f -> ... -> f inside the component of f.
    std::vector<bool> inside(g.size(), false);
    for (std::size_t v = 0; v < g.size(); ++v) inside[v] = scc.component[v] == scc.component[f];
    RootedGraph local{{f}, {}};
    local.adj.resize(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (!inside[v]) continue;
        for (auto w : g.adj[v]) {
            if (inside[w]) local.adj[v].push_back(w);
        }
    }
    auto cycle = shortest_path(local, f, f);
    out.cycle.assign(cycle.begin() + 1, cycle.end());
    return out;
}

}  // namespace astra
