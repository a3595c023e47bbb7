#include "astra/game.hpp"

#include <algorithm>
#include <queue>

namespace astra {

std::size_t GameArena::add_node(Player p, bool acc) {
    owner.push_back(p);
    accepting.push_back(acc);
    edges.emplace_back();
    return owner.size() - 1;
}

namespace {

struct Attractor {
    std::vector<bool> inside;
    std::vector<std::size_t> rank;
};

// Control attractor of `target`, with breadth-first ranks.
Attractor attract(const GameArena& g, const std::vector<std::vector<std::size_t>>& preds,
                  const std::vector<bool>& target) {
    const std::size_t n = g.size();
    Attractor out{std::vector<bool>(n, false), std::vector<std::size_t>(n, kUnranked)};
    std::vector<std::size_t> pending(n);
    for (std::size_t v = 0; v < n; ++v) pending[v] = g.edges[v].size();
    std::queue<std::size_t> queue;
    for (std::size_t v = 0; v < n; ++v) {
        if (!target[v]) continue;
        out.inside[v] = true;
        out.rank[v] = 0;
        queue.push(v);
    }
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop();
        for (auto u : preds[v]) {
            if (out.inside[u]) continue;
            if (g.owner[u] == Player::Adversary && --pending[u] > 0) continue;
            out.inside[u] = true;
            out.rank[u] = out.rank[v] + 1;
            queue.push(u);
        }
    }
    return out;
}

}  // namespace

GameSolution solve_buchi_game(const GameArena& g) {
    const std::size_t n = g.size();
    std::vector<std::vector<std::size_t>> preds(n);
    for (std::size_t v = 0; v < n; ++v) {
        if (g.edges[v].empty()) throw Error("game arena node without successors");
        // One predecessor entry per edge so that adversary counters match out-degrees.
        for (const auto& e : g.edges[v]) preds[e.to].push_back(v);
    }

    std::vector<bool> recurrent = g.accepting;
    Attractor attr;
    for (;;) {
        attr = attract(g, preds, recurrent);
        bool changed = false;
        for (std::size_t v = 0; v < n; ++v) {
            if (!recurrent[v]) continue;
            const auto& es = g.edges[v];
            auto in = [&](const GameArena::Edge& e) { return attr.inside[e.to]; };
            const bool stays = g.owner[v] == Player::Control ? std::any_of(es.begin(), es.end(), in)
                                                             : std::all_of(es.begin(), es.end(), in);
            if (!stays) {
                recurrent[v] = false;
                changed = true;
            }
        }
        if (!changed) break;
    }

    GameSolution out{attr.inside, attr.rank, std::vector<std::optional<std::size_t>>(n)};
    for (std::size_t v = 0; v < n; ++v) {
        if (!out.winning[v] || g.owner[v] != Player::Control) continue;
        // Least-ranked successor; from recurrent nodes any winning successor
        // qualifies, elsewhere the rank strictly decreases.
        std::optional<std::size_t> best;
        for (std::size_t i = 0; i < g.edges[v].size(); ++i) {
            const auto to = g.edges[v][i].to;
            if (!out.winning[to]) continue;
            if (!recurrent[v] && out.rank[to] >= out.rank[v]) continue;
            if (!best || out.rank[to] < out.rank[g.edges[v][*best].to]) best = i;
        }
        out.strategy[v] = best;
    }
    return out;
}

GameArena product_arena(const ProductAutomaton& p) {
    GameArena g;
    const std::size_t n = p.size();
    const std::size_t na = p.num_controls();
    for (ProductState s = 0; s < n; ++s) g.add_node(Player::Control, p.is_accepting(s));
    for (ProductState s = 0; s < n; ++s) {
        for (Control a = 0; a < na; ++a) g.add_node(Player::Adversary, false);
    }
    for (ProductState s = 0; s < n; ++s) {
        for (Control a = 0; a < na; ++a) {
            const std::size_t choice = n + s * na + a;
            g.edges[s].push_back({choice, a});
            for (auto t : p.successors(s, a)) g.edges[choice].push_back({t, 0});
        }
    }
    return g;
}

}  // namespace astra
