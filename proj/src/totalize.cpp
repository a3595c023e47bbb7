// Determinization attempt for specification automata: pruning and
// simulation-based reductions, then completion with a rejecting sink.

#include <algorithm>
#include <map>

#include "astra/buchi.hpp"
#include "astra/graph.hpp"

namespace astra {
namespace {

// Explicit per-letter transition table over a subset of live states.
struct Table {
    std::size_t alphabet;
    std::vector<std::string> names;
    std::vector<bool> accepting;
    std::vector<AutState> initial;
    std::vector<std::vector<std::vector<AutState>>> delta;  // [x][l]

    std::size_t size() const { return names.size(); }
};

Table tabulate(const BuchiAutomaton& a) {
    Table t{a.props().alphabet_size(), a.state_names(), a.accepting(), a.initial(), {}};
    t.delta.resize(a.num_states());
    for (AutState x = 0; x < a.num_states(); ++x) {
        t.delta[x].resize(t.alphabet);
        for (Letter l = 0; l < t.alphabet; ++l) t.delta[x][l] = a.successors(x, l);
    }
    return t;
}

// Keeps the states in `keep`, renumbering them in order.
Table restrict(const Table& t, const std::vector<bool>& keep) {
    std::vector<AutState> map(t.size(), static_cast<AutState>(-1));
    Table out{t.alphabet, {}, {}, {}, {}};
    for (AutState x = 0; x < t.size(); ++x) {
        if (!keep[x]) continue;
        map[x] = out.names.size();
        out.names.push_back(t.names[x]);
        out.accepting.push_back(t.accepting[x]);
    }
    for (auto x : t.initial) {
        if (keep[x]) out.initial.push_back(map[x]);
    }
    for (AutState x = 0; x < t.size(); ++x) {
        if (!keep[x]) continue;
        auto& row = out.delta.emplace_back(t.alphabet);
        for (Letter l = 0; l < t.alphabet; ++l) {
            for (auto y : t.delta[x][l]) {
                if (keep[y]) row[l].push_back(map[y]);
            }
        }
    }
    return out;
}

RootedGraph as_graph(const Table& t) {
    RootedGraph g{t.initial, std::vector<std::vector<std::size_t>>(t.size())};
    for (AutState x = 0; x < t.size(); ++x) {
        for (const auto& targets : t.delta[x]) {
            for (auto y : targets) g.adj[x].push_back(y);
        }
        std::sort(g.adj[x].begin(), g.adj[x].end());
        g.adj[x].erase(std::unique(g.adj[x].begin(), g.adj[x].end()), g.adj[x].end());
    }
    return g;
}

// Drops unreachable states and states with an empty language.
Table prune(const Table& t) {
    RootedGraph g = as_graph(t);
    auto scc = strongly_connected_components(g);
    // live[x]: x reaches an accepting state lying on a cycle.
    std::vector<bool> live(t.size(), false);
    RootedGraph reverse{{}, std::vector<std::vector<std::size_t>>(t.size())};
    for (AutState x = 0; x < t.size(); ++x) {
        for (auto y : g.adj[x]) reverse.adj[y].push_back(x);
        if (t.accepting[x] && scc.cyclic[scc.component[x]]) reverse.roots.push_back(x);
    }
    live = reachable(reverse);
    auto from_initial = reachable(g);
    std::vector<bool> keep(t.size());
    for (AutState x = 0; x < t.size(); ++x) keep[x] = live[x] && from_initial[x];
    return restrict(t, keep);
}

// sim[y][z]: z directly simulates y.
std::vector<std::vector<bool>> direct_simulation(const Table& t) {
    const std::size_t n = t.size();
    std::vector<std::vector<bool>> sim(n, std::vector<bool>(n));
    for (AutState y = 0; y < n; ++y) {
        for (AutState z = 0; z < n; ++z) sim[y][z] = !t.accepting[y] || t.accepting[z];
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (AutState y = 0; y < n; ++y) {
            for (AutState z = 0; z < n; ++z) {
                if (!sim[y][z]) continue;
                bool ok = true;
                for (Letter l = 0; l < t.alphabet && ok; ++l) {
                    for (auto y2 : t.delta[y][l]) {
                        const auto& zs = t.delta[z][l];
                        if (std::none_of(zs.begin(), zs.end(), [&](AutState z2) { return sim[y2][z2]; })) {
                            ok = false;
                            break;
                        }
                    }
                }
                if (!ok) {
                    sim[y][z] = false;
                    changed = true;
                }
            }
        }
    }
    return sim;
}

// Merges simulation-equivalent states.
Table quotient(const Table& t, const std::vector<std::vector<bool>>& sim) {
    const std::size_t n = t.size();
    std::vector<AutState> rep(n);
    for (AutState x = 0; x < n; ++x) {
        rep[x] = x;
        for (AutState y = 0; y < x; ++y) {
            if (sim[x][y] && sim[y][x]) {
                rep[x] = rep[y];
                break;
            }
        }
    }
    Table merged = t;
    for (AutState x = 0; x < n; ++x) {
        for (auto& targets : merged.delta[x]) {
            for (auto& y : targets) y = rep[y];
            std::sort(targets.begin(), targets.end());
            targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
        }
    }
    for (auto& x : merged.initial) x = rep[x];
    std::sort(merged.initial.begin(), merged.initial.end());
    merged.initial.erase(std::unique(merged.initial.begin(), merged.initial.end()),
                         merged.initial.end());
    std::vector<bool> keep(n);
    for (AutState x = 0; x < n; ++x) keep[x] = rep[x] == x;
    return restrict(merged, keep);
}

// Removes members strictly simulated by another member of the same set.
bool drop_little_brothers(std::vector<AutState>& set, const std::vector<std::vector<bool>>& sim) {
    std::vector<AutState> kept;
    for (auto y : set) {
        const bool dominated = std::any_of(set.begin(), set.end(), [&](AutState z) {
            return z != y && sim[y][z] && !sim[z][y];
        });
        if (!dominated) kept.push_back(y);
    }
    const bool changed = kept.size() != set.size();
    set = std::move(kept);
    return changed;
}

}  // namespace

TotalizeResult totalize(const BuchiAutomaton& a) {
    if (is_total(a)) return a;

    Table t = prune(tabulate(a));
    for (;;) {
        auto sim = direct_simulation(t);
        t = quotient(t, sim);
        sim = direct_simulation(t);
        bool changed = drop_little_brothers(t.initial, sim);
        for (auto& row : t.delta) {
            for (auto& targets : row) changed = drop_little_brothers(targets, sim) || changed;
        }
        const std::size_t before = t.size();
        t = prune(t);
        if (!changed && t.size() == before) break;
    }

    if (t.initial.size() > 1) {
        return Unsupported{"automaton has " + std::to_string(t.initial.size()) +
                           " initial states after simplification"};
    }
    for (AutState x = 0; x < t.size(); ++x) {
        for (Letter l = 0; l < t.alphabet; ++l) {
            if (t.delta[x][l].size() > 1) {
                return Unsupported{"state '" + t.names[x] + "' is nondeterministic on letter " +
                                   letter_to_string(l, a.props())};
            }
        }
    }

    // Complete with a rejecting sink where needed.
    bool needs_sink = t.initial.empty();
    for (const auto& row : t.delta) {
        for (const auto& targets : row) needs_sink = needs_sink || targets.empty();
    }
    std::vector<std::string> names = t.names;
    std::vector<bool> accepting = t.accepting;
    const AutState sink = names.size();
    if (needs_sink) {
        std::string name = "sink";
        while (std::find(names.begin(), names.end(), name) != names.end()) name += "_";
        names.push_back(name);
        accepting.push_back(false);
    }
    const std::size_t num_props = a.props().size();
    std::vector<BuchiEdge> edges;
    for (AutState x = 0; x < names.size(); ++x) {
        std::map<AutState, LetterSet> by_target;
        for (Letter l = 0; l < t.alphabet; ++l) {
            AutState y = sink;
            if (x < t.size() && !t.delta[x][l].empty()) y = t.delta[x][l].front();
            by_target.try_emplace(y, t.alphabet).first->second.insert(l);
        }
        for (auto& [y, letters] : by_target) {
            edges.push_back({x, Guard::from_letters(letters, num_props), y});
        }
    }
    const AutState init = t.initial.empty() ? sink : t.initial.front();
    return BuchiAutomaton(a.props(), std::move(names), {init}, std::move(accepting), std::move(edges));
}

}  // namespace astra
