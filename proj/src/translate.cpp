// Tableau translation to a transition-based generalized Buchi automaton,
// followed by degeneralization with a level counter.

#include <map>
#include <set>

#include "astra/buchi.hpp"

namespace astra {
namespace {

enum class NKind { True, False, Lit, And, Or, Until, Release };

struct NNode {
    NKind kind;
    std::size_t prop = 0;
    bool positive = true;
    int lhs = -1;
    int rhs = -1;

    auto operator<=>(const NNode&) const = default;
};

// Hash-consed negation normal form over Until/Release.
class NnfTable {
public:
    int make(NNode n) {
        auto [it, fresh] = ids_.emplace(n, static_cast<int>(nodes_.size()));
        if (fresh) nodes_.push_back(n);
        return it->second;
    }

    int from(const Formula& f, bool negated) {
        switch (f.kind()) {
            case FormulaKind::True:
                return make({negated ? NKind::False : NKind::True});
            case FormulaKind::Atom:
                return make({NKind::Lit, f.prop(), !negated});
            case FormulaKind::Not:
                return from(f.lhs(), !negated);
            case FormulaKind::And: {
                const int l = from(f.lhs(), negated);
                const int r = from(f.rhs(), negated);
                return make({negated ? NKind::Or : NKind::And, 0, true, l, r});
            }
            case FormulaKind::Until: {
                const int l = from(f.lhs(), negated);
                const int r = from(f.rhs(), negated);
                return make({negated ? NKind::Release : NKind::Until, 0, true, l, r});
            }
        }
        return -1;
    }

    const NNode& operator[](int id) const { return nodes_.at(static_cast<std::size_t>(id)); }
    std::size_t size() const { return nodes_.size(); }

private:
    std::vector<NNode> nodes_;
    std::map<NNode, int> ids_;
};

using Obligations = std::set<int>;

struct Branch {
    std::set<int> todo;
    std::set<int> done;
    Letter pos = 0;
    Letter neg = 0;
    Obligations next;
    std::set<int> postponed;
};

struct TgbaEdge {
    Letter pos;
    Letter neg;
    std::size_t to;
    std::vector<bool> acc;  // one flag per until

    auto operator<=>(const TgbaEdge&) const = default;
};

// Expands a set of current obligations into its one-step branches.
std::vector<Branch> expand(const NnfTable& t, const Obligations& now) {
    std::vector<Branch> finished;
    std::vector<Branch> work;
    Branch start;
    start.todo = now;
    work.push_back(std::move(start));
    while (!work.empty()) {
        Branch b = std::move(work.back());
        work.pop_back();
        if (b.todo.empty()) {
            finished.push_back(std::move(b));
            continue;
        }
        const int id = *b.todo.begin();
        b.todo.erase(b.todo.begin());
        if (!b.done.insert(id).second) {
            work.push_back(std::move(b));
            continue;
        }
        const NNode& n = t[id];
        auto add = [&](Branch& br, int g) {
            if (!br.done.count(g)) br.todo.insert(g);
        };
        switch (n.kind) {
            case NKind::True:
                work.push_back(std::move(b));
                break;
            case NKind::False:
                break;
            case NKind::Lit: {
                const Letter bit = Letter{1} << n.prop;
                if (n.positive) b.pos |= bit;
                else b.neg |= bit;
                if ((b.pos & b.neg) == 0) work.push_back(std::move(b));
                break;
            }
            case NKind::And:
                add(b, n.lhs);
                add(b, n.rhs);
                work.push_back(std::move(b));
                break;
            case NKind::Or: {
                Branch other = b;
                add(b, n.lhs);
                add(other, n.rhs);
                work.push_back(std::move(b));
                work.push_back(std::move(other));
                break;
            }
            case NKind::Until: {
                // Either fulfil now, or hold the left side and postpone.
                Branch later = b;
                add(b, n.rhs);
                add(later, n.lhs);
                later.next.insert(id);
                later.postponed.insert(id);
                work.push_back(std::move(b));
                work.push_back(std::move(later));
                break;
            }
            case NKind::Release: {
                Branch later = b;
                add(b, n.lhs);
                add(b, n.rhs);
                add(later, n.rhs);
                later.next.insert(id);
                work.push_back(std::move(b));
                work.push_back(std::move(later));
                break;
            }
        }
    }
    return finished;
}

Obligations strip_true(const NnfTable& t, Obligations s) {
    for (auto it = s.begin(); it != s.end();) {
        it = t[*it].kind == NKind::True ? s.erase(it) : std::next(it);
    }
    return s;
}

Guard literal_guard(Letter pos, Letter neg, std::size_t num_props) {
    Guard g = Guard::truth();
    for (std::size_t v = 0; v < num_props; ++v) {
        if (pos >> v & 1u) g = Guard::conjunction(std::move(g), Guard::var(v));
        if (neg >> v & 1u) g = Guard::conjunction(std::move(g), Guard::negation(Guard::var(v)));
    }
    return g;
}

}  // namespace

BuchiAutomaton ltl_to_buchi(const Formula& f, const Propositions& props) {
    NnfTable table;
    const int root = table.from(f, false);

    std::vector<int> untils;
    for (std::size_t id = 0; id < table.size(); ++id) {
        if (table[static_cast<int>(id)].kind == NKind::Until) untils.push_back(static_cast<int>(id));
    }
    const std::size_t k = untils.size();

    // Generalized automaton over obligation sets.
    std::vector<Obligations> states;
    std::map<Obligations, std::size_t> ids;
    std::vector<std::vector<TgbaEdge>> edges;
    auto intern = [&](Obligations s) {
        auto [it, fresh] = ids.emplace(s, states.size());
        if (fresh) {
            states.push_back(std::move(s));
            edges.emplace_back();
        }
        return it->second;
    };
    intern(strip_true(table, {root}));
    for (std::size_t s = 0; s < states.size(); ++s) {
        std::set<TgbaEdge> out;
        for (auto& b : expand(table, states[s])) {
            TgbaEdge e{b.pos, b.neg, intern(strip_true(table, b.next)), std::vector<bool>(k)};
            for (std::size_t i = 0; i < k; ++i) e.acc[i] = !b.postponed.count(untils[i]);
            out.insert(std::move(e));
        }
        edges[s].assign(out.begin(), out.end());
    }

    // Degeneralize: state (s, level), accepting at level k.
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
    std::vector<std::pair<std::size_t, std::size_t>> order;
    auto node = [&](std::size_t s, std::size_t level) {
        auto [it, fresh] = index.emplace(std::make_pair(s, level), order.size());
        if (fresh) order.emplace_back(s, level);
        return it->second;
    };
    std::vector<BuchiEdge> out;
    node(0, 0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        const auto [s, level] = order[i];
        for (const auto& e : edges[s]) {
            std::size_t j = level == k ? 0 : level;
            while (j < k && e.acc[j]) ++j;
            const std::size_t to = node(e.to, j);
            out.push_back({i, literal_guard(e.pos, e.neg, props.size()), to});
        }
    }

    std::vector<std::string> names;
    std::vector<bool> accepting;
    for (std::size_t i = 0; i < order.size(); ++i) {
        names.push_back("s" + std::to_string(i));
        accepting.push_back(order[i].second == k);
    }
    return BuchiAutomaton(props, std::move(names), {0}, std::move(accepting), std::move(out));
}

}  // namespace astra
