#include "astra/buchi.hpp"

#include <algorithm>

#include "astra/graph.hpp"

namespace astra {

BuchiAutomaton::BuchiAutomaton(Propositions props, std::vector<std::string> states,
                               std::vector<AutState> initial, std::vector<bool> accepting,
                               std::vector<BuchiEdge> edges)
    : props_(std::move(props)),
      states_(std::move(states)),
      initial_(std::move(initial)),
      accepting_(std::move(accepting)),
      edges_(std::move(edges)) {
    const std::size_t n = states_.size();
    if (accepting_.size() != n) throw InputError("accepting flags do not match the state count");
    std::sort(initial_.begin(), initial_.end());
    initial_.erase(std::unique(initial_.begin(), initial_.end()), initial_.end());
    for (auto x : initial_) {
        if (x >= n) throw InputError("initial automaton state out of range");
    }
    out_.resize(n);
    letters_.reserve(edges_.size());
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (edges_[e].from >= n || edges_[e].to >= n) throw InputError("automaton edge out of range");
        out_[edges_[e].from].push_back(e);
        letters_.push_back(edges_[e].guard.letters(props_.size()));
    }
}

std::size_t BuchiAutomaton::num_accepting() const {
    return static_cast<std::size_t>(std::count(accepting_.begin(), accepting_.end(), true));
}

std::vector<AutState> BuchiAutomaton::successors(AutState x, Letter l) const {
    std::vector<AutState> out;
    for (auto e : out_.at(x)) {
        if (letters_[e].contains(l)) out.push_back(edges_[e].to);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_total(const BuchiAutomaton& a) {
    if (a.initial().size() != 1) return false;
    const std::size_t alphabet = a.props().alphabet_size();
    for (AutState x = 0; x < a.num_states(); ++x) {
        LetterSet covered(alphabet);
        for (auto e : a.out_edges(x)) {
            const auto& letters = a.edge_letters(e);
            // Parallel edges to the same target do not break determinism.
            for (auto f : a.out_edges(x)) {
                if (f >= e) break;
                if (a.edges()[f].to != a.edges()[e].to && a.edge_letters(f).intersects(letters)) {
                    return false;
                }
            }
            covered |= letters;
        }
        if (!covered.is_full()) return false;
    }
    return true;
}

bool nba_accepts(const BuchiAutomaton& a, const Lasso<Letter>& word) {
    if (word.cycle.empty()) throw Error("lasso cycle must be non-empty");
    const std::size_t n = word.span();
    const std::size_t m = a.num_states();
    // Node (i, x) for position i in [1, n] is (i - 1) * m + x.
    RootedGraph g;
    g.adj.resize(n * m);
    for (auto x0 : a.initial()) g.roots.push_back(x0);
    std::vector<bool> accepting(n * m);
    for (std::size_t i = 1; i <= n; ++i) {
        const std::size_t j = word.next(i);
        for (AutState x = 0; x < m; ++x) {
            const std::size_t node = (i - 1) * m + x;
            accepting[node] = a.is_accepting(x);
            for (auto y : a.successors(x, word.at(i))) g.adj[node].push_back((j - 1) * m + y);
        }
    }
    return accepting_lasso(g, accepting).has_value();
}

std::optional<ProductState> ProductAutomaton::find(State q, AutState x) const {
    const std::size_t slot = q * num_aut_states_ + x;
    if (slot >= index_.size() || index_[slot] == static_cast<ProductState>(-1)) return std::nullopt;
    return index_[slot];
}

const std::vector<ProductState>& ProductAutomaton::post(ProductState s, Control a,
                                                        Disturbance b) const {
    return post_.at((s * num_controls_ + a) * num_disturbances_ + b);
}

const std::vector<ProductState>& ProductAutomaton::successors(ProductState s, Control a) const {
    return successors_.at(s * num_controls_ + a);
}

ProductAutomaton product(const Ats& ats, State q0, const BuchiAutomaton& a, const Valuation& val) {
    if (!is_total(a)) throw Error("product requires a total automaton");
    if (q0 >= ats.num_states()) throw Error("initial state out of range");

    ProductAutomaton p;
    const std::size_t na = ats.num_controls();
    const std::size_t nb = ats.num_disturbances();
    p.num_controls_ = na;
    p.num_disturbances_ = nb;
    p.num_aut_states_ = a.num_states();
    p.full_size_ = ats.num_states() * a.num_states();
    p.full_accepting_ = ats.num_states() * a.num_accepting();
    p.index_.assign(p.full_size_, static_cast<ProductState>(-1));

    auto intern = [&](State q, AutState x) {
        auto& slot = p.index_[q * a.num_states() + x];
        if (slot == static_cast<ProductState>(-1)) {
            slot = p.states_.size();
            p.states_.emplace_back(q, x);
            p.accepting_.push_back(a.is_accepting(x));
        }
        return slot;
    };

    intern(q0, a.initial().front());
    for (ProductState s = 0; s < p.states_.size(); ++s) {
        const auto [q, x] = p.states_[s];
        const AutState next = a.successors(x, val(q)).front();
        for (Control c = 0; c < na; ++c) {
            std::vector<ProductState> all;
            for (Disturbance b = 0; b < nb; ++b) {
                std::vector<ProductState> targets;
                for (auto q2 : ats.post(q, c, b)) targets.push_back(intern(q2, next));
                std::sort(targets.begin(), targets.end());
                all.insert(all.end(), targets.begin(), targets.end());
                p.post_.push_back(std::move(targets));
            }
            std::sort(all.begin(), all.end());
            all.erase(std::unique(all.begin(), all.end()), all.end());
            p.successors_.push_back(std::move(all));
        }
    }
    return p;
}

}  // namespace astra
