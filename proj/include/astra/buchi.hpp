#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "astra/core.hpp"
#include "astra/guard.hpp"
#include "astra/ltl.hpp"

namespace astra {

using AutState = std::size_t;

struct BuchiEdge {
    AutState from;
    Guard guard;
    AutState to;
};

/// Buchi automaton over the alphabet 2^P with guard-labeled edges and
/// state-based acceptance.
class BuchiAutomaton {
public:
    BuchiAutomaton(Propositions props, std::vector<std::string> states,
                   std::vector<AutState> initial, std::vector<bool> accepting,
                   std::vector<BuchiEdge> edges);

    const Propositions& props() const { return props_; }
    std::size_t num_states() const { return states_.size(); }
    const std::string& state_name(AutState x) const { return states_.at(x); }
    const std::vector<std::string>& state_names() const { return states_; }
    const std::vector<AutState>& initial() const { return initial_; }
    bool is_accepting(AutState x) const { return accepting_.at(x); }
    const std::vector<bool>& accepting() const { return accepting_; }
    std::size_t num_accepting() const;
    const std::vector<BuchiEdge>& edges() const { return edges_; }
    /// Letters enabling edge `e`.
    const LetterSet& edge_letters(std::size_t e) const { return letters_.at(e); }
    /// Indices of the edges leaving `x`.
    const std::vector<std::size_t>& out_edges(AutState x) const { return out_.at(x); }

    /// delta(x, l), sorted and deduplicated.
    std::vector<AutState> successors(AutState x, Letter l) const;

private:
    Propositions props_;
    std::vector<std::string> states_;
    std::vector<AutState> initial_;
    std::vector<bool> accepting_;
    std::vector<BuchiEdge> edges_;
    std::vector<LetterSet> letters_;
    std::vector<std::vector<std::size_t>> out_;
};

/// Automaton accepting exactly the words satisfying `f`.
BuchiAutomaton ltl_to_buchi(const Formula& f, const Propositions& props);

/// Exactly one initial state and exactly one successor per state and letter.
bool is_total(const BuchiAutomaton& a);

struct Unsupported {
    std::string reason;
};

using TotalizeResult = std::variant<BuchiAutomaton, Unsupported>;

/// Total automaton with the same language, or Unsupported when no
/// deterministic form is found after simplification.
TotalizeResult totalize(const BuchiAutomaton& a);

bool nba_accepts(const BuchiAutomaton& a, const Lasso<Letter>& word);

using ProductState = std::size_t;

/// Reachable part of the synchronous product of a rooted ATS with a total
/// automaton. The automaton reads the label of the source world state.
class ProductAutomaton {
public:
    std::size_t size() const { return states_.size(); }
    ProductState initial() const { return 0; }
    State world(ProductState s) const { return states_.at(s).first; }
    AutState automaton_state(ProductState s) const { return states_.at(s).second; }
    bool is_accepting(ProductState s) const { return accepting_.at(s); }
    const std::vector<bool>& accepting() const { return accepting_; }
    std::optional<ProductState> find(State q, AutState x) const;

    std::size_t num_controls() const { return num_controls_; }
    std::size_t num_disturbances() const { return num_disturbances_; }
    /// Successors under (a, b), sorted.
    const std::vector<ProductState>& post(ProductState s, Control a, Disturbance b) const;
    /// Successors under a for some b, sorted.
    const std::vector<ProductState>& successors(ProductState s, Control a) const;

    /// |Q| * |S| and |Q| * |F| of the full product.
    std::size_t full_size() const { return full_size_; }
    std::size_t full_accepting() const { return full_accepting_; }

private:
    friend ProductAutomaton product(const Ats&, State, const BuchiAutomaton&, const Valuation&);

    std::vector<std::pair<State, AutState>> states_;
    std::vector<bool> accepting_;
    std::size_t num_controls_ = 0;
    std::size_t num_disturbances_ = 0;
    std::vector<std::vector<ProductState>> post_;
    std::vector<std::vector<ProductState>> successors_;
    std::size_t full_size_ = 0;
    std::size_t full_accepting_ = 0;
    std::size_t num_aut_states_ = 0;
    std::vector<ProductState> index_;
};

/// Requires is_total(a).
ProductAutomaton product(const Ats& ats, State q0, const BuchiAutomaton& a, const Valuation& val);

}  // namespace astra
