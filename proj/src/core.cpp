#include "astra/core.hpp"

#include <set>

namespace astra {

SymbolTable::SymbolTable(std::string kind, std::vector<std::string> names)
    : kind_(std::move(kind)), names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!index_.emplace(names_[i], i).second) throw DuplicateSymbol(kind_, names_[i]);
    }
}

std::optional<std::size_t> SymbolTable::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t SymbolTable::at(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw UndeclaredSymbol(kind_, std::string(name));
}

Propositions::Propositions(std::vector<std::string> names)
    : SymbolTable("proposition", std::move(names)) {
    if (size() > kMaxPropositions) {
        throw InputError("at most " + std::to_string(kMaxPropositions) +
                         " propositions are supported");
    }
}

std::string letter_to_string(Letter letter, const Propositions& props) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < props.size(); ++i) {
        if (!(letter >> i & 1u)) continue;
        if (!first) out += ",";
        out += props.name(i);
        first = false;
    }
    return out + "}";
}

AlternatingTransitionSystem validate_ats(const RawSystem& raw) {
    if (raw.states.empty()) throw EmptyAlphabet("states");
    if (raw.controls.empty()) throw EmptyAlphabet("controls");
    if (raw.disturbances.empty()) throw EmptyAlphabet("disturbances");

    AlternatingTransitionSystem ats;
    ats.states_ = SymbolTable("state", raw.states);
    ats.controls_ = SymbolTable("control", raw.controls);
    ats.disturbances_ = SymbolTable("disturbance", raw.disturbances);

    const std::size_t nq = ats.num_states();
    const std::size_t na = ats.num_controls();
    const std::size_t nb = ats.num_disturbances();

    std::set<Transition> unique;
    for (const auto& e : raw.transitions) {
        unique.insert({ats.states_.at(e.from), ats.controls_.at(e.control),
                       ats.disturbances_.at(e.disturbance), ats.states_.at(e.to)});
    }
    ats.transitions_.assign(unique.begin(), unique.end());

    ats.post_.assign(nq * na * nb, {});
    ats.successors_.assign(nq * na, {});
    for (const auto& t : ats.transitions_) {
        ats.post_[(t.from * na + t.control) * nb + t.disturbance].push_back(t.to);
        ats.successors_[t.from * na + t.control].push_back(t.to);
    }
    for (State q = 0; q < nq; ++q) {
        for (Control a = 0; a < na; ++a) {
            for (Disturbance b = 0; b < nb; ++b) {
                if (ats.post_[(q * na + a) * nb + b].empty()) {
                    throw BlockedState(raw.states[q], raw.controls[a], raw.disturbances[b]);
                }
            }
            auto& succ = ats.successors_[q * na + a];
            std::sort(succ.begin(), succ.end());
            succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
        }
    }

    // Observations default to the identity map.
    ats.obs_map_.assign(nq, 0);
    if (raw.observations.empty()) {
        ats.observations_ = SymbolTable("observation", raw.states);
        for (State q = 0; q < nq; ++q) ats.obs_map_[q] = q;
    } else {
        std::vector<std::string> obs_names;
        std::vector<bool> seen(nq, false);
        for (const auto& [state, obs] : raw.observations) {
            if (std::find(obs_names.begin(), obs_names.end(), obs) == obs_names.end()) {
                obs_names.push_back(obs);
            }
        }
        ats.observations_ = SymbolTable("observation", obs_names);
        for (const auto& [state, obs] : raw.observations) {
            State q = ats.states_.at(state);
            if (seen[q]) throw DuplicateSymbol("observation entry", state);
            seen[q] = true;
            ats.obs_map_[q] = ats.observations_.at(obs);
        }
        for (State q = 0; q < nq; ++q) {
            if (!seen[q]) throw InputError("observation map is not total: missing state '" +
                                           raw.states[q] + "'");
        }
    }
    return ats;
}

std::span<const State> AlternatingTransitionSystem::post(State q, Control a, Disturbance b) const {
    return post_.at(slot(q, a) * disturbances_.size() + b);
}

std::span<const State> AlternatingTransitionSystem::successors(State q, Control a) const {
    return successors_.at(slot(q, a));
}

Valuation::Valuation(Propositions props, std::vector<Letter> labels)
    : props_(std::move(props)), labels_(std::move(labels)) {
    const Letter full = props_.size() >= 32 ? ~Letter{0}
                                            : static_cast<Letter>((Letter{1} << props_.size()) - 1);
    for (Letter l : labels_) {
        if ((l & ~full) != 0) throw InputError("valuation label outside the proposition set");
    }
}

Valuation make_valuation(const Ats& ats, const RawSystem& raw, std::optional<Propositions> props) {
    if (!props) {
        std::vector<std::string> names;
        for (const auto& [state, ps] : raw.valuation) {
            for (const auto& p : ps) {
                if (std::find(names.begin(), names.end(), p) == names.end()) names.push_back(p);
            }
        }
        props = Propositions(std::move(names));
    }
    std::vector<Letter> labels(ats.num_states(), 0);
    std::vector<bool> seen(ats.num_states(), false);
    for (const auto& [state, ps] : raw.valuation) {
        State q = ats.states().at(state);
        if (seen[q]) throw DuplicateSymbol("valuation entry", state);
        seen[q] = true;
        for (const auto& p : ps) {
            auto i = props->find(p);
            if (!i) throw UnknownProposition(p);
            labels[q] |= Letter{1} << *i;
        }
    }
    return Valuation(std::move(*props), std::move(labels));
}

ReactiveAgent to_reactive_agent(const Ats& ats, State q0) {
    if (q0 >= ats.num_states()) throw Error("initial state out of range");
    ReactiveAgent agent{q0, {}};
    agent.succ.resize(ats.num_states());
    for (State q = 0; q < ats.num_states(); ++q) {
        for (Control a = 0; a < ats.num_controls(); ++a) {
            auto w = ats.successors(q, a);
            agent.succ[q].push_back({a, 1, std::vector<State>(w.begin(), w.end())});
        }
    }
    return agent;
}

StateSequence::StateSequence(std::vector<State> items) : items_(std::move(items)) {
    if (items_.empty()) throw Error("state sequence must be non-empty");
}

StateSequence StateSequence::slice(std::size_t i, std::size_t j) const {
    if (i < 1 || i > j || j > items_.size()) throw Error("state sequence slice out of range");
    return StateSequence(std::vector<State>(items_.begin() + (i - 1), items_.begin() + j));
}

StateSequence StateSequence::extended(State q) const {
    auto items = items_;
    items.push_back(q);
    return StateSequence(std::move(items));
}

}  // namespace astra
