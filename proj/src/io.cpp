#include "astra/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace astra {

using json = nlohmann::ordered_json;

namespace {

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

void require_object(const json& j, const std::string& what) {
    if (!j.is_object()) throw InputError(what + " must be a JSON object");
}

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed,
                         const std::string& what) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!allowed.count(it.key())) throw InputError("unknown key '" + it.key() + "' in " + what);
    }
}

const json& field(const json& j, const std::string& key, const std::string& what) {
    auto it = j.find(key);
    if (it == j.end()) throw InputError("missing key '" + key + "' in " + what);
    return *it;
}

std::string string_of(const json& j, const std::string& what) {
    if (!j.is_string()) throw InputError(what + " must be a string");
    return j.get<std::string>();
}

std::vector<std::string> strings_of(const json& j, const std::string& what) {
    if (!j.is_array()) throw InputError(what + " must be a list of strings");
    std::vector<std::string> out;
    for (const auto& e : j) out.push_back(string_of(e, what + " entry"));
    return out;
}

}  // namespace

RawSystem parse_system(const std::string& json_text) {
    const json j = parse_json(json_text);
    require_object(j, "system");
    reject_unknown_keys(j, {"states", "controls", "disturbances", "transitions", "observations",
                            "valuation", "propositions"},
                        "system");
    RawSystem raw;
    raw.states = strings_of(field(j, "states", "system"), "states");
    raw.controls = strings_of(field(j, "controls", "system"), "controls");
    raw.disturbances = strings_of(field(j, "disturbances", "system"), "disturbances");
    const json& ts = field(j, "transitions", "system");
    if (!ts.is_array()) throw InputError("transitions must be a list");
    for (const auto& t : ts) {
        require_object(t, "transition");
        reject_unknown_keys(t, {"from", "control", "disturbance", "to", "duration"}, "transition");
        if (auto d = t.find("duration"); d != t.end() && !(d->is_number_integer() && *d == 1)) {
            throw InputError("action durations other than 1 are not supported");
        }
        raw.transitions.push_back({string_of(field(t, "from", "transition"), "from"),
                                   string_of(field(t, "control", "transition"), "control"),
                                   string_of(field(t, "disturbance", "transition"), "disturbance"),
                                   string_of(field(t, "to", "transition"), "to")});
    }
    if (auto obs = j.find("observations"); obs != j.end()) {
        require_object(*obs, "observations");
        for (auto it = obs->begin(); it != obs->end(); ++it) {
            raw.observations.emplace_back(it.key(), string_of(it.value(), "observation"));
        }
    }
    if (auto val = j.find("valuation"); val != j.end()) {
        require_object(*val, "valuation");
        for (auto it = val->begin(); it != val->end(); ++it) {
            raw.valuation.emplace_back(it.key(), strings_of(it.value(), "valuation entry"));
        }
    }
    return raw;
}

LoadedSystem load_system_text(const std::string& json_text) {
    RawSystem raw = parse_system(json_text);
    Ats ats = validate_ats(raw);
    const json j = parse_json(json_text);
    std::optional<Propositions> props;
    if (auto p = j.find("propositions"); p != j.end()) props = Propositions(strings_of(*p, "propositions"));
    Valuation val = make_valuation(ats, raw, std::move(props));
    return {std::move(ats), std::move(val)};
}

LoadedSystem load_system(const std::filesystem::path& path) {
    return load_system_text(read_file(path));
}

BuchiAutomaton load_automaton_text(const std::string& json_text, const Propositions& props) {
    const json j = parse_json(json_text);
    require_object(j, "automaton");
    reject_unknown_keys(j, {"states", "initial", "accepting", "edges"}, "automaton");
    SymbolTable states("automaton state", strings_of(field(j, "states", "automaton"), "states"));
    if (states.empty()) throw EmptyAlphabet("automaton states");
    std::vector<AutState> initial;
    for (const auto& s : strings_of(field(j, "initial", "automaton"), "initial")) {
        initial.push_back(states.at(s));
    }
    std::vector<bool> accepting(states.size(), false);
    for (const auto& s : strings_of(field(j, "accepting", "automaton"), "accepting")) {
        accepting[states.at(s)] = true;
    }
    std::vector<BuchiEdge> edges;
    const json& es = field(j, "edges", "automaton");
    if (!es.is_array()) throw InputError("edges must be a list");
    for (const auto& e : es) {
        require_object(e, "edge");
        reject_unknown_keys(e, {"from", "guard", "to"}, "edge");
        edges.push_back({states.at(string_of(field(e, "from", "edge"), "from")),
                         parse_guard(string_of(field(e, "guard", "edge"), "guard"), props),
                         states.at(string_of(field(e, "to", "edge"), "to"))});
    }
    return BuchiAutomaton(props, states.names(), std::move(initial), std::move(accepting),
                          std::move(edges));
}

BuchiAutomaton load_automaton(const std::filesystem::path& path, const Propositions& props) {
    return load_automaton_text(read_file(path), props);
}

std::string automaton_to_json(const BuchiAutomaton& a) {
    json j;
    j["states"] = a.state_names();
    json initial = json::array();
    for (auto x : a.initial()) initial.push_back(a.state_name(x));
    j["initial"] = initial;
    json accepting = json::array();
    for (AutState x = 0; x < a.num_states(); ++x) {
        if (a.is_accepting(x)) accepting.push_back(a.state_name(x));
    }
    j["accepting"] = accepting;
    json edges = json::array();
    for (const auto& e : a.edges()) {
        edges.push_back({{"from", a.state_name(e.from)},
                         {"guard", e.guard.to_string(a.props())},
                         {"to", a.state_name(e.to)}});
    }
    j["edges"] = edges;
    return j.dump(2) + "\n";
}

LoadedPlan load_plan_text(const std::string& json_text, const Ats& ats) {
    const json j = parse_json(json_text);
    require_object(j, "plan");
    reject_unknown_keys(j, {"initial", "scrs"}, "plan");
    const json& scrs = field(j, "scrs", "plan");
    if (!scrs.is_array() || scrs.empty()) throw InputError("scrs must be a non-empty list");

    struct Entry {
        long long id;
        State world;
        Control action;
        std::vector<long long> successors;
    };
    std::vector<Entry> entries;
    std::map<long long, PlanId> renumber;
    for (const auto& s : scrs) {
        require_object(s, "SCR");
        reject_unknown_keys(s, {"id", "world", "action", "successors"}, "SCR");
        const json& id = field(s, "id", "SCR");
        if (!id.is_number_integer()) throw InputError("SCR id must be an integer");
        Entry e{id.get<long long>(), ats.states().at(string_of(field(s, "world", "SCR"), "world")),
                ats.controls().at(string_of(field(s, "action", "SCR"), "action")), {}};
        const json& succ = field(s, "successors", "SCR");
        if (!succ.is_array()) throw InputError("SCR successors must be a list");
        for (const auto& n : succ) {
            if (!n.is_number_integer()) throw InputError("SCR successors must be integers");
            e.successors.push_back(n.get<long long>());
        }
        if (!renumber.emplace(e.id, 0).second) {
            throw InvalidPlan("duplicate plan state id " + std::to_string(e.id));
        }
        entries.push_back(std::move(e));
    }
    if (!renumber.count(1)) throw InvalidPlan("plan has no SCR with plan state 1");
    if (renumber.begin()->first < 1) throw InvalidPlan("plan state ids must be positive");
    PlanId next = 1;
    for (auto& [id, fresh] : renumber) fresh = next++;

    std::vector<Scr> out;
    for (const auto& e : entries) {
        Scr scr{renumber.at(e.id), e.world, e.action, {}};
        for (auto n : e.successors) {
            auto it = renumber.find(n);
            if (it == renumber.end()) {
                throw InvalidPlan("plan state " + std::to_string(e.id) +
                                  " refers to missing plan state " + std::to_string(n));
            }
            scr.successors.push_back(it->second);
        }
        out.push_back(std::move(scr));
    }
    LoadedPlan loaded{ReactivePlan(std::move(out)), std::nullopt};
    if (auto init = j.find("initial"); init != j.end()) {
        loaded.initial = ats.states().at(string_of(*init, "initial"));
        if (*loaded.initial != loaded.plan.at(1).world) {
            throw InvalidPlan("initial state differs from the world state of plan state 1");
        }
    }
    return loaded;
}

LoadedPlan load_plan(const std::filesystem::path& path, const Ats& ats) {
    return load_plan_text(read_file(path), ats);
}

std::string plan_to_json(const ReactivePlan& rp, const Ats& ats, std::optional<State> initial) {
    json j = json::object();
    if (initial) j["initial"] = ats.states().name(*initial);
    json scrs = json::array();
    for (const auto& s : rp.scrs()) {
        scrs.push_back({{"id", s.id},
                        {"world", ats.states().name(s.world)},
                        {"action", ats.controls().name(s.action)},
                        {"successors", s.successors}});
    }
    j["scrs"] = scrs;
    return j.dump(2) + "\n";
}

std::vector<Disturbance> load_script(const std::filesystem::path& path, const Ats& ats) {
    const json j = parse_json(read_file(path));
    std::vector<Disturbance> out;
    for (const auto& name : strings_of(j, "script")) out.push_back(ats.disturbances().at(name));
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path.string());
    out << content;
    if (!out) throw InputError("failed writing " + path.string());
}

}  // namespace astra
