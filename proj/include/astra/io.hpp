#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "astra/buchi.hpp"
#include "astra/core.hpp"
#include "astra/plan.hpp"

namespace astra {

struct LoadedSystem {
    Ats ats;
    Valuation valuation;
};

// All loaders throw InputError for malformed documents (including unknown
// keys) and the specific model errors for invalid content.

RawSystem parse_system(const std::string& json_text);
LoadedSystem load_system_text(const std::string& json_text);
LoadedSystem load_system(const std::filesystem::path& path);

BuchiAutomaton load_automaton_text(const std::string& json_text, const Propositions& props);
BuchiAutomaton load_automaton(const std::filesystem::path& path, const Propositions& props);
std::string automaton_to_json(const BuchiAutomaton& a);

struct LoadedPlan {
    ReactivePlan plan;
    std::optional<State> initial;
};

/// Plan ids are renumbered 1..k in increasing order; id 1 must exist.
LoadedPlan load_plan_text(const std::string& json_text, const Ats& ats);
LoadedPlan load_plan(const std::filesystem::path& path, const Ats& ats);
/// {"initial": ..., "scrs": [...]}; "initial" is omitted when not given.
std::string plan_to_json(const ReactivePlan& rp, const Ats& ats,
                         std::optional<State> initial = std::nullopt);

/// JSON list of disturbance names.
std::vector<Disturbance> load_script(const std::filesystem::path& path, const Ats& ats);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace astra
