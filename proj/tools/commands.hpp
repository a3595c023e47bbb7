#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace astra::cli {

enum ExitCode : int {
    kOk = 0,
    kNotFound = 1,  // also: verification found a violation
    kUnknown = 2,
    kInputError = 3,
    kInternalError = 4,
};

struct RunConfig {
    std::string system_path;
    std::optional<std::string> spec;
    std::optional<std::string> automaton_path;
    std::optional<std::string> initial;
    std::optional<std::string> plan_path;
    std::optional<std::string> out_path;
    std::optional<std::string> dot_path;
    std::uint64_t seed = 0;
    std::string policy = "random";
    std::size_t steps = 20;
    std::optional<std::string> script_path;
    std::string export_kind;
};

int cmd_synthesize(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_export(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace astra::cli
