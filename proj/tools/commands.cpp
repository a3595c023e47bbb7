#include "commands.hpp"

#include <filesystem>
#include <functional>
#include <ostream>

#include "astra/completeness.hpp"
#include "astra/dot.hpp"
#include "astra/io.hpp"
#include "astra/log.hpp"
#include "astra/planner.hpp"
#include "astra/simulate.hpp"

namespace astra::cli {
namespace {

Specification load_specification(const RunConfig& cfg, const Valuation& val) {
    if (cfg.spec.has_value() == cfg.automaton_path.has_value()) {
        throw InputError("give exactly one of --spec and --automaton");
    }
    if (cfg.spec) return Specification::from_formula(parse_formula(*cfg.spec, val.props()), val.props());
    return Specification::from_automaton(load_automaton(*cfg.automaton_path, val.props()));
}

std::string format_states(const std::vector<State>& states, const Ats& ats) {
    std::string out = "[";
    for (std::size_t i = 0; i < states.size(); ++i) {
        out += (i ? ", " : "") + ats.states().name(states[i]);
    }
    return out + "]";
}

int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const VerificationFailure& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

LoadedPlan load_checked_plan(const RunConfig& cfg, const Ats& ats) {
    if (!cfg.plan_path) throw InputError("--plan is required");
    auto loaded = load_plan(*cfg.plan_path, ats);
    check_plan_against(loaded.plan, ats);
    return loaded;
}

}  // namespace

int cmd_synthesize(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        auto sys = load_system(cfg.system_path);
        auto spec = load_specification(cfg, sys.valuation);
        std::optional<State> hint;
        if (cfg.initial) hint = sys.ats.states().at(*cfg.initial);

        auto result = synthesize(sys.ats, spec, sys.valuation, hint);
        out << "verdict: " << to_string(result.verdict) << "\n";
        if (result.verdict == Verdict::Unknown) {
            out << "reason: " << result.reason << "\n";
            return int{kUnknown};
        }
        if (result.verdict == Verdict::NotFound) return int{kNotFound};

        const auto& plan = *result.plan;
        const bool verified = spec.satisfied_by(plan, sys.valuation);
        out << "initial: " << sys.ats.states().name(*result.initial) << "\n";
        out << "plan states: " << plan.size() << "\n";
        out << "verified: " << (verified ? "true" : "false") << "\n";
        if (!verified) throw VerificationFailure("simplified plan fails verification");

        if (cfg.out_path) {
            write_file(*cfg.out_path, plan_to_json(plan, sys.ats, result.initial));
            std::filesystem::path dot = cfg.dot_path ? std::filesystem::path(*cfg.dot_path)
                                                     : std::filesystem::path(*cfg.out_path)
                                                           .replace_extension(".dot");
            write_file(dot, plan_to_dot(plan, sys.ats, "controller"));
        } else {
            out << plan_to_json(plan, sys.ats, result.initial);
        }
        return int{kOk};
    });
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        auto sys = load_system(cfg.system_path);
        auto spec = load_specification(cfg, sys.valuation);
        auto loaded = load_checked_plan(cfg, sys.ats);
        if (!spec.formula() && !spec.automaton()) {
            out << "verdict: unknown\nreason: " << spec.unsupported_reason() << "\n";
            return int{kUnknown};
        }
        if (!plan_trajectory_exists(loaded.plan)) {
            out << "verified: false\nthe plan generates no trajectory\n";
            return int{kNotFound};
        }
        if (auto cex = spec.counterexample(loaded.plan, sys.valuation)) {
            out << "verified: false\ncounterexample:\n"
                << "  u = " << format_states(cex->prefix, sys.ats) << "\n"
                << "  v = " << format_states(cex->cycle, sys.ats) << "\n";
            return int{kNotFound};
        }
        out << "verified: true\n";
        return int{kOk};
    });
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        auto sys = load_system(cfg.system_path);
        auto loaded = load_checked_plan(cfg, sys.ats);
        if (cfg.steps < 1) throw InputError("--steps must be at least 1");

        SimulationOptions opts;
        opts.seed = cfg.seed;
        opts.steps = cfg.steps;
        if (cfg.policy == "random") opts.policy = DisturbancePolicy::Random;
        else if (cfg.policy == "adversarial") opts.policy = DisturbancePolicy::Adversarial;
        else if (cfg.policy == "scripted") opts.policy = DisturbancePolicy::Scripted;
        else throw InputError("unknown policy '" + cfg.policy + "'");
        if (opts.policy == DisturbancePolicy::Scripted) {
            if (!cfg.script_path) throw InputError("the scripted policy needs --script");
            opts.script = load_script(*cfg.script_path, sys.ats);
        }

        std::optional<Specification> spec;
        if (cfg.spec || cfg.automaton_path) {
            spec = load_specification(cfg, sys.valuation);
            if ((spec->formula() || spec->automaton()) && !spec->satisfied_by(loaded.plan, sys.valuation)) {
                log_warn("the plan does not satisfy the specification; no guarantee applies");
            }
        } else {
            log_warn("no specification given; the plan is not verified");
        }
        std::optional<SolvedProduct> solved;
        if (opts.policy == DisturbancePolicy::Adversarial) {
            if (!spec || !spec->automaton()) {
                throw InputError("the adversarial policy needs a specification with a total automaton");
            }
            solved = solve_product(sys.ats, loaded.plan.at(1).world, *spec->automaton(), sys.valuation);
        }

        auto result = simulate(sys.ats, loaded.plan, opts, solved ? &*solved : nullptr);
        const std::string trace = format_trace(result, sys.ats);
        if (cfg.out_path) write_file(*cfg.out_path, trace);
        out << trace;
        if (result.detached) {
            err << "error: the controller left the plan (model mismatch)\n";
            return int{kInputError};
        }
        out << "verdict: " << result.verdict() << "\n";
        return int{kOk};
    });
}

int cmd_export(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        auto sys = load_system(cfg.system_path);
        const auto& kind = cfg.export_kind;
        std::string dot;
        if (kind == "system") {
            dot = system_to_dot(sys.ats, sys.valuation);
        } else if (kind == "plan") {
            dot = plan_to_dot(load_checked_plan(cfg, sys.ats).plan, sys.ats);
        } else if (kind == "automaton" || kind == "product" || kind == "tfin") {
            auto spec = load_specification(cfg, sys.valuation);
            const BuchiAutomaton* total = spec.automaton();
            if (kind == "automaton") {
                if (!total) {
                    err << "note: no total automaton (" << spec.unsupported_reason()
                        << "); exporting the translation\n";
                    const auto raw = cfg.spec ? ltl_to_buchi(*spec.formula(), sys.valuation.props())
                                              : load_automaton(*cfg.automaton_path, sys.valuation.props());
                    dot = automaton_to_dot(raw);
                } else {
                    dot = automaton_to_dot(*total);
                }
            } else {
                if (!total) {
                    err << "error: no total automaton: " << spec.unsupported_reason() << "\n";
                    return int{kUnknown};
                }
                if (kind == "product") {
                    State q0 = 0;
                    if (cfg.initial) q0 = sys.ats.states().at(*cfg.initial);
                    else if (cfg.plan_path) q0 = load_checked_plan(cfg, sys.ats).plan.at(1).world;
                    dot = product_to_dot(product(sys.ats, q0, *total, sys.valuation), sys.ats, *total);
                } else {
                    auto plan = load_checked_plan(cfg, sys.ats).plan;
                    auto p = product(sys.ats, plan.at(1).world, *total, sys.valuation);
                    auto tf = build_tfin(p, Controller(plan));
                    dot = tfin_to_dot(tf, p, sys.ats, *total);
                }
            }
        } else {
            throw InputError("unknown export kind '" + kind + "'");
        }
        if (cfg.out_path) write_file(*cfg.out_path, dot);
        else out << dot;
        return int{kOk};
    });
}

}  // namespace astra::cli
