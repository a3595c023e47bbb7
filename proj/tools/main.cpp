#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
    using namespace astra::cli;

    CLI::App app{"astra: controller synthesis for alternating transition systems"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_spec = [&](CLI::App* sub) {
        auto* spec = sub->add_option("--spec", cfg.spec, "LTL formula without next");
        auto* aut = sub->add_option("--automaton", cfg.automaton_path, "Buchi automaton JSON file");
        spec->excludes(aut);
        return std::make_pair(spec, aut);
    };

    auto* synth = app.add_subcommand("synth", "synthesize a controller");
    synth->add_option("--system", cfg.system_path, "system JSON file")->required();
    add_spec(synth);
    synth->add_option("--initial", cfg.initial, "only try this initial state");
    synth->add_option("--out", cfg.out_path, "plan JSON output");
    synth->add_option("--dot", cfg.dot_path, "controller DOT output (default: next to --out)");

    auto* verify = app.add_subcommand("verify", "verify a plan against a specification");
    verify->add_option("--system", cfg.system_path, "system JSON file")->required();
    add_spec(verify);
    verify->add_option("--plan", cfg.plan_path, "plan JSON file")->required();

    auto* sim = app.add_subcommand("simulate", "run the closed loop");
    sim->add_option("--system", cfg.system_path, "system JSON file")->required();
    add_spec(sim);
    sim->add_option("--plan", cfg.plan_path, "plan JSON file")->required();
    sim->add_option("--seed", cfg.seed, "random seed");
    sim->add_option("--policy", cfg.policy, "random, adversarial or scripted")
        ->check(CLI::IsMember({"random", "adversarial", "scripted"}));
    sim->add_option("--steps", cfg.steps, "step budget")->check(CLI::PositiveNumber);
    sim->add_option("--script", cfg.script_path, "JSON list of disturbances");
    sim->add_option("--out", cfg.out_path, "trace output");

    auto* exp = app.add_subcommand("export", "write a DOT diagram");
    exp->add_option("kind", cfg.export_kind, "system, plan, automaton, product or tfin")
        ->required()
        ->check(CLI::IsMember({"system", "plan", "automaton", "product", "tfin"}));
    exp->add_option("--system", cfg.system_path, "system JSON file")->required();
    add_spec(exp);
    exp->add_option("--plan", cfg.plan_path, "plan JSON file");
    exp->add_option("--initial", cfg.initial, "initial state of the product");
    exp->add_option("--out", cfg.out_path, "DOT output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kInputError;
    }

    if (synth->parsed()) return cmd_synthesize(cfg, std::cout, std::cerr);
    if (verify->parsed()) return cmd_verify(cfg, std::cout, std::cerr);
    if (sim->parsed()) return cmd_simulate(cfg, std::cout, std::cerr);
    return cmd_export(cfg, std::cout, std::cerr);
}
