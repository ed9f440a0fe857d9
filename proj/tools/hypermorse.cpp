#include "hypermorse/commands.hpp"
#include "hypermorse/errors.hpp"

#include <CLI11.hpp>

#include <iostream>

using hypermorse::RunConfig;

namespace {

void common(CLI::App* sub, RunConfig& cfg, bool with_input = true) {
    if (with_input) sub->add_option("input", cfg.input, "hypergraph file (text or JSON)")->required();
    sub->add_option("--out", cfg.out, "write the JSON report here");
    sub->add_flag("--json", cfg.json, "print the JSON report instead of a summary");
}

void ambient_opts(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--ambient", cfg.ambient, "auto (ΔH), cone, or a simplicial complex file");
    sub->add_option("--ring", cfg.ring, "Z, Q or Zp:<prime>");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Embedded homology and discrete Morse theory for hypergraphs"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* betti = app.add_subcommand("betti", "embedded homology");
    common(betti, cfg);
    ambient_opts(betti, cfg);
    betti->add_option("--method", cfg.method, "direct-inf, direct-sup or morse")
        ->check(CLI::IsMember({"direct-inf", "direct-sup", "morse"}));
    betti->add_option("--morse", cfg.morse, "Morse function file (method morse)");

    auto* validate = app.add_subcommand("validate", "check a hypergraph and optional Morse function");
    common(validate, cfg);
    ambient_opts(validate, cfg);
    validate->add_option("--morse", cfg.morse, "Morse function file");

    auto* reduce = app.add_subcommand("reduce", "critical-cell reduction");
    common(reduce, cfg);
    ambient_opts(reduce, cfg);
    reduce->add_option("--morse", cfg.morse, "Morse function on H or on the ambient (default: dimension)");

    auto* ineq = app.add_subcommand("inequalities", "Morse inequalities over a field");
    common(ineq, cfg);
    ambient_opts(ineq, cfg);
    ineq->add_option("--morse", cfg.morse, "Morse function on H or on the ambient (default: dimension)");

    auto* collapse = app.add_subcommand("collapse", "elementary collapses and homology invariance");
    common(collapse, cfg);
    collapse->add_option("--ring", cfg.ring, "Z, Q or Zp:<prime>");
    collapse->add_option("--steps", cfg.steps, "replay this sequence instead of the greedy one");
    collapse->add_option("--budget", cfg.budget, "step cap");

    auto* levels = app.add_subcommand("levels", "level hypergraphs and level collapses");
    common(levels, cfg);
    ambient_opts(levels, cfg);
    levels->add_option("--morse", cfg.morse, "Morse function file")->required();
    levels->add_option("-c,--level", cfg.level_c, "level c for H[c]");
    levels->add_option("-a", cfg.level_a, "lower level");
    levels->add_option("-b", cfg.level_b, "upper level");
    levels->add_option("--budget", cfg.budget, "search state cap");

    auto* gen = app.add_subcommand("generate", "reproducible random instance");
    common(gen, cfg, false);
    gen->add_option("--seed", cfg.seed);
    gen->add_option("--vertices", cfg.vertices);
    gen->add_option("--edges", cfg.edges, "hyperedges (base hyperedges with --collapsible)");
    gen->add_option("--max-size", cfg.max_size, "largest hyperedge");
    gen->add_flag("--condition-c", cfg.condition_c, "repair until condition (C) holds");
    gen->add_flag("--collapsible", cfg.collapsible, "build by inverse collapses");
    gen->add_option("--insertions", cfg.insertions, "inverse collapses (with --collapsible)");
    gen->add_option("--witness", cfg.witness, "write the collapse sequence here");
    gen->add_option("--morse", cfg.morse, "also write a random Morse function on the instance here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return static_cast<int>(hypermorse::ExitCode::parse);
    }
    cfg.command = app.get_subcommands().front()->get_name();
    try {
        cfg.max_cells = hypermorse::max_cells_from_env();
    } catch (const hypermorse::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(e.code());
    }
    auto res = hypermorse::run_command(cfg);
    std::cout << res.output;
    std::cerr << res.diagnostics;
    return res.exit_code;
}
