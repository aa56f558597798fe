#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fpn/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Exact FP_n decision engine for kernel and coabelian ideals of "
                 "right-angled Artin Lie algebras"};
    app.require_subcommand(1);

    fpn::RunConfig cfg;
    std::string output = "json";
    std::string convention = "shifted";
    unsigned max_degree = 0;

    // Only one subcommand parses per invocation, so the option targets can
    // be shared across subcommands.
    const auto add_common = [&](CLI::App* cmd, bool takes_char, bool takes_space,
                                bool takes_n, bool takes_convention) {
        cmd->add_option("--graph", cfg.graph_path, "graph JSON file")->required();
        if (takes_char) cmd->add_option("--char", cfg.char_path, "character JSON file");
        if (takes_space)
            cmd->add_option("--space", cfg.space_path, "character space JSON file");
        if (takes_n) cmd->add_option("--n", cfg.n, "homological degree (default 2)");
        if (takes_convention)
            cmd->add_option("--convention", convention, "shifted|uniform (default shifted)")
                ->check(CLI::IsMember({"shifted", "uniform"}));
        cmd->add_option("--field", cfg.field_text, "Q or GF:<p>; must match the input file");
        cmd->add_flag("--exit-status", cfg.exit_status, "exit 3 when the verdict fails");
        cmd->add_option("--output", output, "json|text")
            ->check(CLI::IsMember({"json", "text"}));
    };

    CLI::App* fp = app.add_subcommand("fp", "FP_n of the kernel ideal of a character");
    add_common(fp, true, false, true, true);
    fp->callback([&]() { cfg.command = fpn::RunConfig::Command::Fp; });

    CLI::App* fg = app.add_subcommand("fg", "finite generation of the kernel ideal");
    add_common(fg, true, false, false, false);
    fg->callback([&]() { cfg.command = fpn::RunConfig::Command::Fg; });

    CLI::App* ideal =
        app.add_subcommand("ideal", "FP_n of the coabelian ideal of a character space");
    add_common(ideal, false, true, true, true);
    ideal->callback([&]() { cfg.command = fpn::RunConfig::Command::Ideal; });

    CLI::App* thmg =
        app.add_subcommand("thmg", "sufficient FP_n condition through order-complex links");
    add_common(thmg, false, true, true, false);
    thmg->callback([&]() { cfg.command = fpn::RunConfig::Command::Thmg; });

    CLI::App* oracle =
        app.add_subcommand("oracle", "brute-force graded homology table and FP_n verdict");
    add_common(oracle, true, false, true, false);
    CLI::Option* md =
        oracle->add_option("--max-degree", max_degree, "top internal degree of the table");
    oracle->callback([&]() {
        cfg.command = fpn::RunConfig::Command::Oracle;
        if (md->count()) cfg.max_degree = max_degree;
    });

    CLI::App* crosscheck = app.add_subcommand(
        "crosscheck", "compare order-complex and flag-link homology at every dead clique");
    add_common(crosscheck, true, false, false, false);
    crosscheck->callback([&]() { cfg.command = fpn::RunConfig::Command::Crosscheck; });

    CLI::App* selftest = app.add_subcommand("selftest", "seeded randomized invariant suites");
    selftest->add_option("--seed", cfg.seed, "RNG seed (default 1)");
    selftest->add_option("--instances", cfg.instances, "instance count (default 100)");
    selftest->add_option("--max-vertices", cfg.max_vertices, "vertex bound (default 7)");
    selftest->add_option("--field", cfg.field_text, "Q or GF:<p> (default Q)");
    selftest->add_option("--convention", convention, "shifted|uniform (default shifted)")
        ->check(CLI::IsMember({"shifted", "uniform"}));
    selftest->add_option("--output", output, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
    selftest->callback([&]() { cfg.command = fpn::RunConfig::Command::Selftest; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return fpn::kExitInput;
    }

    cfg.text_output = (output == "text");
    try {
        cfg.convention = fpn::parse_convention(convention);
    } catch (const fpn::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return fpn::kExitInput;
    }

    return fpn::run(cfg, std::cout, std::cerr);
}
