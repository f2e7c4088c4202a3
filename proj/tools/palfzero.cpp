#include <iostream>

#include <CLI11.hpp>

#include "pzero/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"genus-zero PALFs, plug twists and Kirby-diagram invariants"};
    app.require_subcommand(1);
    app.fallthrough();

    pzero::CliOptions opt;
    app.add_flag("--json", opt.json, "machine-readable output");
    app.add_flag("--trace", opt.trace, "per-move trace for scripts");
    app.add_option("--seed", opt.seed, "seed for randomized suites");
    app.add_option("--cases", opt.cases, "case count for randomized suites");
    app.add_option("--data", opt.data_dir, "catalog data directory");

    std::string kind, target, diagram, script, constraints;
    int m = 1, n = 2;

    auto* inv = app.add_subcommand("invariants", "invariants of a PALF or Kirby diagram");
    inv->add_option("kind", kind, "palf|kirby")->required();
    inv->add_option("target", target, "file path or catalog:REF")->required();

    auto* run = app.add_subcommand("run-script", "apply a move script to a diagram");
    run->add_option("diagram", diagram, "diagram file or catalog:REF")->required();
    run->add_option("script", script, "script file")->required();

    auto* t1 = app.add_subcommand("verify-theorem1", "check the plug PALF structure for W(m,n)");
    t1->add_option("--m", m, "m >= 1")->required();
    t1->add_option("--n", n, "n >= 2")->required();

    auto* t2 = app.add_subcommand("verify-theorem2", "check the six stated properties of A and B");
    auto* st = app.add_subcommand("selftest-relations", "relation and move-invariance suites");

    auto* se = app.add_subcommand("search", "enumerate curve families under constraints");
    se->add_option("--constraints", constraints, "constraints file")->required();

    auto* va = app.add_subcommand("validate-catalog", "run every catalog object through its checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 1 : 0;
    }

    try {
        if (inv->parsed())
            return pzero::cmd_invariants(kind, target, opt, std::cout, std::cerr);
        if (run->parsed())
            return pzero::cmd_run_script(diagram, script, opt, std::cout, std::cerr);
        if (t1->parsed())
            return pzero::cmd_verify_theorem1(m, n, opt, std::cout, std::cerr);
        if (t2->parsed())
            return pzero::cmd_verify_theorem2(opt, std::cout, std::cerr);
        if (st->parsed())
            return pzero::cmd_selftest(opt, std::cout, std::cerr);
        if (se->parsed())
            return pzero::cmd_search(constraints, opt, std::cout, std::cerr);
        if (va->parsed())
            return pzero::cmd_validate(opt, std::cout, std::cerr);
    } catch (const pzero::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
