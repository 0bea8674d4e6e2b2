// gperiod: period, primitivity, index of convergence and exponent of digraphs.

#include <iostream>

#include <CLI11.hpp>

#include "gperiod/cli.hpp"

int main(int argc, char** argv) {
    using namespace gperiod;

    CLI::App app{"Period, primitivity, index of convergence and exponent of directed graphs"};
    app.require_subcommand(1);

    cli::AnalyzeOptions analyze_opt;
    auto* analyze = app.add_subcommand("analyze", "Analyze a digraph");
    analyze->add_option("path", analyze_opt.path, "Input file ('-' for stdin)")->required();
    analyze->add_option("--format", analyze_opt.format, "Input format")
        ->check(CLI::IsMember({"edgelist", "dot"}));
    analyze->add_option("--algorithm", analyze_opt.algorithm, "lifted (structural) or oracle (matrix powers)")
        ->check(CLI::IsMember({"lifted", "oracle"}));
    analyze->add_flag("--json", analyze_opt.json, "Single-line JSON output");
    analyze->add_flag("--force", analyze_opt.force, "Run the oracle even when n > 64");

    cli::GenerateOptions gen_opt;
    auto* generate = app.add_subcommand("generate", "Generate an instance");
    generate->add_option("family", gen_opt.family, "Instance family")
        ->required()
        ->check(CLI::IsMember({"cycle", "wielandt", "random", "period-gadget", "ord-gadget", "exponent-gadget"}));
    generate->add_option("--n", gen_opt.n, "Vertex count (base instance size for gadgets)");
    generate->add_option("--p", gen_opt.p, "Edge probability for random instances");
    generate->add_option("--seed", gen_opt.seed, "Random seed");
    generate->add_option("--order", gen_opt.order, "ord-gadget: comma-separated path, first to last");
    generate->add_option("--s", gen_opt.s, "ord-gadget: name of s; st gadgets with --input: vertex id of s");
    generate->add_option("--t", gen_opt.t, "ord-gadget: name of t; st gadgets with --input: vertex id of t");
    generate->add_option("--input", gen_opt.input, "st gadgets: base edge-list file");
    generate->add_option("--out", gen_opt.out, "Output file (directory when --count > 1)");
    generate->add_option("--count", gen_opt.count, "Number of instances (seeds seed, seed+1, ...)");

    SelfcheckOptions check_opt;
    auto* selfcheck = app.add_subcommand("selfcheck", "Run the property suites against brute-force oracles");
    selfcheck->add_option("--max-n", check_opt.max_n, "Largest vertex count (exhaustive up to min(max-n, 5))");
    selfcheck->add_option("--samples", check_opt.samples, "Random samples per sampled property");
    selfcheck->add_option("--seed", check_opt.seed, "Random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::input_error;
    }

    if (*analyze) return cli::run_analyze(analyze_opt, std::cout, std::cerr);
    if (*generate) return cli::run_generate(gen_opt, std::cout, std::cerr);
    if (*selfcheck) return cli::run_selfcheck(check_opt, std::cout);
    return cli::input_error;
}
