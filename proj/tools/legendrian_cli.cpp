#include <iostream>

#include <CLI11.hpp>

#include <legendrian/cli.hpp>

int main(int argc, char** argv) {
    using namespace legendrian;
    cli::RunConfig cfg;
    CLI::App app{"Legendrian knot invariants and Lagrangian cobordism checks"};
    app.require_subcommand(1);
    app.add_option("--sigma", cfg.sigma, "grading offset")->capture_default_str();
    app.add_option("--budget", cfg.budget, "disk search node budget")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--jobs", cfg.jobs, "worker threads")->capture_default_str()->check(CLI::Range(1u, 256u));
    app.add_option("--format", cfg.format, "output format")->capture_default_str()->check(CLI::IsMember({"json", "text"}));

    auto* inv = app.add_subcommand("invariants", "tb by two methods, rotation number, generator counts");
    inv->add_option("grid", cfg.inputs, "grid diagram JSON")->required();
    auto* lch = app.add_subcommand("lch", "DGA, augmentations and linearized homology");
    lch->add_option("grid", cfg.inputs, "grid diagram JSON")->required();
    auto* cob = app.add_subcommand("cobordism", "replay a move script and check its relations");
    cob->add_option("script", cfg.inputs, "move script JSON")->required();
    auto* sp = app.add_subcommand("spin", "front spinning of a record, a script, or the torus knot pipeline");
    sp->add_option("input", cfg.inputs, "invariant record or move script JSON");
    sp->add_option("--tori", cfg.tori, "J K: cobordism T(2J+1) -> T(2K+1)")->expected(2);
    sp->add_option("--m", cfg.m, "spin count")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : cli::input_error;
    }
    for (auto* s : {inv, lch, cob, sp})
        if (s->parsed()) cfg.subcommand = s->get_name();
    if (sp->parsed() && cfg.tori.empty() && cfg.inputs.empty()) {
        std::cerr << "spin needs an input file or --tori J K\n";
        return cli::input_error;
    }
    const cli::Outcome o = cli::run(cfg);
    std::cout << cli::render(o, cfg.format);
    if (o.code == cli::input_error) std::cerr << o.report.value("error", std::string()) << "\n";
    return o.code;
}
