// Command line front end: problem files in, deterministic reports out.
#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "hs/problem.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for Hasse-Schmidt derivations, integrability and leaps"};
    app.require_subcommand(1);

    std::string file;
    hs::Flags flags;
    std::string order;
    std::size_t degree_bound = 0;
    std::size_t ell = 0;
    bool json_out = false, text_out = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("file", file, "problem JSON file")->required();
        sub->add_option("--order", order, "monomial order: grevlex or lex");
        sub->add_flag("--json", json_out, "JSON report (default)");
        sub->add_flag("--text", text_out, "plain text report");
    };

    CLI::App* integrate = app.add_subcommand("integrate", "integrate a derivation order by order");
    add_common(integrate);
    integrate->add_option("--max-order", flags.max_order, "target truncation length");
    integrate->add_option("--method", flags.method, "ci | equidim | reduced | auto");

    CLI::App* leaps = app.add_subcommand("leaps", "census of leaps up to a bound");
    add_common(leaps);
    leaps->add_option("--max-order", flags.max_order, "scan bound");
    leaps->add_option("--mode", flags.mode, "exact | degree-bounded");
    leaps->add_option("--degree-bound", degree_bound, "lift degree for degree-bounded mode");

    CLI::App* fitting = app.add_subcommand("fitting", "minor ideal of the Jacobian at a level");
    add_common(fitting);
    fitting->add_option("--ell", ell, "minor size")->required();

    CLI::App* gg = app.add_subcommand("genericgens",
                                      "generating set with the maximal-rank Jacobian property");
    add_common(gg);

    CLI::App* check = app.add_subcommand("check-hs", "validate a Hasse-Schmidt table");
    add_common(check);

    CLI::App* ders = app.add_subcommand("derivations", "derivation module of an artinian algebra");
    add_common(ders);

    CLI11_PARSE(app, argc, argv);

    CLI::App* sub = app.get_subcommands().front();
    std::string verb = sub->get_name();
    if (!order.empty()) flags.order = order;
    if (auto* o = sub->get_option_no_throw("--degree-bound"); o && o->count())
        flags.degree_bound = degree_bound;
    if (auto* o = sub->get_option_no_throw("--ell"); o && o->count()) flags.ell = ell;
    flags.text = text_out && !json_out;

    auto start = std::chrono::steady_clock::now();
    hs::RunResult result;
    try {
        hs::ProblemSpec spec = hs::parse_problem_file(file);
        result = hs::dispatch(verb, spec, flags);
    } catch (const hs::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();

    std::cout << result.output;
    // Timing goes to stderr so reports stay byte-identical across runs.
    std::cerr << "elapsed_ms=" << elapsed << "\n";
    return result.exit_code;
}
