// toricperf: command-line front end. One job per invocation; the report goes
// to stdout as JSON, diagnostics to stderr. Exit 0 success, 1 failed check,
// 2 input error.

#include <omp.h>

#include <CLI11.hpp>
#include <iostream>

#include "toric/errors.hpp"
#include "toric/job.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Picard groups, class groups and line-bundle cohomology of toric varieties and their p-power towers", "toricperf"};
    app.allow_extras(false);

    std::string command;
    std::string fan;
    std::string divisor;
    std::optional<unsigned long> p;
    std::size_t level = 0;
    std::optional<std::size_t> degree;
    std::size_t n_max = 3;
    bool graded = false;
    bool assume_trivialization = false;
    std::optional<unsigned long> modp;
    int threads = 0;
    int indent = 2;

    std::string commands;
    for (const auto& c : toric::command_names()) commands += (commands.empty() ? "" : ", ") + c;
    app.add_option("command", command, "One of: " + commands)->required();
    app.add_option("--fan", fan, "Fan document path, or named:NAME (P1 P2 P3 P1xP1 F1 F2 F3 P112)")->required();
    app.add_option("--divisor", divisor, "Coefficients a0,a1,... in ray order");
    app.add_option("--p", p, "Prime of the p-power tower");
    app.add_option("--level", level, "Level k: the bundle is (class of D)^{1/p^k}");
    app.add_option("--degree", degree, "Cohomological degree i (default: all)");
    app.add_option("--nmax", n_max, "Largest level n of the series");
    app.add_flag("--graded", graded, "Include graded pieces / bases");
    app.add_flag("--assume-trivialization", assume_trivialization, "Skip the smoothness requirement of the tower");
    app.add_option("--modp-check", modp, "Cross-check ranks modulo this prime");
    app.add_option("--threads", threads, "OpenMP threads (0: runtime default)");
    app.add_option("--indent", indent, "JSON indentation (-1 for one line)");

    // "--divisor -3,0,0" would otherwise be taken for an option
    std::vector<std::string> args(argv + 1, argv + argc);
    for (std::size_t i = 0; i + 1 < args.size(); ++i)
        if (args[i] == "--divisor" && !args[i + 1].empty() && args[i + 1][0] == '-') {
            args[i] = "--divisor=" + args[i + 1];
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        }
    std::reverse(args.begin(), args.end());

    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : toric::kExitInputError;
    }
    if (threads > 0) omp_set_num_threads(threads);

    toric::JobSpec job;
    const auto parsed = toric::parse_command(command);
    if (!parsed) {
        std::cerr << "unknown command '" << command << "' (expected one of: " << commands << ")\n";
        return toric::kExitInputError;
    }
    job.command = *parsed;
    job.fan_source = fan;
    try {
        if (!divisor.empty()) job.divisor = toric::parse_divisor(divisor);
    } catch (const toric::InputError& e) {
        std::cerr << e.what() << "\n";
        return toric::kExitInputError;
    }
    job.p = p;
    job.level = level;
    job.degree = degree;
    job.n_max = n_max;
    job.graded = graded;
    job.assume_trivialization = assume_trivialization;
    job.modp_check = modp;

    const toric::Report report = toric::run(job);
    std::cout << report.document.dump(indent) << "\n";
    for (const auto& d : report.diagnostics) std::cerr << d << "\n";
    return report.exit_code;
}
