#include "spcover/cli/suite.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    using namespace spcover::cli;
    CLI::App app{"Exact verification suites for Sp(2n) spectral covers"};
    std::string scope = "all";
    std::string format = "text";
    std::string family;
    std::string out;
    SuiteOptions opts;
    app.add_option("--scope", scope, "Suite to run")
        ->check(CLI::IsMember({"all", "factorization", "monodromy", "multiplicity", "picard", "numerics"}));
    app.add_option("--min-n", opts.min_n, "Smallest half-rank n");
    app.add_option("--max-n", opts.max_n, "Largest half-rank n");
    app.add_option("--min-g", opts.min_g, "Smallest base genus");
    app.add_option("--max-g", opts.max_g, "Largest base genus");
    app.add_option("--seed", opts.seed, "Seed for randomized checks");
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--family", family, "Local family JSON for the multiplicity suite");
    app.add_option("--out", out, "Write the report here instead of standard output");
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    opts.scope = *parse_scope(scope);
    if (!family.empty()) opts.family = family;

    SuiteResult result;
    try {
        result = run_suite(opts);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
    const std::string text = format == "json" ? format_json(result.reports) : format_text(result.reports);
    if (out.empty()) {
        std::cout << text;
        std::cout.flush();
    } else {
        std::ofstream file(out, std::ios::binary);
        if (!file || !(file << text) || !file.flush()) {
            std::cerr << "cannot write report to " << out << "\n";
            return 3;
        }
    }
    return result.exit_code();
}
