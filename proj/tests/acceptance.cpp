// Runs the acceptance suites and prints one PASS/FAIL line per suite.
//
//   acceptance [--suite NAME] [--seed N]

#include <sandwich/error.hpp>
#include <sandwich/verify.hpp>

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char ** argv)
{
    CLI::App app{"acceptance suites"};
    std::vector<std::string> suites;
    sandwich::SuiteOptions opts;
    app.add_option("--suite", suites, "suite to run (repeatable; default all)");
    app.add_option("--seed", opts.seed, "seed for randomized suites");
    CLI11_PARSE(app, argc, argv);
    if (suites.empty())
        suites = sandwich::suite_names();

    int failed = 0;
    for (std::size_t i = 0; i < suites.size(); ++i) {
        sandwich::SuiteResult r;
        try {
            r = sandwich::run_suite(suites[i], opts);
        }
        catch (const sandwich::Error & e) {
            std::cerr << e.what() << '\n';
            return 2;
        }
        failed += ! r.passed;
        std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "  " << r.seconds << "s (limit "
                  << r.time_limit_seconds << "s)  " << r.detail << std::endl;
    }
    std::cout << (suites.size() - failed) << "/" << suites.size() << " criteria passed (seed " << opts.seed << ")\n";
    return failed ? 1 : 0;
}
