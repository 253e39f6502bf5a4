// Command-line front end: reads a system file, prints the certified small
// solution branches. See README.md for the file format and exit codes.

#include "smallsol/app.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    smallsol::AppOptions opt;
    if (const char* env = std::getenv("SMALLSOL_PRECISION")) {
        try {
            opt.precision = static_cast<unsigned>(std::stoul(env));
        } catch (const std::exception&) {
            std::cerr << "smallsol: SMALLSOL_PRECISION must be a number of bits\n";
            return smallsol::exit_input_error;
        }
    }

    CLI::App app{"Puiseux jets of the small solutions of a polynomial system f(lambda, x) = 0"};
    app.add_option("file", opt.input, "system file (YAML)")->required();
    app.add_option("--order", opt.order, "target truncation order T")->capture_default_str();
    app.add_option("--trees", opt.trees, "first | all | Prüfer codes per level, e.g. 1.1,1,- (chains separated by ';')")
        ->capture_default_str();
    app.add_option("--precision", opt.precision, "working precision in bits (env SMALLSOL_PRECISION)")
        ->capture_default_str();
    app.add_option("--verify-numeric", opt.verify_lambdas, "lambda samples for a Newton check, comma separated")
        ->delimiter(',');
    app.add_flag("--families", opt.families, "run the common-factor family analysis first");
    app.add_flag("--real-only", opt.real_only, "report only branches real on some half-axis");
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "machine"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : smallsol::exit_input_error;
    }
    return smallsol::run_app(opt, std::cout, std::cerr);
}
