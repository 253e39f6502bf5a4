#pragma once

#include "smallsol/report.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace smallsol {

struct AppOptions {
    std::string input;
    /// System file contents; when non-empty, used instead of reading `input`.
    std::string input_text;
    long order = 6;
    /// "first", "all", or chains of Prüfer codes: levels separated by ',',
    /// code entries by '.', '-' for the empty code, chains by ';'.
    std::string trees = "first";
    unsigned precision = kDefaultBits;
    std::vector<std::string> verify_lambdas;
    bool families = false;
    bool real_only = false;
    std::string format = "text";
};

/// Parses a --trees chain list for n unknowns.
std::vector<TreeChain> parse_tree_chains(const std::string& text, int n);

/// Loads the system, runs the pipeline and fills the report. Input errors
/// surface as exit_input_error with the message in report.messages.
RunReport run_pipeline(const AppOptions& options);

/// run_pipeline followed by rendering to `out`; diagnostics go to `err`.
int run_app(const AppOptions& options, std::ostream& out, std::ostream& err);

}  // namespace smallsol
