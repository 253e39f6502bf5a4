#pragma once

#include "smallsol/scheme.hpp"
#include "smallsol/system_file.hpp"

#include <optional>
#include <string>
#include <vector>

namespace smallsol {

inline constexpr const char* kReportSchema = "smallsol-report/1";

enum ExitCode : int {
    exit_branches = 0,
    exit_no_small_solutions = 1,
    exit_family = 2,
    exit_no_certificate = 3,
    exit_input_error = 4,
};

/// Everything a run produces, in the order it is printed.
struct RunReport {
    std::vector<std::string> variables;
    Order order;
    std::string trees;
    unsigned precision = kDefaultBits;
    bool real_only = false;
    std::optional<FamilyReport> families;
    std::optional<SolveReport> solve;
    /// numeric[b][s]: branch b of solve->branches at the s-th sample.
    std::vector<std::vector<NumericCheck>> numeric;
    int exit_code = exit_no_certificate;
    std::string status;
    std::vector<std::string> messages;
};

/// Branches that pass the --real-only filter (all of them when it is off).
std::vector<const SolutionBranch*> emitted_branches(const RunReport& report);

std::string render_text(const RunReport& report);
/// Single JSON document with "schema_version"; byte-stable for equal input.
std::string render_machine(const RunReport& report);

/// Branch components read back from render_machine output.
std::vector<std::vector<PuiseuxJet>> parse_machine_branches(const std::string& document);

}  // namespace smallsol
