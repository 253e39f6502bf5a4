#pragma once

#include "smallsol/error.hpp"
#include "smallsol/system.hpp"

#include <optional>
#include <string>
#include <vector>

namespace smallsol {

/// A malformed system file. Line and column are 1-based (0 when unknown).
class ParseError : public InputError {
public:
    ParseError(const std::string& source, int line, int column, const std::string& what)
        : InputError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_, column_;
};

/// Contents of a system file:
///
///   format: smallsol-system/1
///   variables: [lambda, x1, x2]
///   equations:
///     - [{coefficient: "1", exponents: [0, 2, 0]}, {coefficient: "-1", exponents: [2, 0, 0]}]
///     - [{coefficient: ["0", "1/2"], exponents: [1, 0, 0]}, ...]
///   metadata:
///     input_order: 8
///
/// The first variable plays the role of lambda. A coefficient is a string
/// "p/q" or a pair [re, im] of such strings. `input_order` marks the
/// equations as Taylor polynomials truncated above that lambda order.
struct SystemFile {
    std::vector<std::string> variables;
    PolySystem system;
    std::optional<long> input_order;

    int unknowns() const { return static_cast<int>(variables.size()) - 1; }
};

SystemFile parse_system_file(const std::string& text, const std::string& source = "<input>");
SystemFile load_system_file(const std::string& path);
std::string write_system_file(const SystemFile& file);

}  // namespace smallsol
