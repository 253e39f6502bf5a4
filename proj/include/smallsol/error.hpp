#pragma once

#include <stdexcept>
#include <string>

namespace smallsol {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad system files, violated preconditions on arguments.
class InputError : public Error {
public:
    using Error::Error;
};

/// A jet is too short to determine the requested quantity. `required` is the
/// truncation order (as a decimal string, e.g. "7/2") that would suffice.
class TruncationError : public Error {
public:
    TruncationError(const std::string& what, std::string required)
        : Error(what + " (required order " + required + ")"), required_(std::move(required)) {}
    const std::string& required() const { return required_; }

private:
    std::string required_;
};

/// Numerically close roots could not be told apart at the working precision.
class PrecisionError : public Error {
public:
    PrecisionError(const std::string& what, double separation)
        : Error(what), separation_(separation) {}
    double separation() const { return separation_; }

private:
    double separation_;
};

/// Two equations joined by a tree edge have an identically zero resultant.
class DegenerateEdgeError : public Error {
public:
    DegenerateEdgeError(int level, int a, int b)
        : Error("degenerate edge {" + std::to_string(a) + "," + std::to_string(b) + "} at level " +
                std::to_string(level)),
          level_(level), a_(a), b_(b) {}
    int level() const { return level_; }
    int first() const { return a_; }
    int second() const { return b_; }

private:
    int level_, a_, b_;
};

}  // namespace smallsol
