#pragma once

#include "smallsol/coefficient.hpp"

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace smallsol {

/// Exponent vector (k_0, k_1, ..., k_n): k_0 is the power of the parameter
/// lambda, k_i the power of the unknown x_i.
using Exponent = std::vector<unsigned>;

/// Sparse polynomial in lambda, x_1..x_n with exact or numeric coefficients.
/// Variable index 0 is lambda; unknowns are 1-based. Zero coefficients are
/// never stored.
class MultiPoly {
public:
    using TermMap = std::map<Exponent, Coefficient>;

    explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

    static MultiPoly constant(int nvars, const Coefficient& c);
    static MultiPoly variable(int nvars, int var);
    static MultiPoly monomial(int nvars, Exponent e, const Coefficient& c);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_exact() const;
    /// Precision of the numeric coefficients, 0 for an exact polynomial.
    unsigned bits() const { return is_exact() ? 0u : bits_; }

    /// Adds c * monomial(e); cancelled terms are removed.
    void add_term(const Exponent& e, const Coefficient& c);
    Coefficient coeff(const Exponent& e) const;

    unsigned degree(int var) const;
    /// Lowest power of `var` over all terms.
    unsigned valuation(int var) const;
    unsigned total_degree() const;
    bool depends_on(int var) const;
    /// Value of the constant term (zero if absent).
    Coefficient constant_term() const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const Coefficient& c, const MultiPoly& p);
    MultiPoly operator-() const;
    MultiPoly pow(unsigned k) const;

    MultiPoly derivative(int var) const;
    /// Sets variable `var` to zero.
    MultiPoly at_zero(int var) const;
    /// Replaces `var` by the polynomial `value` (same variable count).
    MultiPoly substitute(int var, const MultiPoly& value) const;
    /// Divides by var^k; every term must be divisible.
    MultiPoly shift_down(int var, unsigned k) const;
    MultiPoly conj() const;
    MultiPoly to_numeric(unsigned bits) const;
    /// Deletes unknown `var` (which must not occur) and renumbers the later ones.
    MultiPoly remove_var(int var) const;
    /// Same polynomial viewed in `nvars` >= nvars() unknowns.
    MultiPoly embed(int nvars) const;

    Complex evaluate(std::span<const Complex> point) const;

    /// Human-readable form using `names` (index 0 = parameter).
    std::string str(const std::vector<std::string>& names = {}) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

private:
    int nvars_;
    TermMap terms_;
    unsigned bits_ = 0;
};

/// A polynomial viewed as univariate in one distinguished unknown.
class UniView {
public:
    UniView(const MultiPoly& base, int var);

    const MultiPoly& base() const { return base_; }
    int var() const { return var_; }
    const std::vector<MultiPoly>& coeffs() const { return coeffs_; }
    unsigned degree() const { return static_cast<unsigned>(coeffs_.size() - 1); }
    const MultiPoly& leading() const { return coeffs_.back(); }
    MultiPoly reassemble() const { return assemble(coeffs_, var_, base_.nvars()); }

    static MultiPoly assemble(const std::vector<MultiPoly>& coeffs, int var, int nvars);

private:
    MultiPoly base_;
    int var_;
    std::vector<MultiPoly> coeffs_;
};

/// Factors out the largest power of lambda: f = lambda^k * g. Throws on zero input.
std::pair<MultiPoly, unsigned> normalize_lambda(const MultiPoly& f);

std::vector<std::string> default_names(int nvars);

}  // namespace smallsol
