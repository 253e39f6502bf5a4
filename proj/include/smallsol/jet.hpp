#pragma once

#include "smallsol/coefficient.hpp"

#include <map>
#include <string>
#include <vector>

namespace smallsol {

struct JetTerm {
    long num;          ///< exponent numerator; the exponent is num / ram
    Coefficient coef;  ///< never zero
};

/// Truncated Puiseux series  sum_i coef_i * lambda^(num_i / ram)  asserted
/// accurate modulo o(lambda^trunc). An infinite truncation order marks an
/// exact (finite) series.
///
/// Invariants: exponents strictly increase, no stored term lies beyond the
/// truncation order, and `ram` is minimal (gcd-reduced) except for values
/// produced by lift().
class PuiseuxJet {
public:
    PuiseuxJet() : trunc_(Order::infinity()) {}
    PuiseuxJet(long ram, std::vector<JetTerm> terms, Order trunc);

    static PuiseuxJet zero(Order trunc = Order::infinity()) { return PuiseuxJet(1, {}, std::move(trunc)); }
    static PuiseuxJet constant(const Coefficient& c, Order trunc = Order::infinity());
    static PuiseuxJet monomial(const Coefficient& c, long num, long ram, Order trunc = Order::infinity());

    long ram() const { return ram_; }
    const std::vector<JetTerm>& terms() const { return terms_; }
    const Order& trunc() const { return trunc_; }

    bool is_exact() const { return trunc_.is_infinite(); }
    /// No known nonzero term (zero modulo the truncation order).
    bool is_zero() const { return terms_.empty(); }
    bool is_identically_zero() const { return terms_.empty() && trunc_.is_infinite(); }
    bool has_numeric() const;

    mpq_class exponent(std::size_t i) const {
        mpq_class e(terms_.at(i).num, ram_);
        e.canonicalize();
        return e;
    }
    /// Leading exponent if a term is known, otherwise the truncation order (a
    /// lower bound that the true valuation strictly exceeds).
    Order valuation_bound() const;
    /// Coefficient of lambda^e (zero when absent).
    Coefficient coefficient_at(const mpq_class& e) const;

    /// Same series written over ramification ram*k (not normalized).
    PuiseuxJet lift(long k) const;
    /// Restores the minimal ramification.
    PuiseuxJet normalized() const;
    /// Drops terms beyond t and lowers the truncation order to min(trunc, t).
    PuiseuxJet truncated(const Order& t) const;
    PuiseuxJet conj() const;
    /// Adds one term beyond the current last one.
    PuiseuxJet with_term(const mpq_class& e, const Coefficient& c, Order new_trunc) const;
    PuiseuxJet with_trunc(Order t) const;

    PuiseuxJet operator-() const;
    friend PuiseuxJet operator+(const PuiseuxJet& a, const PuiseuxJet& b);
    friend PuiseuxJet operator-(const PuiseuxJet& a, const PuiseuxJet& b) { return a + (-b); }
    friend PuiseuxJet operator*(const PuiseuxJet& a, const PuiseuxJet& b);
    friend PuiseuxJet operator*(const Coefficient& c, const PuiseuxJet& a);

    /// Value at lambda using the principal determination of lambda^(1/ram).
    Complex evaluate(const Complex& lambda) const;

    std::string str(const std::string& var = "lambda") const;

private:
    struct Raw {};
    PuiseuxJet(Raw, long ram, std::vector<JetTerm> terms, Order trunc)
        : ram_(ram), terms_(std::move(terms)), trunc_(std::move(trunc)) {}

    long ram_ = 1;
    std::vector<JetTerm> terms_;
    Order trunc_;
};

/// Jets agree on every exponent up to `upto` (exactly for exact coefficients,
/// within tolerance for numeric ones). Both must be known to that order.
bool jets_agree(const PuiseuxJet& a, const PuiseuxJet& b, const Order& upto);

/// Three-way comparison used for deterministic ordering of branches.
int compare_jets(const PuiseuxJet& a, const PuiseuxJet& b);

long lcm_ram(long a, long b);

/// Grid index floor(order * ram): the largest numerator whose exponent does
/// not exceed `order`. Infinite orders map to LONG_MAX.
long grid_floor(const Order& order, long ram);

/// Sums coefficients per integer exponent. Numeric cancellations are judged
/// against the magnitude of the summands, not of the result.
class SeriesAccumulator {
public:
    void add(long exp, const Coefficient& c);
    std::map<long, Coefficient> finish() const;

private:
    struct Slot {
        Coefficient sum;
        Real scale{0};
    };
    std::map<long, Slot> slots_;
};

}  // namespace smallsol
