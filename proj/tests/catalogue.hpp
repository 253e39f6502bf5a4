#pragma once

// Scalar equations with closed-form branches. Expected coefficients are
// produced here from the closed forms (binomial series, Catalan numbers,
// radicals evaluated in MPFR), independently of the expansion engine.

#include "support.hpp"

#include "smallsol/puiseux.hpp"

#include <map>
#include <string>
#include <vector>

namespace testsupport {

using ExpectedJet = std::map<mpq_class, Coefficient>;

struct CatalogueEntry {
    std::string equation;
    std::vector<ExpectedJet> branches;  ///< all small branches, each multiplicity one
};

inline mpq_class q_(long p, long q = 1) {
    mpq_class r(p, q);
    r.canonicalize();
    return r;
}

inline Coefficient num_(const Real& re, const Real& im = Real(0)) {
    return Coefficient::numeric(Complex(re, im), working_bits());
}

/// Coefficients of (1 + t)^(1/2) up to t^n.
inline std::vector<mpq_class> sqrt_series(int n) {
    std::vector<mpq_class> c{mpq_class(1)};
    for (int k = 1; k <= n; ++k) {
        mpq_class next = c.back() * (mpq_class(1, 2) - (k - 1)) / k;
        next.canonicalize();
        c.push_back(next);
    }
    return c;
}

inline std::vector<CatalogueEntry> scalar_catalogue() {
    std::vector<CatalogueEntry> cat;
    const Real s2 = sqrt(Real(2)), s3 = sqrt(Real(3));
    cat.push_back({"x^2 - l", {{{q_(1, 2), Q(1)}}, {{q_(1, 2), Q(-1)}}}});
    cat.push_back({"(x - l)^2 - l^3", {{{q_(1), Q(1)}, {q_(3, 2), Q(1)}}, {{q_(1), Q(1)}, {q_(3, 2), Q(-1)}}}});
    {
        // x = +-lambda (1 + lambda)^(1/2)
        ExpectedJet plus, minus;
        auto c = sqrt_series(5);
        for (int k = 0; k <= 5; ++k) {
            plus[q_(k + 1)] = Coefficient(c[k]);
            minus[q_(k + 1)] = Coefficient(mpq_class(-c[k]));
        }
        cat.push_back({"x^2 - l^2*(1 + l)", {plus, minus}});
    }
    cat.push_back({"x^3 - (l + l^2)*x^2 + l^3*x", {{}, {{q_(1), Q(1)}}, {{q_(2), Q(1)}}}});
    cat.push_back({"x^2 - 2*l^2", {{{q_(1), num_(s2)}}, {{q_(1), num_(-s2)}}}});
    cat.push_back({"x^3 - l^2",
                   {{{q_(2, 3), Q(1)}},
                    {{q_(2, 3), num_(Real(-1) / 2, s3 / 2)}},
                    {{q_(2, 3), num_(Real(-1) / 2, -s3 / 2)}}}});
    cat.push_back({"x^2 + l^2", {{{q_(1), Coefficient(GaussRational(0, 1))}}, {{q_(1), Coefficient(GaussRational(0, -1))}}}});
    {
        // x = lambda + x^2: generating function of the Catalan numbers.
        ExpectedJet cat_jet;
        for (long n = 0; n <= 5; ++n) {
            mpz_class b;
            mpz_bin_uiui(b.get_mpz_t(), 2 * n, n);
            cat_jet[q_(n + 1)] = Coefficient(mpq_class(b, n + 1));
        }
        cat.push_back({"x - l - x^2", {cat_jet}});
    }
    cat.push_back({"x^2 - l^3", {{{q_(3, 2), Q(1)}}, {{q_(3, 2), Q(-1)}}}});
    cat.push_back({"(x^2 - l)*(x - 2*l)", {{{q_(1, 2), Q(1)}}, {{q_(1, 2), Q(-1)}}, {{q_(1), Q(2)}}}});
    cat.push_back({"x^4 - l",
                   {{{q_(1, 4), Q(1)}},
                    {{q_(1, 4), Q(-1)}},
                    {{q_(1, 4), Coefficient(GaussRational(0, 1))}},
                    {{q_(1, 4), Coefficient(GaussRational(0, -1))}}}});
    cat.push_back({"x^2 - 2*l*x - l^2", {{{q_(1), num_(1 + s2)}}, {{q_(1), num_(1 - s2)}}}});
    return cat;
}

/// Terms of `jet` up to `upto` equal `expected` up to `upto`: exactly when both
/// sides are exact, within `tol` otherwise.
inline bool matches_expected(const PuiseuxJet& jet, const ExpectedJet& expected, const mpq_class& upto,
                             const Real& tol) {
    if (jet.trunc() < Order(upto)) return false;
    std::map<mpq_class, Coefficient> got;
    for (std::size_t i = 0; i < jet.terms().size(); ++i)
        if (jet.exponent(i) <= upto) got[jet.exponent(i)] = jet.terms()[i].coef;
    std::map<mpq_class, std::pair<Coefficient, Coefficient>> both;
    for (const auto& [e, c] : got) both[e].first = c;
    for (const auto& [e, c] : expected)
        if (e <= upto) both[e].second = c;
    for (const auto& [e, pr] : both) {
        const auto& [a, b] = pr;
        if (a.is_exact() && b.is_exact()) {
            if (!(a.exact() == b.exact())) return false;
        } else if ((a.to_complex() - b.to_complex()).abs() > tol) {
            return false;
        }
    }
    return true;
}

/// Every branch matched exactly once, and each is simple.
inline bool catalogue_entry_reproduced(const CatalogueEntry& entry, const std::vector<SliceRoot>& got,
                                       const mpq_class& upto, const Real& tol) {
    if (got.size() != entry.branches.size()) return false;
    std::vector<bool> used(got.size(), false);
    for (const auto& want : entry.branches) {
        bool found = false;
        for (std::size_t i = 0; i < got.size() && !found; ++i) {
            if (used[i] || got[i].multiplicity != 1 || got[i].kind != RootKind::simple) continue;
            if (matches_expected(got[i].jet, want, upto, tol)) used[i] = found = true;
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace testsupport
