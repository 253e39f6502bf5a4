#pragma once

// Independent numeric oracles used to check exact results: companion-matrix
// roots (Eigen, double precision) and the root-product formula for resultants.

#include "smallsol/multipoly.hpp"

#include <Eigen/Eigenvalues>

#include <complex>
#include <vector>

namespace testsupport {

using cd = std::complex<double>;

inline cd to_cd(const smallsol::Complex& z) { return {z.re.convert_to<double>(), z.im.convert_to<double>()}; }

/// Roots of sum_k c[k] x^k (c.back() != 0) as eigenvalues of the companion matrix.
inline std::vector<cd> companion_roots(const std::vector<cd>& c) {
    const int d = static_cast<int>(c.size()) - 1;
    if (d < 1) return {};
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 1; i < d; ++i) m(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) m(i, d - 1) = -c[i] / c[d];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
    std::vector<cd> roots;
    for (int i = 0; i < d; ++i) roots.push_back(es.eigenvalues()(i));
    return roots;
}

/// Coefficients in `var` of f with every other variable set from `point`
/// (point[var] is ignored).
inline std::vector<cd> specialize(const smallsol::MultiPoly& f, int var, const std::vector<cd>& point) {
    std::vector<cd> c(f.degree(var) + 1, cd(0));
    for (const auto& [e, coef] : f.terms()) {
        cd t = to_cd(coef.to_complex());
        for (std::size_t i = 0; i < e.size(); ++i)
            if (static_cast<int>(i) != var) t *= std::pow(point[i], static_cast<int>(e[i]));
        c[e[var]] += t;
    }
    return c;
}

inline cd horner(const std::vector<cd>& c, cd x) {
    cd r(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
    return r;
}

inline cd evaluate_cd(const smallsol::MultiPoly& f, const std::vector<cd>& point) {
    cd s(0);
    for (const auto& [e, coef] : f.terms()) {
        cd t = to_cd(coef.to_complex());
        for (std::size_t i = 0; i < e.size(); ++i) t *= std::pow(point[i], static_cast<int>(e[i]));
        s += t;
    }
    return s;
}

/// lc(p)^deg(q) * prod q(roots of p), with the other variables specialized.
inline cd root_product_resultant(const smallsol::MultiPoly& p, const smallsol::MultiPoly& q, int var,
                                 const std::vector<cd>& point) {
    auto pc = specialize(p, var, point), qc = specialize(q, var, point);
    cd r = std::pow(pc.back(), static_cast<int>(qc.size() - 1));
    for (cd root : companion_roots(pc)) r *= horner(qc, root);
    return r;
}

}  // namespace testsupport
