#pragma once

// Multivariate Newton iteration in boost cpp_bin_float (no MPFR, no library
// evaluation code), used to check jets against true roots at sample lambdas.

#include "smallsol/jet.hpp"
#include "smallsol/system.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <iomanip>
#include <sstream>
#include <vector>

namespace testsupport {

using Float = boost::multiprecision::cpp_bin_float_100;

struct Cx {
    Float re, im;
};

inline Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
inline Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
inline Cx operator*(const Cx& a, const Cx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
inline Cx operator/(const Cx& a, const Cx& b) {
    Float d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
inline Float cabs(const Cx& a) { return sqrt(a.re * a.re + a.im * a.im); }

inline Cx cpow(Cx z, unsigned k) {
    Cx r{1, 0};
    while (k) {
        if (k & 1) r = r * z;
        z = z * z;
        k >>= 1;
    }
    return r;
}

inline Float to_float(const smallsol::Real& r) {
    std::ostringstream os;
    os << std::setprecision(120) << r;
    return Float(os.str());
}

inline Float to_float(const mpq_class& q) { return Float(q.get_num().get_str()) / Float(q.get_den().get_str()); }

inline Cx to_cx(const smallsol::Coefficient& c) {
    if (c.is_exact()) return {to_float(c.exact().re), to_float(c.exact().im)};
    auto z = c.to_complex();
    return {to_float(z.re), to_float(z.im)};
}

/// Jet value at a positive real lambda, principal root lambda^(1/ram) > 0.
inline std::vector<Cx> jet_values(const std::vector<smallsol::PuiseuxJet>& comps, const Float& lambda) {
    std::vector<Cx> out;
    for (const auto& c : comps) {
        Cx v{0, 0};
        for (const auto& t : c.terms()) {
            Float p = pow(lambda, Float(t.num) / Float(c.ram()));
            Cx coef = to_cx(t.coef);
            v = v + Cx{coef.re * p, coef.im * p};
        }
        out.push_back(v);
    }
    return out;
}

// f evaluated at (lambda, x), and optionally d f / d x_var.
inline Cx eval_poly(const smallsol::MultiPoly& f, const Cx& lambda, const std::vector<Cx>& x, int dvar = -1) {
    Cx s{0, 0};
    for (const auto& [e, c] : f.terms()) {
        Cx t = to_cx(c);
        if (dvar >= 0) {
            if (e[dvar] == 0) continue;
            t = t * Cx{Float(e[dvar]), 0};
        }
        for (std::size_t v = 0; v < e.size(); ++v) {
            unsigned k = e[v] - (static_cast<int>(v) == dvar ? 1 : 0);
            t = t * cpow(v == 0 ? lambda : x[v - 1], k);
        }
        s = s + t;
    }
    return s;
}

struct NewtonResult {
    std::vector<Cx> root;
    bool converged = false;
    Float residual;
};

inline NewtonResult newton(const smallsol::PolySystem& sys, const Float& lambda, std::vector<Cx> x) {
    const int n = sys.level();
    const Cx lam{lambda, 0};
    NewtonResult out;
    const Float eps("1e-90");
    for (int it = 0; it < 100; ++it) {
        std::vector<std::vector<Cx>> a(n, std::vector<Cx>(n + 1));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) a[i][j] = eval_poly(sys[i], lam, x, j + 1);
            a[i][n] = Cx{0, 0} - eval_poly(sys[i], lam, x);
        }
        for (int c = 0; c < n; ++c) {
            int piv = c;
            for (int r = c + 1; r < n; ++r)
                if (cabs(a[r][c]) > cabs(a[piv][c])) piv = r;
            std::swap(a[c], a[piv]);
            if (cabs(a[c][c]) == 0) return out;
            for (int r = c + 1; r < n; ++r) {
                Cx f = a[r][c] / a[c][c];
                for (int j = c; j <= n; ++j) a[r][j] = a[r][j] - f * a[c][j];
            }
        }
        std::vector<Cx> dx(n);
        for (int i = n - 1; i >= 0; --i) {
            Cx s = a[i][n];
            for (int j = i + 1; j < n; ++j) s = s - a[i][j] * dx[j];
            dx[i] = s / a[i][i];
        }
        Float step = 0;
        for (int i = 0; i < n; ++i) {
            x[i] = x[i] + dx[i];
            step = std::max(step, cabs(dx[i]));
        }
        if (step < eps) {
            out.converged = true;
            break;
        }
    }
    out.root = x;
    out.residual = 0;
    for (int i = 0; i < n; ++i) out.residual = std::max(out.residual, cabs(eval_poly(sys[i], lam, x)));
    return out;
}

}  // namespace testsupport
