#pragma once

// Generator of systems with known small solutions. The equations
// g_1 = prod (x_1 - b_s), g_k = x_k - p_k(lambda, x_1..x_{k-1}) vanish exactly
// on the planted branches; the emitted system mixes them as
// f_j = sum_i (M_ji + u_ji) g_i with M an invertible integer matrix and u_ji
// linear forms vanishing at the origin, so near the origin the solution set
// is unchanged.

#include "support.hpp"

#include "smallsol/system.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace testsupport {

struct PlantedSystem {
    PolySystem system;
    /// Each branch lists n component jets (exact).
    std::vector<std::vector<PuiseuxJet>> branches;
    std::string description;
};

namespace planted_detail {

inline MultiPoly lambda_poly(int nvars, const std::vector<long>& c) {
    // c[e] is the coefficient of lambda^(e+1)
    MultiPoly p(nvars);
    for (std::size_t e = 0; e < c.size(); ++e) {
        if (c[e] == 0) continue;
        Exponent ex(nvars + 1, 0);
        ex[0] = static_cast<unsigned>(e + 1);
        p.add_term(ex, Coefficient(c[e]));
    }
    return p;
}

inline std::vector<long> random_coeffs(std::mt19937& rng, int len, bool nonzero_lead) {
    std::uniform_int_distribution<long> d(-3, 3);
    std::vector<long> c(len);
    for (auto& v : c) v = d(rng);
    if (nonzero_lead && c[0] == 0) c[0] = 1;
    return c;
}

inline long det(std::vector<std::vector<long>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    long s = 0;
    for (int c = 0; c < n; ++c) {
        std::vector<std::vector<long>> minor;
        for (int r = 1; r < n; ++r) {
            std::vector<long> row;
            for (int j = 0; j < n; ++j)
                if (j != c) row.push_back(m[r][j]);
            minor.push_back(row);
        }
        s += (c % 2 ? -1 : 1) * m[0][c] * det(minor);
    }
    return s;
}

inline PolySystem mix(const std::vector<MultiPoly>& g, int n, std::mt19937& rng) {
    std::uniform_int_distribution<long> md(-2, 2), nz(1, 2), ud(-2, 2);
    // Every equation keeps a pure x_n term at lambda = 0 (last column
    // nonzero), and the perturbations involve lambda and x_1 only, which
    // keeps the elimination degrees small.
    std::vector<std::vector<long>> M;
    do {
        M.assign(n, std::vector<long>(n));
        for (auto& row : M) {
            for (auto& v : row) v = md(rng);
            row[n - 1] = nz(rng) * (rng() % 2 ? 1 : -1);
        }
    } while (det(M) == 0);
    std::vector<MultiPoly> f;
    for (int j = 0; j < n; ++j) {
        MultiPoly fj(n);
        for (int i = 0; i < n; ++i) {
            MultiPoly factor = MultiPoly::constant(n, Coefficient(M[j][i]));
            for (int v = 0; v <= 1; ++v) {
                long a = ud(rng);
                if (a != 0 && rng() % 2 == 0) factor += Coefficient(a) * MultiPoly::variable(n, v);
            }
            fj += factor * g[i];
        }
        f.push_back(fj);
    }
    return PolySystem(std::move(f), n);
}


// Exact series sum c_k lambda^(k/ram), used to evaluate the planted
// components without the library's jet arithmetic.
using Series = std::map<long, mpq_class>;

inline Series series_mul(const Series& a, const Series& b) {
    Series r;
    for (const auto& [i, x] : a)
        for (const auto& [j, y] : b) r[i + j] += x * y;
    return r;
}

// Value of the polynomial f(lambda, x_1..x_m) at the given series (all over
// the same ramification `ram`).
inline Series series_eval(const MultiPoly& f, const std::vector<Series>& xs, long ram) {
    Series total;
    for (const auto& [e, c] : f.terms()) {
        Series t{{static_cast<long>(e[0]) * ram, c.exact().re}};
        for (std::size_t v = 1; v < e.size(); ++v)
            for (unsigned k = 0; k < e[v]; ++k) t = series_mul(t, xs[v - 1]);
        for (const auto& [i, x] : t) total[i] += x;
    }
    for (auto it = total.begin(); it != total.end();) it = sgn(it->second) == 0 ? total.erase(it) : std::next(it);
    return total;
}

inline PuiseuxJet series_jet(const Series& s, long ram) {
    std::vector<JetTerm> t;
    for (const auto& [i, x] : s) t.push_back({i, Coefficient(x)});
    return PuiseuxJet(ram, std::move(t), Order::infinity()).normalized();
}

// x_k - p_k(lambda, x_1..x_{k-1}) with p_k(0, 0) = 0 and small integer coefficients.
inline MultiPoly random_graph_equation(int n, int k, std::mt19937& rng) {
    std::uniform_int_distribution<long> d(-2, 2);
    MultiPoly p(n);
    auto add = [&](Exponent e) {
        long c = d(rng);
        if (c != 0) p.add_term(e, Coefficient(c));
    };
    Exponent e(n + 1, 0);
    e[0] = 1;
    add(e);
    for (int v = 1; v < k; ++v) {
        Exponent lin(n + 1, 0);
        lin[v] = 1;
        add(lin);
        Exponent quad(n + 1, 0);
        quad[v] = 2;
        add(quad);
        Exponent mixed(n + 1, 0);
        mixed[0] = 1;
        mixed[v] = 1;
        add(mixed);
    }
    return MultiPoly::variable(n, k) - p;
}

inline PlantedSystem finish(const std::vector<MultiPoly>& g, const std::vector<Series>& x1_values, long ram, int n,
                            std::mt19937& rng) {
    PlantedSystem out;
    out.system = mix(g, n, rng);
    for (const auto& x1 : x1_values) {
        std::vector<Series> xs{x1};
        for (int k = 2; k <= n; ++k) {
            // g_k = x_k - p_k, so x_k = p_k(x_1..x_{k-1}) = x_k - g_k evaluated with x_k = 0.
            MultiPoly pk = MultiPoly::variable(n, k) - g[k - 1];
            std::vector<Series> args = xs;
            args.resize(n);
            xs.push_back(series_eval(pk, args, ram));
        }
        std::vector<PuiseuxJet> b;
        for (const auto& x : xs) b.push_back(series_jet(x, ram));
        out.branches.push_back(std::move(b));
    }
    return out;
}

}  // namespace planted_detail

/// Branches with integer exponents: x_1 takes `count` distinct values
/// a*lambda + b*lambda^2 and each later unknown is a polynomial in the earlier ones.
inline PlantedSystem planted_polynomial(int n, int count, std::mt19937& rng) {
    using namespace planted_detail;
    std::vector<std::vector<long>> vals;
    while (static_cast<int>(vals.size()) < count) {
        auto c = random_coeffs(rng, 2, true);
        if (std::find(vals.begin(), vals.end(), c) == vals.end()) vals.push_back(c);
    }
    const MultiPoly x1 = MultiPoly::variable(n, 1);
    MultiPoly g1 = MultiPoly::constant(n, Coefficient(1));
    std::vector<Series> x1_values;
    for (const auto& c : vals) {
        g1 = g1 * (x1 - lambda_poly(n, c));
        Series s;
        for (std::size_t e = 0; e < c.size(); ++e)
            if (c[e] != 0) s[static_cast<long>(e + 1)] = c[e];
        x1_values.push_back(s);
    }
    std::vector<MultiPoly> g{g1};
    for (int k = 2; k <= n; ++k) g.push_back(random_graph_equation(n, k, rng));
    PlantedSystem out = finish(g, x1_values, 1, n, rng);
    out.description = "polynomial n=" + std::to_string(n) + " count=" + std::to_string(count);
    return out;
}

/// A conjugate pair x_1 = +-c lambda^(k/2) (k odd); later unknowns are
/// polynomials in the earlier ones.
inline PlantedSystem planted_ramified(int n, std::mt19937& rng) {
    using namespace planted_detail;
    std::uniform_int_distribution<long> cd(1, 3);
    const long c = cd(rng);
    const long k = (rng() % 2) ? 1 : 3;
    const MultiPoly x1 = MultiPoly::variable(n, 1);
    Exponent lk(n + 1, 0);
    lk[0] = static_cast<unsigned>(k);
    std::vector<MultiPoly> g{x1 * x1 - MultiPoly::monomial(n, lk, Coefficient(c * c))};
    for (int j = 2; j <= n; ++j) g.push_back(random_graph_equation(n, j, rng));
    std::vector<Series> x1_values{{{k, mpq_class(c)}}, {{k, mpq_class(-c)}}};
    PlantedSystem out = finish(g, x1_values, 2, n, rng);
    out.description = "ramified n=" + std::to_string(n) + " c=" + std::to_string(c) + " k=" + std::to_string(k);
    return out;
}

/// The fixed corpus of 20 planted systems, n in {2, 3}.
inline std::vector<PlantedSystem> planted_corpus() {
    std::mt19937 rng(20240611);
    std::vector<PlantedSystem> out;
    for (int i = 0; i < 6; ++i) out.push_back(planted_polynomial(2, 2 + i % 2, rng));
    for (int i = 0; i < 4; ++i) out.push_back(planted_ramified(2, rng));
    for (int i = 0; i < 6; ++i) out.push_back(planted_polynomial(3, 2 + i % 2, rng));
    for (int i = 0; i < 4; ++i) out.push_back(planted_ramified(3, rng));
    return out;
}

}  // namespace testsupport
