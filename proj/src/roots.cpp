#include "smallsol/roots.hpp"

#include "smallsol/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

namespace smallsol {

namespace {

using boost::multiprecision::ldexp;

bool all_exact(const CoeffPoly& p) {
    return std::all_of(p.begin(), p.end(), [](const Coefficient& c) { return c.is_exact(); });
}

int deg(const CoeffPoly& p) { return static_cast<int>(p.size()) - 1; }

CoeffPoly make_monic(CoeffPoly p) {
    p = poly_trim(std::move(p));
    if (p.empty()) return p;
    Coefficient lc = p.back();
    for (auto& c : p) c /= lc;
    return p;
}

CoeffPoly sub(CoeffPoly a, const CoeffPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return poly_trim(std::move(a));
}

// Quotient and remainder over the coefficient field.
std::pair<CoeffPoly, CoeffPoly> divmod(CoeffPoly a, const CoeffPoly& b) {
    a = poly_trim(std::move(a));
    if (b.empty()) throw Error("polynomial division by zero");
    if (deg(a) < deg(b)) return {{}, a};
    CoeffPoly q(a.size() - b.size() + 1);
    for (int k = deg(a) - deg(b); k >= 0; --k) {
        Coefficient t = a[k + deg(b)] / b.back();
        q[k] = t;
        for (int j = 0; j <= deg(b); ++j) a[k + j] -= t * b[j];
        a.resize(k + deg(b));
    }
    return {poly_trim(std::move(q)), poly_trim(std::move(a))};
}

CoeffPoly exact_quotient(const CoeffPoly& a, const CoeffPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.empty()) throw Error("inexact polynomial division");
    return q;
}

CoeffPoly field_gcd(CoeffPoly a, CoeffPoly b) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (!b.empty()) {
        CoeffPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(std::move(a));
}

Complex eval_complex(const std::vector<Complex>& c, const Complex& z) {
    Complex r;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * z + *it;
    return r;
}

// Value and derivative by Horner.
std::pair<Complex, Complex> eval_with_derivative(const std::vector<Complex>& c, const Complex& z) {
    Complex p, dp;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        dp = dp * z + p;
        p = p * z + *it;
    }
    return {p, dp};
}

std::vector<Complex> derivative(const std::vector<Complex>& c) {
    std::vector<Complex> d;
    for (std::size_t k = 1; k < c.size(); ++k) d.push_back(c[k] * Complex(Real(static_cast<long>(k))));
    return d;
}

Real pi() { return boost::multiprecision::acos(Real(-1)); }

// Best rational approximation of x with denominator at most `max_den`, by
// continued fractions. Returns nullopt if no convergent gets within `eps`.
std::optional<mpq_class> recognize(const Real& x, const mpz_class& max_den, const Real& eps) {
    mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    Real rest = x;
    for (int step = 0; step < 200; ++step) {
        Real fl = floor(rest);
        mpz_class a;
        mpfr_get_z(a.get_mpz_t(), fl.backend().data(), MPFR_RNDN);
        mpz_class h2 = a * h1 + h0, k2 = a * k1 + k0;
        if (k2 > max_den) return std::nullopt;
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        mpq_class q(h1, k1);
        q.canonicalize();
        if (abs(to_real(q) - x) <= eps) return q;
        Real f = rest - fl;
        if (f == 0) return std::nullopt;
        rest = 1 / f;
    }
    return std::nullopt;
}

std::optional<Coefficient> recognize_exact(const CoeffPoly& p, const Complex& z, unsigned bits) {
    mpz_class max_den = 1;
    max_den <<= bits / 4;
    Real scale = max(Real(1), z.abs());
    Real eps = ldexp(Real(1), -static_cast<int>(bits / 2)) * scale;
    auto re = abs(z.re) <= eps ? std::optional<mpq_class>(0) : recognize(z.re, max_den, eps);
    if (!re) return std::nullopt;
    auto im = abs(z.im) <= eps ? std::optional<mpq_class>(0) : recognize(z.im, max_den, eps);
    if (!im) return std::nullopt;
    Coefficient c(GaussRational(*re, *im));
    if (!poly_eval(p, c).is_zero()) return std::nullopt;
    return c;
}

Real min_separation(const std::vector<Complex>& z) {
    Real best = -1;
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = i + 1; j < z.size(); ++j) {
            Real d = (z[i] - z[j]).abs();
            if (best < 0 || d < best) best = d;
        }
    return best;
}

void sort_roots(std::vector<PolyRoot>& roots) {
    std::stable_sort(roots.begin(), roots.end(), [](const PolyRoot& a, const PolyRoot& b) {
        int c = compare(a.value, b.value);
        if (c != 0) return c < 0;
        return a.multiplicity < b.multiplicity;
    });
}

std::vector<PolyRoot> exact_roots(const CoeffPoly& p, unsigned bits) {
    std::vector<PolyRoot> out;
    Real limit = ldexp(Real(1), -static_cast<int>(bits / 4));
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        if (deg(factor) == 1) {
            out.push_back({-factor[0] / factor[1], mult});
            continue;
        }
        std::vector<Complex> z = aberth_roots(factor, bits);
        Real sep = min_separation(z);
        if (sep >= 0 && sep < limit * max(Real(1), z.front().abs()))
            throw PrecisionError("roots of an edge polynomial are too close to separate at " +
                                     std::to_string(bits) + " bits",
                                 sep.convert_to<double>());
        for (const auto& r : z) {
            if (auto c = recognize_exact(factor, r, bits)) out.push_back({*c, mult});
            else out.push_back({Coefficient::numeric(r, bits), mult});
        }
    }
    return out;
}

// Roots of a numeric polynomial. Roots closer than the cluster radius are
// merged when the derivatives at the cluster centre vanish as they must for
// a root of that multiplicity.
std::vector<PolyRoot> numeric_roots(const CoeffPoly& p, unsigned bits) {
    std::vector<Complex> c;
    for (const auto& a : p) c.push_back(a.to_complex());
    std::vector<Complex> z = aberth_roots(p, bits);
    const std::size_t n = z.size();
    Real tol = tolerance(bits);
    Real radius = 16 * pow(tol, Real(1) / Real(static_cast<long>(n)));

    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if ((z[i] - z[j]).abs() <= radius * max(Real(1), z[i].abs())) parent[find(i)] = find(j);

    std::map<std::size_t, std::vector<Complex>> clusters;
    for (std::size_t i = 0; i < n; ++i) clusters[find(i)].push_back(z[i]);

    Real coef_scale = 0;
    for (const auto& a : c) coef_scale = max(coef_scale, a.abs());

    std::vector<PolyRoot> out;
    for (auto& [_, members] : clusters) {
        const unsigned m = static_cast<unsigned>(members.size());
        Complex centre;
        for (const auto& w : members) centre += w;
        centre /= Complex(Real(static_cast<long>(m)));
        if (m > 1) {
            // The centre is a simple root of the (m-1)-th derivative.
            std::vector<Complex> d = c;
            for (unsigned k = 0; k + 1 < m; ++k) d = derivative(d);
            for (int it = 0; it < 8; ++it) {
                auto [v, dv] = eval_with_derivative(d, centre);
                if (dv.abs() == 0) break;
                centre -= v / dv;
            }
            std::vector<Complex> d2 = c;
            Real factorial = 1;
            for (unsigned j = 0; j < m; ++j) {
                if (j > 0) {
                    d2 = derivative(d2);
                    factorial *= j;
                }
                Real value = eval_complex(d2, centre).abs() / factorial;
                Real bound = coef_scale * pow(max(Real(1), centre.abs()), Real(static_cast<long>(n))) *
                             pow(tol, Real(static_cast<long>(m - j)) / Real(static_cast<long>(m))) *
                             Real(65536);
                if (value > bound)
                    throw PrecisionError("nearby roots cannot be told apart at " + std::to_string(bits) +
                                             " bits",
                                         min_separation(members).convert_to<double>());
            }
        }
        out.push_back({Coefficient::numeric(centre, bits), m});
    }
    return out;
}

}  // namespace

CoeffPoly poly_trim(CoeffPoly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

Coefficient poly_eval(const CoeffPoly& p, const Coefficient& x) {
    Coefficient r(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
    return r;
}

CoeffPoly poly_derivative(const CoeffPoly& p) {
    CoeffPoly d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * Coefficient(static_cast<long>(k)));
    return poly_trim(std::move(d));
}

std::vector<std::pair<CoeffPoly, unsigned>> squarefree_decomposition(const CoeffPoly& p) {
    CoeffPoly a = make_monic(p);
    if (!all_exact(a)) throw Error("square-free decomposition needs exact coefficients");
    std::vector<std::pair<CoeffPoly, unsigned>> out;
    if (deg(a) < 1) return out;
    CoeffPoly b = poly_derivative(a);
    CoeffPoly g = field_gcd(a, b);
    CoeffPoly w = exact_quotient(a, g);
    CoeffPoly y = exact_quotient(b, g);
    CoeffPoly z = sub(y, poly_derivative(w));
    for (unsigned i = 1; deg(w) > 0; ++i) {
        CoeffPoly h = field_gcd(w, z);
        if (deg(h) > 0) out.emplace_back(h, i);
        w = exact_quotient(w, h);
        y = exact_quotient(z, h);
        z = sub(y, poly_derivative(w));
    }
    return out;
}

std::vector<Complex> aberth_roots(const CoeffPoly& poly, unsigned bits) {
    CoeffPoly p = poly_trim(poly);
    const int n = deg(p);
    if (n < 1) return {};
    std::vector<Complex> c;
    Complex lead = p.back().to_complex();
    for (const auto& a : p) c.push_back(a.to_complex() / lead);

    // Fujiwara bound on the root moduli.
    Real bound = 0;
    for (int k = 1; k <= n; ++k) {
        Real v = c[n - k].abs();
        if (v == 0) continue;
        v = pow(v, Real(1) / Real(k));
        if (k == n) v = pow(c[0].abs() / 2, Real(1) / Real(n));
        bound = max(bound, v);
    }
    bound *= 2;
    if (bound == 0) return std::vector<Complex>(n);
    std::vector<Complex> z;
    for (int k = 0; k < n; ++k)
        z.push_back(Complex::polar(bound / 2, 2 * pi() * k / n + Real(0.4)));

    const Real eps = ldexp(Real(1), -static_cast<int>(bits) + 8);
    const int max_iter = 400 + 40 * n;
    for (int it = 0; it < max_iter; ++it) {
        bool done = true;
        for (int i = 0; i < n; ++i) {
            auto [v, dv] = eval_with_derivative(c, z[i]);
            if (v.abs() == 0) continue;
            Complex s;
            for (int j = 0; j < n; ++j)
                if (j != i) s += Complex(Real(1)) / (z[i] - z[j]);
            Complex corr;
            if (dv.abs() == 0) corr = Complex(Real(1)) / s;
            else {
                Complex w = v / dv;
                corr = w / (Complex(Real(1)) - w * s);
            }
            z[i] -= corr;
            if (corr.abs() > eps * max(Real(1), z[i].abs())) done = false;
        }
        if (done) break;
    }
    return z;
}

std::vector<PolyRoot> polynomial_roots(const CoeffPoly& poly, unsigned bits) {
    CoeffPoly p = poly_trim(poly);
    if (deg(p) < 1) return {};
    std::vector<PolyRoot> out;
    // Roots at zero are split off exactly in both modes.
    std::size_t zeros = 0;
    while (zeros < p.size() && p[zeros].is_zero()) ++zeros;
    if (zeros > 0) {
        out.push_back({Coefficient(0), static_cast<unsigned>(zeros)});
        p.erase(p.begin(), p.begin() + static_cast<long>(zeros));
    }
    if (deg(p) >= 1) {
        auto rest = all_exact(p) ? exact_roots(p, bits) : numeric_roots(p, bits);
        out.insert(out.end(), rest.begin(), rest.end());
    }
    sort_roots(out);
    return out;
}

}  // namespace smallsol
