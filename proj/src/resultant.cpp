#include "smallsol/resultant.hpp"

#include "smallsol/error.hpp"

#include <algorithm>

namespace smallsol {

namespace {

using Dense = std::vector<MultiPoly>;

void trim(Dense& d) {
    while (!d.empty() && d.back().is_zero()) d.pop_back();
}

Dense dense_of(const MultiPoly& p, int var) {
    if (p.is_zero()) return {};
    return UniView(p, var).coeffs();
}

MultiPoly one(int nvars) { return MultiPoly::constant(nvars, Coefficient(1)); }

Dense prem_dense(Dense a, const Dense& b) {
    if (b.empty()) throw Error("pseudo-division by zero");
    trim(a);
    if (a.size() < b.size()) return a;
    const MultiPoly& lcb = b.back();
    const std::size_t db = b.size() - 1;
    long e = static_cast<long>(a.size() - b.size()) + 1;
    while (!a.empty() && a.size() - 1 >= db) {
        MultiPoly lcr = a.back();
        std::size_t s = a.size() - 1 - db;
        for (auto& c : a) c = lcb * c;
        for (std::size_t j = 0; j < b.size(); ++j) a[j + s] -= lcr * b[j];
        trim(a);
        --e;
    }
    if (e > 0) {
        MultiPoly f = lcb.pow(static_cast<unsigned>(e));
        for (auto& c : a) c = f * c;
    }
    return a;
}

void require_exact(const MultiPoly& p) {
    if (!p.is_exact()) throw Error("elimination requires exact coefficients");
}

// Scales p so that its leading term, comparing exponents from the last
// unknown down to lambda, has coefficient 1.
MultiPoly monic(const MultiPoly& p) {
    if (p.is_zero()) return p;
    auto rev_less = [](const Exponent& a, const Exponent& b) {
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    };
    auto lead = p.terms().begin();
    for (auto it = p.terms().begin(); it != p.terms().end(); ++it)
        if (rev_less(lead->first, it->first)) lead = it;
    Coefficient inv = Coefficient(1) / lead->second;
    return inv * p;
}

}  // namespace

MultiPoly prem(const MultiPoly& a, const MultiPoly& b, int var) {
    Dense r = prem_dense(dense_of(a, var), dense_of(b, var));
    return UniView::assemble(r, var, a.nvars());
}

std::optional<MultiPoly> try_divide(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw Error("division by the zero polynomial");
    MultiPoly q(a.nvars()), r = a;
    const auto& [eb, cb] = *b.terms().rbegin();
    while (!r.is_zero()) {
        auto [er, cr] = *r.terms().rbegin();
        Exponent shift(er.size());
        for (std::size_t i = 0; i < er.size(); ++i) {
            if (er[i] < eb[i]) return std::nullopt;
            shift[i] = er[i] - eb[i];
        }
        Coefficient f = cr / cb;
        q.add_term(shift, f);
        Exponent e(er.size());
        for (const auto& [bt, bc] : b.terms()) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = bt[i] + shift[i];
            r.add_term(e, -(f * bc));
        }
    }
    return q;
}

MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b) {
    auto q = try_divide(a, b);
    if (!q) throw Error("inexact polynomial division");
    return *q;
}

MultiPoly resultant(const UniView& p, const UniView& q) {
    if (p.var() != q.var()) throw Error("resultant: views use different variables");
    if (p.degree() == 0 || q.degree() == 0) throw Error("constant in eliminated variable");
    require_exact(p.base());
    require_exact(q.base());
    const int nv = p.base().nvars();
    Dense a = p.coeffs(), b = q.coeffs();
    long s = 1;
    if (a.size() < b.size()) {
        if ((a.size() - 1) % 2 == 1 && (b.size() - 1) % 2 == 1) s = -1;
        std::swap(a, b);
    }
    MultiPoly g = one(nv), h = one(nv);
    while (true) {
        const long da = static_cast<long>(a.size()) - 1, db = static_cast<long>(b.size()) - 1;
        const long delta = da - db;
        if (da % 2 == 1 && db % 2 == 1) s = -s;
        Dense r = prem_dense(a, b);
        if (r.empty()) return MultiPoly(nv);
        a = std::move(b);
        MultiPoly div = g * h.pow(static_cast<unsigned>(delta));
        for (auto& c : r) c = divide_exact(c, div);
        b = std::move(r);
        g = a.back();
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            h = divide_exact(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
        }
        if (b.size() == 1) {
            const unsigned dA = static_cast<unsigned>(a.size() - 1);
            MultiPoly res = divide_exact(b.back().pow(dA), h.pow(dA - 1));
            return Coefficient(s) * res;
        }
    }
}

MultiPoly sylvester_resultant(const UniView& p, const UniView& q) {
    if (p.var() != q.var()) throw Error("resultant: views use different variables");
    if (p.degree() == 0 || q.degree() == 0) throw Error("constant in eliminated variable");
    require_exact(p.base());
    require_exact(q.base());
    const int nv = p.base().nvars();
    const std::size_t m = p.degree(), n = q.degree(), N = m + n;
    std::vector<std::vector<MultiPoly>> M(N, std::vector<MultiPoly>(N, MultiPoly(nv)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k <= m; ++k) M[i][i + k] = p.coeffs()[m - k];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k <= n; ++k) M[n + i][i + k] = q.coeffs()[n - k];

    long sign = 1;
    MultiPoly prev = one(nv);
    for (std::size_t k = 0; k + 1 < N; ++k) {
        if (M[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < N && M[r][k].is_zero()) ++r;
            if (r == N) return MultiPoly(nv);
            std::swap(M[r], M[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < N; ++i) {
            for (std::size_t j = k + 1; j < N; ++j)
                M[i][j] = divide_exact(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev);
            M[i][k] = MultiPoly(nv);
        }
        prev = M[k][k];
    }
    return Coefficient(sign) * M[N - 1][N - 1];
}

std::pair<MultiPoly, MultiPoly> content_primitive(const MultiPoly& a, int var) {
    if (a.is_zero()) return {a, a};
    MultiPoly c(a.nvars());
    UniView view(a, var);
    for (const auto& coef : view.coeffs()) {
        if (coef.is_zero()) continue;
        c = c.is_zero() ? monic(coef) : poly_gcd(c, coef);
    }
    return {c, divide_exact(a, c)};
}

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
    require_exact(a);
    require_exact(b);
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    const int nv = a.nvars();
    int v = -1;
    for (int i = nv; i >= 0 && v < 0; --i)
        if (a.depends_on(i) || b.depends_on(i)) v = i;
    if (v < 0) return one(nv);
    // v may be 0 (lambda), which UniView does not accept, so the splitting is done by hand.
    auto split = [&](const MultiPoly& p) -> std::pair<MultiPoly, MultiPoly> {
        if (!p.depends_on(v)) return {monic(p), one(nv)};
        MultiPoly c(nv);
        std::vector<MultiPoly> coeffs(p.degree(v) + 1, MultiPoly(nv));
        for (const auto& [e, coef] : p.terms()) {
            Exponent rest = e;
            rest[v] = 0;
            coeffs[e[v]].add_term(rest, coef);
        }
        for (const auto& k : coeffs) {
            if (k.is_zero()) continue;
            c = c.is_zero() ? monic(k) : poly_gcd(c, k);
        }
        return {c, divide_exact(p, c)};
    };
    auto [ca, pa] = split(a);
    auto [cb, pb] = split(b);
    MultiPoly content = poly_gcd(ca, cb);

    auto dense = [&](const MultiPoly& p) {
        std::vector<MultiPoly> coeffs(p.degree(v) + 1, MultiPoly(nv));
        for (const auto& [e, coef] : p.terms()) {
            Exponent rest = e;
            rest[v] = 0;
            coeffs[e[v]].add_term(rest, coef);
        }
        return coeffs;
    };
    auto assemble = [&](const Dense& d) {
        MultiPoly r(nv);
        for (std::size_t k = 0; k < d.size(); ++k) {
            for (const auto& [e, coef] : d[k].terms()) {
                Exponent full = e;
                full[v] += static_cast<unsigned>(k);
                r.add_term(full, coef);
            }
        }
        return r;
    };

    MultiPoly g = one(nv);
    if (pa.depends_on(v) && pb.depends_on(v)) {
        // Subresultant PRS; the last nonzero remainder is an associate of the
        // gcd up to a factor free of v, removed by taking the primitive part.
        Dense A = dense(pa), B = dense(pb);
        if (A.size() < B.size()) std::swap(A, B);
        MultiPoly gg = one(nv), h = one(nv);
        while (true) {
            const long delta = static_cast<long>(A.size()) - static_cast<long>(B.size());
            Dense R = prem_dense(A, B);
            if (R.empty()) {
                g = split(assemble(B)).second;
                break;
            }
            if (R.size() == 1) break;
            A = std::move(B);
            MultiPoly div = gg * h.pow(static_cast<unsigned>(delta));
            for (auto& r : R) r = divide_exact(r, div);
            B = std::move(R);
            gg = A.back();
            if (delta == 1) {
                h = gg;
            } else if (delta > 1) {
                h = divide_exact(gg.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
            }
        }
    }
    return monic(content * g);
}

GcdReport gcd_report(const std::vector<UniView>& polys) {
    if (polys.size() < 2) throw Error("gcd_report needs at least two polynomials");
    const int var = polys.front().var();
    MultiPoly g = polys.front().base();
    for (std::size_t i = 1; i < polys.size(); ++i) {
        if (polys[i].var() != var) throw Error("gcd_report: views use different variables");
        g = poly_gcd(g, polys[i].base());
    }
    GcdReport rep;
    if (!g.depends_on(var)) return rep;
    MultiPoly w = monic(content_primitive(g, var).second);
    rep.degree = w.degree(var);
    for (const auto& p : polys)
        if (!prem(p.base(), w, var).is_zero()) throw Error("gcd witness does not divide an input");
    unsigned small = rep.degree;
    bool found = false;
    for (const auto& [e, c] : w.terms()) {
        bool pure = e[0] == 0;
        for (std::size_t i = 1; i < e.size() && pure; ++i)
            if (static_cast<int>(i) != var && e[i] != 0) pure = false;
        if (pure && (!found || e[var] < small)) {
            small = e[var];
            found = true;
        }
    }
    rep.small_degree = small;
    rep.gcd_witness = std::move(w);
    return rep;
}

namespace {

MultiPoly edge_resultant(const PolySystem& system, int a, int b, int var) {
    MultiPoly r = resultant(UniView(system[a - 1], var), UniView(system[b - 1], var));
    if (r.is_zero()) throw DegenerateEdgeError(system.level(), a, b);
    return normalize_lambda(r).first.remove_var(var);
}

}  // namespace

PolySystem tree_resultant_system(const PolySystem& system, const Tree& tree, int var) {
    if (static_cast<int>(system.size()) != tree.n()) throw Error("tree size does not match equation count");
    std::vector<MultiPoly> out;
    for (auto [a, b] : tree.edges()) out.push_back(edge_resultant(system, a, b, var));
    return PolySystem(std::move(out), system.level() - 1);
}

PolySystem classical_resultant_system(const PolySystem& system, int var) {
    const int n = static_cast<int>(system.size());
    if (n < 2) throw Error("classical reduction needs at least two equations");
    std::vector<MultiPoly> out;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) out.push_back(edge_resultant(system, a, b, var));
    return PolySystem(std::move(out), system.level() - 1);
}

}  // namespace smallsol
