#include "smallsol/puiseux.hpp"

#include "smallsol/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace smallsol {

namespace {

// Series in mu = lambda^(1/grid): integer exponents, exact up to `bound`.
struct Series {
    std::map<long, Coefficient> terms;
    Order bound = Order::infinity();

    bool known() const { return !terms.empty(); }
    bool exactly_zero() const { return terms.empty() && bound.is_infinite(); }
    long val() const { return terms.begin()->first; }
};

// State of one step of the Newton-Puiseux recursion: x = prefix + lambda^base * y
// where y is a small root of sum_k a[k] y^k.
struct Frame {
    long grid = 1;
    std::vector<Series> a;
    std::vector<std::pair<mpq_class, Coefficient>> prefix;
    mpq_class base = 0;
};

PuiseuxJet prefix_jet(const Frame& f, Order trunc) {
    long den = 1;
    for (const auto& [e, c] : f.prefix) den = std::lcm(den, e.get_den().get_si());
    std::vector<JetTerm> terms;
    for (const auto& [e, c] : f.prefix) {
        mpq_class n = e * den;
        terms.push_back({n.get_num().get_si(), c});
    }
    return PuiseuxJet(den, std::move(terms), std::move(trunc));
}

// Lower convex hull of points sorted by k.
std::vector<std::pair<long, long>> lower_hull(const std::vector<std::pair<long, long>>& pts) {
    std::vector<std::pair<long, long>> h;
    for (const auto& p : pts) {
        while (h.size() >= 2) {
            const auto& o = h[h.size() - 2];
            const auto& a = h.back();
            long cross = (a.first - o.first) * (p.second - o.second) - (a.second - o.second) * (p.first - o.first);
            if (cross > 0) break;
            h.pop_back();
        }
        h.push_back(p);
    }
    return h;
}

Coefficient binomial(long n, long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Coefficient(mpq_class(b));
}

bool below(const Order& bound, const mpq_class& level) { return !bound.is_infinite() && bound.value() < level; }

class Engine {
public:
    Engine(Order target, unsigned bits) : target_(std::move(target)), bits_(bits) {}

    void run(Frame f) {
        // Exactly vanishing low coefficients: y = 0 is an exact root.
        std::size_t zeros = 0;
        while (zeros < f.a.size() && f.a[zeros].exactly_zero()) ++zeros;
        if (zeros == f.a.size()) throw Error("polynomial vanishes identically");
        if (zeros > 0) {
            emit(f, Order::infinity(), static_cast<unsigned>(zeros), kind_for(zeros));
            f.a.erase(f.a.begin(), f.a.begin() + static_cast<long>(zeros));
        }
        const std::size_t d = f.a.size() - 1;
        if (d == 0) return;

        std::optional<long> vmin;
        for (const auto& s : f.a)
            if (s.known() && (!vmin || s.val() < *vmin)) vmin = s.val();
        if (!vmin) {
            emit(f, Order(f.base), static_cast<unsigned>(d), RootKind::starved);
            return;
        }
        std::size_t m = 0;
        while (!(f.a[m].known() && f.a[m].val() == *vmin)) ++m;
        for (const auto& s : f.a)
            if (!s.known() && below(s.bound, *vmin)) {
                emit(f, Order(f.base), static_cast<unsigned>(std::max<std::size_t>(m, 1)), RootKind::starved);
                return;
            }
        if (m == 0) return;
        if (Order(f.base) >= target_) {
            emit(f, Order(f.base), static_cast<unsigned>(m), kind_for(m));
            return;
        }

        // Roots whose valuation exceeds the target are all o(lambda^T).
        const mpq_class slope_cap = (target_.value() - f.base) * f.grid;
        std::optional<std::size_t> kmin;
        mpq_class best;
        for (std::size_t k = 0; k <= m; ++k) {
            if (!f.a[k].known()) continue;
            mpq_class w = f.a[k].val() + slope_cap * static_cast<long>(k);
            if (!kmin || w < best) {
                kmin = k;
                best = w;
            }
        }
        const std::size_t kstar = *kmin;
        for (std::size_t k = 0; k <= d; ++k) {
            const Series& s = f.a[k];
            if (!s.known() && !s.bound.is_infinite() && s.bound.value() + slope_cap * static_cast<long>(k) < best) {
                emit(f, Order(f.base), static_cast<unsigned>(m), RootKind::starved);
                return;
            }
        }
        if (kstar > 0) emit(f, target_, static_cast<unsigned>(kstar), kind_for(kstar));

        std::vector<std::pair<long, long>> pts;
        for (std::size_t k = kstar; k <= m; ++k)
            if (f.a[k].known()) pts.emplace_back(static_cast<long>(k), f.a[k].val());
        auto hull = lower_hull(pts);
        for (std::size_t h = 0; h + 1 < hull.size(); ++h) edge(f, hull[h], hull[h + 1]);
    }

    std::vector<SliceRoot> take() {
        std::stable_sort(out_.begin(), out_.end(), [](const SliceRoot& a, const SliceRoot& b) {
            int c = compare_jets(a.jet, b.jet);
            if (c != 0) return c < 0;
            return a.multiplicity < b.multiplicity;
        });
        return std::move(out_);
    }

private:
    static RootKind kind_for(std::size_t mult) { return mult == 1 ? RootKind::simple : RootKind::multiple; }

    void emit(const Frame& f, Order trunc, unsigned mult, RootKind kind) {
        out_.push_back({prefix_jet(f, std::move(trunc)), mult, kind});
    }

    void edge(const Frame& f, std::pair<long, long> left, std::pair<long, long> right) {
        const auto [i, vi] = left;
        const auto [j, vj] = right;
        mpq_class s(vi - vj, j - i);
        s.canonicalize();
        const long p = s.get_num().get_si(), q = s.get_den().get_si();
        const long level = q * vi + p * i;  // line level in units of mu^(1/q)

        for (std::size_t k = 0; k < f.a.size(); ++k) {
            const Series& c = f.a[k];
            if (c.known() || c.bound.is_infinite()) continue;
            if (c.bound.value() * q + p * static_cast<long>(k) < level) {
                emit(f, Order(f.base), static_cast<unsigned>(j - i), RootKind::starved);
                return;
            }
        }

        CoeffPoly phi(static_cast<std::size_t>(j - i + 1));
        for (long k = i; k <= j; ++k) {
            const Series& c = f.a[k];
            if (c.known() && q * c.val() + p * k == level) phi[k - i] = c.terms.begin()->second;
        }
        for (const auto& root : polynomial_roots(phi, bits_)) {
            if (root.value.is_zero()) continue;
            run(substitute(f, p, q, level, root.value, root.multiplicity));
        }
    }

    // y = nu^p (c + y1) with nu = mu^(1/q), divided by nu^level.
    static Frame substitute(const Frame& f, long p, long q, long level, const Coefficient& c, unsigned mult) {
        Frame g;
        g.grid = f.grid * q;
        g.base = f.base + mpq_class(p, g.grid);
        g.base.canonicalize();
        g.prefix = f.prefix;
        g.prefix.emplace_back(g.base, c);
        const std::size_t d = f.a.size() - 1;
        std::vector<Coefficient> cpow(d + 1, Coefficient(1));
        for (std::size_t k = 1; k <= d; ++k) cpow[k] = cpow[k - 1] * c;
        for (std::size_t jj = 0; jj <= d; ++jj) {
            SeriesAccumulator acc;
            Order bound = Order::infinity();
            for (std::size_t k = jj; k <= d; ++k) {
                const Series& s = f.a[k];
                if (s.exactly_zero()) continue;
                Coefficient w = binomial(static_cast<long>(k), static_cast<long>(jj)) * cpow[k - jj];
                const long shift = p * static_cast<long>(k) - level;
                for (const auto& [e, coef] : s.terms) acc.add(e * q + shift, w * coef);
                if (!s.bound.is_infinite()) bound = min(bound, Order(mpq_class(s.bound.value() * q + shift)));
            }
            Series out;
            for (auto& [e, coef] : acc.finish()) {
                if (e <= 0 && jj < mult) continue;  // cancels because c is a root of multiplicity `mult`
                if (!bound.is_infinite() && mpq_class(e) > bound.value()) continue;
                out.terms.emplace(e, coef);
            }
            out.bound = bound;
            g.a.push_back(std::move(out));
        }
        return g;
    }

    Order target_;
    unsigned bits_;
    std::vector<SliceRoot> out_;
};

Frame initial_frame(const UniJetPoly& g) {
    Frame f;
    for (const auto& c : g.coeffs) f.grid = std::lcm(f.grid, c.ram());
    std::size_t len = g.coeffs.size();
    while (len > 0 && g.coeffs[len - 1].is_identically_zero()) --len;
    for (std::size_t k = 0; k < len; ++k) {
        const PuiseuxJet& c = g.coeffs[k];
        Series s;
        const long scale = f.grid / c.ram();
        for (const auto& t : c.terms()) s.terms.emplace(t.num * scale, t.coef);
        s.bound = c.trunc().is_infinite() ? Order::infinity() : Order(mpq_class(c.trunc().value() * f.grid));
        f.a.push_back(std::move(s));
    }
    return f;
}

PuiseuxJet derivative_along(const UniJetPoly& g, const PuiseuxJet& b) {
    UniJetPoly d;
    d.var = g.var;
    for (std::size_t k = 1; k < g.coeffs.size(); ++k) d.coeffs.push_back(Coefficient(static_cast<long>(k)) * g.coeffs[k]);
    return evaluate_at(d, b);
}

std::optional<SimplicityCertificate> certify(const PuiseuxJet& deriv, const PuiseuxJet& branch) {
    if (deriv.is_identically_zero()) return std::nullopt;
    if (deriv.is_zero()) {
        Order more = branch.trunc().is_infinite() ? deriv.trunc() + Order(1) : branch.trunc() + Order(1);
        throw TruncationError("extend jet and retry", more.str());
    }
    SimplicityCertificate cert;
    cert.alpha = deriv.terms().front().coef;
    cert.alpha_order = deriv.exponent(0);
    if (Order(cert.alpha_order) > branch.trunc())
        throw TruncationError("extend jet and retry", Order(cert.alpha_order).str());
    while (cert.r < branch.terms().size() && branch.exponent(cert.r) <= cert.alpha_order) ++cert.r;
    return cert;
}

using Residual = std::function<PuiseuxJet(const PuiseuxJet&, const Order&)>;

// Linear continuation: with b = root + h and val h > A, the residual
// f(b) = f_x(root) h + O(h^2) has valuation A + val h and leading coefficient
// alpha * lead(h), which fixes the next term.
PuiseuxJet extend_core(const Residual& residual, const PuiseuxJet& branch, const SimplicityCertificate& cert,
                       const Order& target, const Order& ceiling, bool saturate = false) {
    if (target.is_infinite()) throw InputError("extension target must be finite");
    if (target > ceiling) throw TruncationError("truncation ceiling", target.str());
    if (branch.is_exact()) return branch;
    if (branch.trunc() >= target) return branch.truncated(target);
    const Order A(cert.alpha_order);
    if (branch.trunc() < A) {
        if (saturate) return branch;
        throw TruncationError("extend jet and retry", A.str());
    }
    const Order cap = target + A;
    PuiseuxJet b = branch;
    while (b.trunc() < target) {
        PuiseuxJet R = residual(b.with_trunc(Order::infinity()), cap);
        const Order known = b.trunc() + A;
        std::optional<std::size_t> lead;
        for (std::size_t i = 0; i < R.terms().size(); ++i) {
            if (Order(R.exponent(i)) > known) {
                lead = i;
                break;
            }
            if (R.terms()[i].coef.is_exact())
                throw Error("verification failed: jet does not solve the equation to its truncation order");
        }
        if (!lead) {
            Order reach = R.trunc() - cert.alpha_order;
            if (reach < target) {
                if (saturate) return reach > b.trunc() ? b.with_trunc(reach) : b;
                throw TruncationError("truncation ceiling", (target + A).str());
            }
            return b.with_trunc(target);
        }
        mpq_class e = R.exponent(*lead) - cert.alpha_order;
        if (Order(e) > target) return b.with_trunc(target);
        b = b.with_term(e, -R.terms()[*lead].coef / cert.alpha, Order(e));
    }
    return b.truncated(target);
}

}  // namespace

UniJetPoly to_uni_jet_poly(const MultiPoly& f) {
    if (f.nvars() != 1) throw InputError("expected a polynomial in lambda and one unknown");
    UniJetPoly g;
    g.var = 1;
    g.coeffs.assign(f.degree(1) + 1, PuiseuxJet::zero());
    std::vector<std::map<long, Coefficient>> parts(g.coeffs.size());
    for (const auto& [e, c] : f.terms()) parts[e[1]].emplace(static_cast<long>(e[0]), c);
    for (std::size_t k = 0; k < parts.size(); ++k) {
        std::vector<JetTerm> t;
        for (auto& [n, c] : parts[k]) t.push_back({n, c});
        g.coeffs[k] = PuiseuxJet(1, std::move(t), Order::infinity());
    }
    return g;
}

PuiseuxJet evaluate_at(const UniJetPoly& g, const PuiseuxJet& b, const Order& cap) {
    PuiseuxJet sum = PuiseuxJet::zero();
    PuiseuxJet power = PuiseuxJet::constant(Coefficient(1));
    for (std::size_t k = 0; k < g.coeffs.size(); ++k) {
        if (k > 0) power = (power * b).truncated(cap);
        if (g.coeffs[k].is_identically_zero()) continue;
        sum = sum + (g.coeffs[k] * power).truncated(cap);
    }
    return sum.truncated(cap);
}

std::vector<PolygonEdge> newton_polygon(const MultiPoly& f) {
    if (f.nvars() != 1) throw InputError("expected a polynomial in lambda and one unknown");
    if (f.at_zero(0).is_zero()) throw Error("not regular in x");
    UniView view(f, 1);
    std::vector<std::pair<long, long>> pts;
    for (std::size_t k = 0; k < view.coeffs().size(); ++k) {
        const MultiPoly& c = view.coeffs()[k];
        if (c.is_zero()) continue;
        long v = c.valuation(0);
        pts.emplace_back(static_cast<long>(k), v);
        if (v == 0) break;
    }
    std::vector<PolygonEdge> edges;
    auto hull = lower_hull(pts);
    for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
        const auto [i, vi] = hull[h];
        const auto [j, vj] = hull[h + 1];
        PolygonEdge e;
        e.slope = mpq_class(vi - vj, j - i);
        e.slope.canonicalize();
        e.char_poly.assign(static_cast<std::size_t>(j - i + 1), Coefficient(0));
        for (const auto& [k, v] : pts) {
            if (k < i || k > j || mpq_class(v - vi) != -e.slope * (k - i)) continue;
            Exponent ex{static_cast<unsigned>(v), static_cast<unsigned>(k)};
            e.support.emplace_back(ex[0], ex[1]);
            e.char_poly[k - i] = f.coeff(ex);
        }
        edges.push_back(std::move(e));
    }
    return edges;
}

std::vector<SliceRoot> slice_roots(const UniJetPoly& g, const Order& T, unsigned bits) {
    if (T.is_infinite()) throw InputError("target order must be finite");
    Engine engine(T, bits);
    engine.run(initial_frame(g));
    return engine.take();
}

std::vector<SliceRoot> puiseux_branches(const MultiPoly& f, const Order& T) {
    if (f.nvars() != 1) throw InputError("expected a polynomial in lambda and one unknown");
    if (f.at_zero(0).is_zero()) throw Error("not regular in x");
    return slice_roots(to_uni_jet_poly(f), T, working_bits());
}

std::optional<SimplicityCertificate> simplicity_certificate(const MultiPoly& f, const PuiseuxJet& branch) {
    if (f.nvars() != 1) throw InputError("expected a polynomial in lambda and one unknown");
    return certify(jet_compose(f.derivative(1), {{1, branch}}), branch);
}

std::optional<SimplicityCertificate> simplicity_certificate(const UniJetPoly& g, const PuiseuxJet& branch) {
    return certify(derivative_along(g, branch), branch);
}

PuiseuxJet extend_jet(const MultiPoly& f, const PuiseuxJet& branch, const SimplicityCertificate& cert,
                      const Order& target, const Order& ceiling) {
    if (f.nvars() != 1) throw InputError("expected a polynomial in lambda and one unknown");
    Residual res = [&](const PuiseuxJet& b, const Order& cap) {
        ComposeOptions opts;
        opts.cap = cap;
        return jet_compose(f, {{1, b}}, opts);
    };
    return extend_core(res, branch, cert, target, ceiling);
}

PuiseuxJet extend_jet(const UniJetPoly& g, const PuiseuxJet& branch, const SimplicityCertificate& cert,
                      const Order& target, const Order& ceiling) {
    Residual res = [&](const PuiseuxJet& b, const Order& cap) { return evaluate_at(g, b, cap); };
    return extend_core(res, branch, cert, target, ceiling);
}

PuiseuxJet extend_jet_within(const UniJetPoly& g, const PuiseuxJet& branch, const SimplicityCertificate& cert,
                             const Order& target) {
    Residual res = [&](const PuiseuxJet& b, const Order& cap) { return evaluate_at(g, b, cap); };
    return extend_core(res, branch, cert, target, Order::infinity(), true);
}

}  // namespace smallsol
