#include "doctest.h"
#include "support.hpp"

#include "smallsol/compose.hpp"
#include "smallsol/error.hpp"
#include "smallsol/system.hpp"

#include <random>

using namespace smallsol;
using namespace testsupport;

namespace {

MultiPoly random_poly(std::mt19937& rng, int nvars, int terms, unsigned maxdeg, bool gaussian = false) {
    std::uniform_int_distribution<int> deg(0, static_cast<int>(maxdeg));
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    MultiPoly p(nvars);
    for (int t = 0; t < terms; ++t) {
        Exponent e(nvars + 1);
        for (auto& k : e) k = static_cast<unsigned>(deg(rng));
        mpq_class re(num(rng), den(rng)), im(gaussian ? num(rng) : 0, den(rng));
        p.add_term(e, Coefficient(GaussRational(re, im)));
    }
    return p;
}

}  // namespace

TEST_CASE("coefficient: exact values stay canonical") {
    Coefficient a(mpq_class(6, 4));
    CHECK(a.exact().re == mpq_class(3, 2));
    CHECK(a.exact().re.get_den() == 2);
    Coefficient b = a - Coefficient(mpq_class(3, 2));
    CHECK(b.is_zero());
    Coefficient i(GaussRational(0, 1));
    CHECK((i * i).exact() == GaussRational(-1));
    CHECK((Coefficient(1) / Coefficient(GaussRational(1, 1))).exact() == GaussRational(mpq_class(1, 2), mpq_class(-1, 2)));
}

TEST_CASE("coefficient: numeric precision tags must match") {
    PrecisionScope scope(128);
    Coefficient x = Coefficient::numeric(Complex(Real(1)), 128);
    Coefficient y = Coefficient::numeric(Complex(Real(2)), 256);
    CHECK_THROWS_AS(x + y, Error);
    MultiPoly p(1);
    p.add_term({0, 1}, x);
    CHECK_THROWS_AS(p.add_term({1, 0}, y), Error);
    CHECK((x + Coefficient(1)).bits() == 128);
}

TEST_CASE("coefficient: parse_rational accepts only rationals") {
    CHECK(parse_rational("-3/6") == mpq_class(-1, 2));
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS_AS(parse_rational("0.5"), InputError);
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("1e3"), InputError);
}

TEST_CASE("normalize_lambda examples") {
    auto [g1, k1] = normalize_lambda(P("l^2*x + l^3"));
    CHECK(g1 == P("x + l"));
    CHECK(k1 == 2);
    auto [g2, k2] = normalize_lambda(P("x^2 - l"));
    CHECK(g2 == P("x^2 - l"));
    CHECK(k2 == 0);
    auto [g3, k3] = normalize_lambda(P("l^3"));
    CHECK(g3 == P("1"));
    CHECK(k3 == 3);
    CHECK_THROWS_WITH_AS(normalize_lambda(MultiPoly(1)), "zero equation", InputError);
}

TEST_CASE("normalize_lambda is idempotent and keeps x-dependence at lambda = 0") {
    std::mt19937 rng(11);
    for (int it = 0; it < 200; ++it) {
        MultiPoly f = random_poly(rng, 2, 5, 3);
        if (f.is_zero()) continue;
        auto [g, k] = normalize_lambda(f);
        auto [g2, k2] = normalize_lambda(g);
        CHECK(g2 == g);
        CHECK(k2 == 0);
        CHECK(g.valuation(0) == 0);
        CHECK(f == MultiPoly::monomial(2, {k, 0, 0}, Coefficient(1)) * g);
    }
}

TEST_CASE("UniView reassembles 1000 random sparse polynomials exactly") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> nv(1, 4), nt(1, 8);
    int checked = 0;
    while (checked < 1000) {
        int n = nv(rng);
        MultiPoly f = random_poly(rng, n, nt(rng), 4, checked % 3 == 0);
        if (f.is_zero()) continue;
        int var = 1 + checked % n;
        UniView u(f, var);
        CHECK(u.reassemble() == f);
        CHECK_FALSE(u.leading().is_zero());
        for (const auto& c : u.coeffs()) CHECK_FALSE(c.depends_on(var));
        ++checked;
    }
}

TEST_CASE("MultiPoly basics") {
    MultiPoly f = P("(x1 + x2)^2 - l*x1", 2);
    CHECK(f.total_degree() == 2);
    CHECK(f.degree(1) == 2);
    CHECK(f.derivative(1) == P("2*x1 + 2*x2 - l", 2));
    CHECK(f.substitute(2, P("l", 2)) == P("x1^2 + 2*l*x1 + l^2 - l*x1", 2));
    CHECK(f.at_zero(2) == P("x1^2 - l*x1", 2));
    CHECK_THROWS(P("x2", 2).remove_var(2));
    CHECK(P("x1 + l", 2).remove_var(2) == P("x1 + l", 1));
    CHECK(P("x1", 1).embed(3) == P("x1", 3));
}

TEST_CASE("regularize examples") {
    SUBCASE("product of unknowns gets a shear") {
        auto [s, m] = regularize(PolySystem({P("x1*x2", 2)}, 2), 2);
        CHECK(s[0] == P("x2^2 + x1*x2", 2));
        CHECK(m.matrix() == std::vector<std::vector<long>>{{1, 1}, {0, 1}});
    }
    SUBCASE("already regular keeps the identity") {
        auto [s, m] = regularize(PolySystem({P("x2^2 - l", 2)}, 2), 2);
        CHECK(m.is_identity());
        CHECK(s[0] == P("x2^2 - l", 2));
    }
    SUBCASE("equation free of the distinguished unknown") {
        auto [s, m] = regularize(PolySystem({P("x1 - l", 2)}, 2), 2);
        CHECK(s[0] == P("x1 + x2 - l", 2));
        CHECK(is_regular_in(s[0], 2));
    }
    SUBCASE("cancellation forces a larger shear") {
        // x1 <- x1 + x3 kills the pure x3 part of the second equation.
        PolySystem sys({P("x1*x3", 3), P("x2*x3 - x1*x3 + x2^2", 3)}, 3);
        auto [s, m] = regularize(sys, 3);
        for (const auto& f : s.equations()) CHECK(is_regular_in(f, 3));
    }
}

TEST_CASE("regularize preserves the solution set numerically") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int it = 0; it < 50; ++it) {
        int n = 2 + it % 2;
        std::vector<MultiPoly> eqs;
        for (int j = 0; j < n; ++j) {
            MultiPoly f = random_poly(rng, n, 4, 2);
            // Drop pure-x_n monomials so regularization has work to do.
            MultiPoly g(n);
            for (const auto& [e, c] : f.terms()) {
                bool pure = e[0] == 0;
                for (int i = 1; i < n; ++i) pure = pure && e[i] == 0;
                if (!pure) g.add_term(e, c);
            }
            g += P("x1*x" + std::to_string(n), n);
            eqs.push_back(g);
        }
        PolySystem sys(eqs, n);
        auto [reg, map] = regularize(sys, n);
        for (int k = 0; k < 5; ++k) {
            std::vector<Complex> pt_old;
            for (int i = 0; i < n; ++i) pt_old.emplace_back(Real(u(rng)), Real(u(rng)));
            Complex lam(Real(u(rng)));
            std::vector<Complex> pt_new = map.to_new(pt_old);
            std::vector<Complex> full_old{lam}, full_new{lam};
            full_old.insert(full_old.end(), pt_old.begin(), pt_old.end());
            full_new.insert(full_new.end(), pt_new.begin(), pt_new.end());
            for (int j = 0; j < n; ++j) {
                Complex a = sys[j].evaluate(full_old), b = reg[j].evaluate(full_new);
                CHECK((a - b).abs() <= tolerance(kDefaultBits) * max(Real(1), a.abs()));
            }
        }
    }
}

TEST_CASE("jet normalization and lifting") {
    PuiseuxJet j = J(4, {{2, Q(1)}, {6, Q(3)}}, O(2));
    CHECK(j.ram() == 2);
    CHECK(j.terms()[0].num == 1);
    PuiseuxJet lifted = j.lift(3);
    CHECK(lifted.ram() == 6);
    CHECK(lifted.terms()[1].num == 9);
    PuiseuxJet back = lifted.normalized();
    CHECK(back.ram() == j.ram());
    CHECK(jets_agree(back, j, O(2)));
    CHECK(back.terms().size() == j.terms().size());
    CHECK(J(1, {}, O(3)).is_zero());
    CHECK_FALSE(J(1, {}, O(3)).is_identically_zero());
    // Terms past the truncation order are dropped.
    CHECK(J(1, {{1, Q(1)}, {5, Q(1)}}, O(3)).terms().size() == 1);
}

TEST_CASE("lifting and normalizing is the identity on random jets") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> ram(1, 6), gap(1, 4), k(2, 5), c(-9, 9);
    for (int it = 0; it < 300; ++it) {
        long r = ram(rng);
        std::vector<std::pair<long, Coefficient>> terms;
        long e = 0;
        for (int t = 0; t < 4; ++t) {
            e += gap(rng);
            long v = c(rng);
            if (v != 0) terms.emplace_back(e, Q(v));
        }
        PuiseuxJet j = J(r, terms, O(e + 1, r));
        PuiseuxJet back = j.lift(k(rng)).normalized();
        CHECK(back.ram() == j.ram());
        CHECK(back.trunc() == j.trunc());
        REQUIRE(back.terms().size() == j.terms().size());
        for (std::size_t i = 0; i < j.terms().size(); ++i) {
            CHECK(back.terms()[i].num == j.terms()[i].num);
            CHECK(back.terms()[i].coef == j.terms()[i].coef);
        }
    }
}

TEST_CASE("jet arithmetic propagates the weakest guarantee") {
    PuiseuxJet a = J(1, {{1, Q(1)}, {2, Q(1)}}, O(3));  // l + l^2 + o(l^3)
    PuiseuxJet b = J(2, {{1, Q(1)}}, O(2));             // l^(1/2) + o(l^2)
    PuiseuxJet s = a + b;
    CHECK(s.trunc() == O(2));
    CHECK(s.ram() == 2);
    PuiseuxJet p = a * b;
    // min(1 + 2, 1/2 + 3)
    CHECK(p.trunc() == O(3));
    CHECK(p.coefficient_at(mpq_class(3, 2)) == Q(1));
    CHECK(p.coefficient_at(mpq_class(5, 2)) == Q(1));
    PuiseuxJet z = a - a;
    CHECK(z.is_zero());
    CHECK(z.trunc() == O(3));
}

TEST_CASE("jet_compose examples") {
    SUBCASE("exact root gives a zero jet") {
        PuiseuxJet r = jet_compose(P("x^2 - l"), {{1, J(2, {{1, Q(1)}})}});
        CHECK(r.is_identically_zero());
        PuiseuxJet t = jet_compose(P("x^2 - l"), {{1, J(2, {{1, Q(1)}}, O(3))}});
        CHECK(t.is_zero());
        CHECK(t.trunc() == O(7, 2));
    }
    SUBCASE("direct expansion") {
        PuiseuxJet r = jet_compose(P("x^2 - l"), {{1, J(1, {{1, Q(1)}})}});
        CHECK(r.str() == "(-1)*lambda + (1)*lambda^2");
    }
    SUBCASE("univariate slice") {
        UniJetPoly u = jet_compose(P("x2 - x1^2", 2), {{1, J(1, {{1, Q(1)}, {2, Q(1)}})}}, 2);
        REQUIRE(u.coeffs.size() == 2);
        CHECK(u.coeffs[1].str() == "(1)");
        CHECK(u.coeffs[0].str() == "(-1)*lambda^2 + (-2)*lambda^3 + (-1)*lambda^4");
    }
    SUBCASE("truncation bound of a product") {
        // x1*x2 with x1 = l + o(l^2), x2 = l^2 + o(l^3): known to min(2 + 2, 1 + 3) = 4.
        PuiseuxJet r = jet_compose(P("x1*x2", 2), {{1, J(1, {{1, Q(1)}}, O(2))}, {2, J(1, {{2, Q(1)}}, O(3))}});
        CHECK(r.trunc() == O(4));
        CHECK(r.coefficient_at(3) == Q(1));
    }
    SUBCASE("underflow reports the required order") {
        ComposeOptions opts;
        opts.need = O(2);
        try {
            jet_compose(P("x"), {{1, J(1, {}, O(1))}}, opts);
            FAIL("expected a truncation error");
        } catch (const TruncationError& e) {
            CHECK(e.required() == "2");
        }
    }
}

TEST_CASE("jet_compose is linear in the polynomial") {
    std::mt19937 rng(99);
    for (int it = 0; it < 100; ++it) {
        MultiPoly f = random_poly(rng, 2, 4, 3), g = random_poly(rng, 2, 4, 3);
        JetAssignment a{{1, J(2, {{1, Q(1)}, {2, Q(-1, 2)}}, O(3))}, {2, J(1, {{1, Q(2)}}, O(4))}};
        PuiseuxJet lhs = jet_compose(f + g, a);
        PuiseuxJet rhs = jet_compose(f, a) + jet_compose(g, a);
        Order t = min(lhs.trunc(), rhs.trunc());
        CHECK(jets_agree(lhs.truncated(t), rhs.truncated(t), t));
        CHECK(lhs.truncated(t).terms().size() == rhs.truncated(t).terms().size());
    }
}
