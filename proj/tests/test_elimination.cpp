#include "doctest.h"
#include "oracles.hpp"
#include "random_poly.hpp"
#include "support.hpp"

#include "smallsol/error.hpp"
#include "smallsol/resultant.hpp"

#include <random>

using namespace smallsol;
using namespace testsupport;


TEST_CASE("resultant examples") {
    CHECK(resultant(UniView(P("x - l"), 1), UniView(P("x - l^2"), 1)) == P("l - l^2"));
    CHECK(resultant(UniView(P("x^2 - l"), 1), UniView(P("x^2 - l"), 1)).is_zero());
    CHECK(resultant(UniView(P("x^2 - l"), 1), UniView(P("x - 1"), 1)) == P("1 - l"));
    CHECK_THROWS_WITH(resultant(UniView(P("x*l + l"), 1), UniView(P("l + 1 + x*0"), 1)),
                      "constant in eliminated variable");
}

TEST_CASE("resultant sign convention follows the Sylvester layout") {
    // Res(p, q) = (-1)^(deg p deg q) Res(q, p)
    MultiPoly p = P("x^3 - l*x + 2"), q = P("x^2 + l");
    MultiPoly a = resultant(UniView(p, 1), UniView(q, 1));
    MultiPoly b = resultant(UniView(q, 1), UniView(p, 1));
    CHECK(a == b);
    MultiPoly r = P("x - 3");
    CHECK(resultant(UniView(q, 1), UniView(r, 1)) == resultant(UniView(r, 1), UniView(q, 1)));
    CHECK(resultant(UniView(p, 1), UniView(r, 1)) == -resultant(UniView(r, 1), UniView(p, 1)));
    CHECK(sylvester_resultant(UniView(p, 1), UniView(r, 1)) == resultant(UniView(p, 1), UniView(r, 1)));
    // Product formula by hand: lc(p)^1 * r(roots of p) = prod (rho - 3) = -p(3) for monic cubic p.
    CHECK(resultant(UniView(p, 1), UniView(r, 1)) == -P("27 - 3*l + 2"));
}

TEST_CASE("subresultant PRS equals the Sylvester determinant on 100 small instances") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<unsigned> d(1, 4);
    for (int it = 0; it < 100; ++it) {
        int nv = 1 + it % 2;
        MultiPoly p = random_uni(rng, nv, nv, d(rng)), q = random_uni(rng, nv, nv, d(rng));
        CHECK(resultant(UniView(p, nv), UniView(q, nv)) == sylvester_resultant(UniView(p, nv), UniView(q, nv)));
    }
}

TEST_CASE("resultant agrees with the root-product formula on 500 random pairs") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<unsigned> d(1, 4);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    int agreed = 0;
    for (int it = 0; it < 500; ++it) {
        int nv = 1 + it % 2;
        MultiPoly p = random_uni(rng, nv, nv, d(rng)), q = random_uni(rng, nv, nv, d(rng));
        MultiPoly r = resultant(UniView(p, nv), UniView(q, nv));
        std::vector<cd> pt;
        for (int i = 0; i <= nv; ++i) pt.emplace_back(u(rng), u(rng));
        cd lhs = evaluate_cd(r, pt), rhs = root_product_resultant(p, q, nv, pt);
        double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
        if (std::abs(lhs - rhs) <= 1e-9 * scale) ++agreed;
        else
            MESSAGE("mismatch: p=" << p.str() << " q=" << q.str() << " lhs=" << lhs << " rhs=" << rhs);
    }
    CHECK(agreed == 500);
}

TEST_CASE("resultant is multiplicative in its first argument") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<unsigned> d(1, 3);
    for (int it = 0; it < 60; ++it) {
        MultiPoly p = random_uni(rng, 1, 1, d(rng)), q = random_uni(rng, 1, 1, d(rng)), r = random_uni(rng, 1, 1, d(rng));
        MultiPoly lhs = resultant(UniView(p * q, 1), UniView(r, 1));
        MultiPoly rhs = resultant(UniView(p, 1), UniView(r, 1)) * resultant(UniView(q, 1), UniView(r, 1));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("exact division") {
    MultiPoly a = P("(x1 - l*x2)*(x2^2 + 3*l)", 2), b = P("x2^2 + 3*l", 2);
    CHECK(divide_exact(a, b) == P("x1 - l*x2", 2));
    CHECK_FALSE(try_divide(P("x1 + 1", 2), P("x2", 2)).has_value());
}

TEST_CASE("gcd_report examples") {
    GcdReport a = gcd_report({UniView(P("x^2 - l^2"), 1), UniView(P("x - l"), 1)});
    CHECK(a.degree == 1);
    REQUIRE(a.gcd_witness);
    CHECK(*a.gcd_witness == P("x - l"));
    CHECK(a.small_degree == 1);

    GcdReport b = gcd_report({UniView(P("x^2 - l"), 1), UniView(P("x + l"), 1)});
    CHECK(b.degree == 0);
    CHECK_FALSE(b.gcd_witness);

    MultiPoly f = P("3*x^3 - l*x + 2*l^2");
    GcdReport c = gcd_report({UniView(f, 1), UniView(f, 1)});
    CHECK(c.degree == 3);
    REQUIRE(c.gcd_witness);
    CHECK(prem(f, *c.gcd_witness, 1).is_zero());

    // A common factor not passing through the origin contributes no small roots.
    GcdReport d = gcd_report({UniView(P("(x - 1)*(x - l)"), 1), UniView(P("(x - 1)*(x + l)"), 1)});
    CHECK(d.degree == 1);
    CHECK(d.small_degree == 0);
}

TEST_CASE("gcd witness divides random inputs with a planted factor") {
    std::mt19937 rng(8);
    std::uniform_int_distribution<unsigned> d(1, 2);
    for (int it = 0; it < 40; ++it) {
        MultiPoly g = random_uni(rng, 2, 2, d(rng));
        MultiPoly a = g * random_uni(rng, 2, 2, d(rng)), b = g * random_uni(rng, 2, 2, d(rng));
        GcdReport r = gcd_report({UniView(a, 2), UniView(b, 2)});
        CHECK(r.degree >= content_primitive(g, 2).second.degree(2));
        REQUIRE(r.gcd_witness);
        CHECK(prem(a, *r.gcd_witness, 2).is_zero());
        CHECK(prem(b, *r.gcd_witness, 2).is_zero());
        CHECK(try_divide(content_primitive(a, 2).second, *r.gcd_witness).has_value());
    }
}

TEST_CASE("tree resultant systems") {
    SUBCASE("single edge") {
        PolySystem s({P("x2^2 - l", 2), P("x2 - x1", 2)}, 2);
        PolySystem r = tree_resultant_system(s, enumerate_trees(2).front(), 2);
        REQUIRE(r.size() == 1);
        CHECK(r.level() == 1);
        CHECK(r[0] == P("x1^2 - l", 1));
        CHECK(classical_resultant_system(s, 2)[0] == r[0]);
    }
    SUBCASE("shared factor on an edge") {
        PolySystem s({P("x2*(x2 - l)", 2), P("x2*(x2 - x1)", 2)}, 2);
        CHECK_THROWS_AS(tree_resultant_system(s, enumerate_trees(2).front(), 2), DegenerateEdgeError);
        try {
            tree_resultant_system(s, enumerate_trees(2).front(), 2);
        } catch (const DegenerateEdgeError& e) {
            CHECK(std::string(e.what()).find("degenerate edge {1,2}") != std::string::npos);
        }
    }
    SUBCASE("different trees give different systems that both vanish on the solution") {
        // Solution x1 = l, x2 = 2l, x3 = -l.
        PolySystem s({P("x3 + x1 + x1*(x2 - 2*x1)", 3), P("x3^2 - x1^2 + x3*(x2 - 2*x1)", 3),
                      P("x3*x1 + l*l + x2 - 2*x1", 3)},
                     3);
        Tree path = Tree::from_edges(3, {{1, 2}, {2, 3}});
        Tree star1 = Tree::from_edges(3, {{1, 2}, {1, 3}});
        PolySystem a = tree_resultant_system(s, path, 3), b = tree_resultant_system(s, star1, 3);
        CHECK(a.size() == 2);
        CHECK(b.size() == 2);
        CHECK_FALSE(a[1] == b[1]);
        CHECK(classical_resultant_system(s, 3).size() == 3);
        for (double lam : {1e-2, 3e-3}) {
            std::vector<cd> pt{lam, lam, 2 * lam};
            for (const auto& sys : {a, b, classical_resultant_system(s, 3)})
                for (const auto& f : sys.equations())
                    CHECK(std::abs(evaluate_cd(f, pt)) < 1e-12);
        }
    }
}
