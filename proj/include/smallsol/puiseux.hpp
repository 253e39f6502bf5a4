#pragma once

#include "smallsol/compose.hpp"
#include "smallsol/roots.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace smallsol {

/// One edge of the Newton polygon of f(lambda, x): branches along it start
/// with c * lambda^slope where c is a nonzero root of `char_poly`.
struct PolygonEdge {
    mpq_class slope;
    /// Exponent pairs (k_lambda, k_x) of the monomials lying on the edge.
    std::vector<std::pair<unsigned, unsigned>> support;
    /// Coefficient of c^j is the coefficient of the support point with
    /// k_x = (left end) + j.
    CoeffPoly char_poly;
};

/// Lower hull edges of positive slope, from the leftmost support point to the
/// pure-x monomial of lowest degree. Requires f in lambda and one unknown with
/// f(0, x) not identically zero.
std::vector<PolygonEdge> newton_polygon(const MultiPoly& f);

enum class RootKind {
    simple,    ///< a single root, its jet is certified to the reported order
    multiple,  ///< several roots sharing the jet up to the reported order
    starved,   ///< the coefficients are too short to separate these roots
};

struct SliceRoot {
    PuiseuxJet jet;
    unsigned multiplicity = 1;
    RootKind kind = RootKind::simple;
};

/// All small roots (x -> 0 as lambda -> 0) of a polynomial with jet
/// coefficients, each jet known at least to order T unless starved. Numeric
/// roots of edge polynomials are computed at `bits` precision.
std::vector<SliceRoot> slice_roots(const UniJetPoly& g, const Order& T, unsigned bits = working_bits());

/// Small-solution branches of a scalar equation f(lambda, x) = 0, with
/// multiplicities summing to the degree of the lowest pure-x monomial.
std::vector<SliceRoot> puiseux_branches(const MultiPoly& f, const Order& T);

struct SimplicityCertificate {
    /// Index of the first jet term whose coefficient is fixed by the linear
    /// step alpha * gamma_j = beta_j.
    std::size_t r = 0;
    Coefficient alpha;
    mpq_class alpha_order;
};

/// Certificate that `branch` is a simple root: df/dx along the branch has a
/// known nonzero leading term alpha * lambda^A with A not beyond the jet's
/// truncation order. Returns nullopt when df/dx vanishes identically along
/// the branch. Throws TruncationError when the jet is too short to decide.
std::optional<SimplicityCertificate> simplicity_certificate(const MultiPoly& f, const PuiseuxJet& branch);
std::optional<SimplicityCertificate> simplicity_certificate(const UniJetPoly& g, const PuiseuxJet& branch);

/// Continues a certified simple branch to order `target` by the linear
/// recursion. Exact branches are returned unchanged. `ceiling` is the order
/// up to which f itself is known; asking for more throws TruncationError.
PuiseuxJet extend_jet(const MultiPoly& f, const PuiseuxJet& branch, const SimplicityCertificate& cert,
                      const Order& target, const Order& ceiling = Order::infinity());
PuiseuxJet extend_jet(const UniJetPoly& g, const PuiseuxJet& branch, const SimplicityCertificate& cert,
                      const Order& target, const Order& ceiling = Order::infinity());

/// As extend_jet, but stops where the coefficients of g run out instead of
/// throwing: the result is known to min(target, reachable order).
PuiseuxJet extend_jet_within(const UniJetPoly& g, const PuiseuxJet& branch, const SimplicityCertificate& cert,
                             const Order& target);

/// g(lambda, b(lambda)) with terms beyond `cap` dropped.
PuiseuxJet evaluate_at(const UniJetPoly& g, const PuiseuxJet& b, const Order& cap = Order::infinity());

/// f(lambda, x) as a polynomial in x with exact jet coefficients.
UniJetPoly to_uni_jet_poly(const MultiPoly& f);

}  // namespace smallsol
