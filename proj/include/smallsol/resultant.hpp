#pragma once

#include "smallsol/multipoly.hpp"
#include "smallsol/system.hpp"
#include "smallsol/tree.hpp"

#include <optional>
#include <vector>

namespace smallsol {

/// Pseudo-remainder of a by b in `var`: lc(b)^(deg a - deg b + 1) * a mod b.
MultiPoly prem(const MultiPoly& a, const MultiPoly& b, int var);

/// a / b when b divides a exactly in the polynomial ring, otherwise nullopt.
std::optional<MultiPoly> try_divide(const MultiPoly& a, const MultiPoly& b);
/// As try_divide but throws when the division is not exact.
MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b);

/// Res_var(p, q) = lc(p)^deg(q) * prod q(roots of p), i.e. the Sylvester
/// determinant with p's coefficients in the first deg(q) rows. Computed by
/// the subresultant PRS. Exact coefficients only.
MultiPoly resultant(const UniView& p, const UniView& q);
/// Same value by fraction-free elimination of the Sylvester matrix.
MultiPoly sylvester_resultant(const UniView& p, const UniView& q);

/// Greatest common divisor in Q(i)[lambda, x], normalized so the leading
/// term (lexicographic order) has coefficient 1.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);
/// Content with respect to `var` (gcd of the coefficients) and primitive part.
std::pair<MultiPoly, MultiPoly> content_primitive(const MultiPoly& a, int var);

struct GcdReport {
    /// Degree in the distinguished unknown of the gcd over the fraction field
    /// of the other variables.
    unsigned degree = 0;
    /// Primitive gcd, present iff degree > 0.
    std::optional<MultiPoly> gcd_witness;
    /// Order of vanishing of witness(0, .., 0, x) at x = 0: the number of
    /// small roots the common factor contributes.
    unsigned small_degree = 0;
};

GcdReport gcd_report(const std::vector<UniView>& polys);

/// One resultant per tree edge (in edge order), each lambda-normalized, with
/// `var` removed from the variable list. Throws DegenerateEdgeError when an
/// edge resultant vanishes identically.
PolySystem tree_resultant_system(const PolySystem& system, const Tree& tree, int var);

/// All pairwise resultants in the order (1,2), (1,3), ..., (n-1,n).
PolySystem classical_resultant_system(const PolySystem& system, int var);

}  // namespace smallsol
