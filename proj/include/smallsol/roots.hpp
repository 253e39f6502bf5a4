#pragma once

#include "smallsol/coefficient.hpp"

#include <vector>

namespace smallsol {

/// Dense univariate polynomial, index = power.
using CoeffPoly = std::vector<Coefficient>;

struct PolyRoot {
    Coefficient value;  ///< exact when the root is a Gaussian rational
    unsigned multiplicity = 1;
};

/// Square-free decomposition over Q(i) (Yun): pairs (factor, multiplicity)
/// with the factors monic, pairwise coprime and square-free.
std::vector<std::pair<CoeffPoly, unsigned>> squarefree_decomposition(const CoeffPoly& p);

/// Roots of p at precision `bits` via Aberth iteration. No clustering.
std::vector<Complex> aberth_roots(const CoeffPoly& p, unsigned bits);

/// All roots with multiplicities, sorted by (real, imaginary) part.
/// Exact input: multiplicities are exact and rational roots are returned as
/// exact values. Numeric input: nearby roots are merged into a multiple root
/// only when the derivatives confirm it; otherwise PrecisionError reports
/// the separation so the caller can raise the precision.
std::vector<PolyRoot> polynomial_roots(const CoeffPoly& p, unsigned bits);

CoeffPoly poly_trim(CoeffPoly p);
Coefficient poly_eval(const CoeffPoly& p, const Coefficient& x);
CoeffPoly poly_derivative(const CoeffPoly& p);

}  // namespace smallsol
