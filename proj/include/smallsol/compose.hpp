#pragma once

#include "smallsol/jet.hpp"
#include "smallsol/multipoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace smallsol {

/// Polynomial in one unknown whose coefficients are Puiseux jets in lambda.
struct UniJetPoly {
    int var = 1;
    std::vector<PuiseuxJet> coeffs;  ///< coeffs[k] multiplies var^k

    std::string str(const std::string& name = "x") const;
};

/// Unknown index -> jet substituted for it.
using JetAssignment = std::map<int, PuiseuxJet>;

struct ComposeOptions {
    /// Terms of the result beyond this order are discarded (and the
    /// truncation order lowered accordingly).
    Order cap = Order::infinity();
    /// The result must be known at least to this order, otherwise a
    /// TruncationError carrying the needed order is thrown.
    Order need = Order(0);
};

/// f(lambda, jets...) as a jet. Every unknown of f must be assigned. The
/// truncation order of the result is the weakest guarantee implied by the
/// inputs' truncation orders.
PuiseuxJet jet_compose(const MultiPoly& f, const JetAssignment& assignment, const ComposeOptions& opts = {});

/// The univariate slice f(lambda, jets..., x_free) as a polynomial in the
/// free unknown with jet coefficients.
UniJetPoly jet_compose(const MultiPoly& f, const JetAssignment& assignment, int free_var,
                       const ComposeOptions& opts = {});

}  // namespace smallsol
