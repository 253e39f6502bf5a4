#pragma once

#include "smallsol/puiseux.hpp"
#include "smallsol/resultant.hpp"
#include "smallsol/system.hpp"
#include "smallsol/tree.hpp"

#include <optional>
#include <string>
#include <vector>

namespace smallsol {

/// One level of an elimination chain. `system` is the level-k system after
/// regularization in x_k; its coordinates relate to those of the level above
/// by x_above = map * x_here.
struct ChainLevel {
    int level = 0;
    PolySystem system;
    LinearMap map;
    /// Tree used to eliminate x_k from `system` (absent at level 1).
    std::optional<Tree> tree;
};

struct BuiltChain {
    TreeChain trees;
    /// levels[k] for k = 1..n; levels[0] is unused.
    std::vector<ChainLevel> levels;
    /// Set when some level has an equation that does not vanish at the
    /// origin: then no small solutions exist. Holds the level, 0 otherwise.
    int no_small_solutions_at = 0;
    int n() const { return static_cast<int>(levels.size()) - 1; }
};

/// Regularizes and eliminates level by level down to one scalar equation.
/// Throws DegenerateEdgeError when an edge resultant vanishes.
BuiltChain build_chain(const PolySystem& system, const TreeChain& delta);

enum class Regularity { regular, ambiguous, empty, degenerate_edge };
std::string to_string(Regularity r);

struct JetSet {
    std::size_t equation = 0;  ///< 1-based index into the level system
    std::vector<PuiseuxJet> jets;
    Order t;
};

struct RegularityReport {
    int level = 0;
    Regularity status = Regularity::empty;
    /// "scalar" at level 1, otherwise "mu-shortcut" or "matching".
    std::string method;
    Order t;
    std::optional<PuiseuxJet> matched_jet;
    /// Ambiguous: the common jets. Empty otherwise.
    std::vector<PuiseuxJet> witnesses;
    /// Empty: the per-equation jet sets that failed to intersect.
    std::vector<JetSet> jet_sets;
};

struct LevelCertificate {
    int level = 0;
    std::size_t equation = 0;
    /// The component x_k in level-k coordinates.
    PuiseuxJet component;
    SimplicityCertificate cert;
};

struct LiftOutcome {
    RegularityReport report;
    /// Present iff regular: x_k extended as far as the slices allow.
    std::optional<LevelCertificate> lifted;
};

/// Lifts a branch of the level k-1 system (in its own coordinates) to the
/// level-k unknown by matching the simple roots of all slice equations at
/// order t <= T. The lifted component is extended up to `working` or as far
/// as the partial branch allows. Throws TruncationError("extend partial
/// branch") when the partial branch is too short to resolve the slices to
/// order T.
LiftOutcome lift_branch(const BuiltChain& chain, int k, const std::vector<PuiseuxJet>& partial, const Order& T,
                        const Order& working = Order::infinity());

/// Sufficient condition for regularity: every slice indexed by a multiple
/// vertex of the level tree has exactly one small root, and it is simple. The
/// candidate is confirmed against all slices. nullopt when inapplicable.
std::optional<LiftOutcome> check_mu_shortcut(const BuiltChain& chain, int k, const std::vector<PuiseuxJet>& partial,
                                             const Order& T, const Order& working = Order::infinity());

enum class RealClass { real_both, real_positive, real_negative, complex, undetermined };
std::string to_string(RealClass c);

struct ResidualValuation {
    /// Leading exponent of the residual, or the order it is known to vanish to.
    Order value;
    /// The true valuation strictly exceeds `value` (no term known).
    bool lower_bound = false;
    std::string str() const;
};

struct SolutionBranch {
    /// Components in the caller's unknowns, each known to the target order.
    std::vector<PuiseuxJet> components;
    /// Common ramification index of the components.
    long ram = 1;
    std::vector<RegularityReport> reports;  ///< levels 1..n
    std::vector<LevelCertificate> certificates;  ///< levels 1..n
    std::vector<ResidualValuation> residual_valuations;
    RealClass real_class = RealClass::undetermined;
    std::vector<std::string> provenance;  ///< chains that produced the branch
};

/// Residual of every equation of `system` along `components`; throws
/// Error("verification failed") unless each valuation exceeds T.
std::vector<ResidualValuation> verify_residuals(const PolySystem& system, const std::vector<PuiseuxJet>& components,
                                                const Order& T);

/// Realness on each half-axis from the first r_k terms of every level
/// component. Throws TruncationError("extend first") when a component is
/// shorter than its certificate requires.
RealClass classify_realness(const std::vector<LevelCertificate>& certificates);

enum class ChainStrategy { first, all, explicit_chains };

struct SolveOptions {
    Order order = Order(6);
    ChainStrategy strategy = ChainStrategy::first;
    std::vector<TreeChain> chains;  ///< used with explicit_chains
    /// Number of working-order escalations before giving up on a branch.
    int escalations = 4;
};

struct AmbiguityWitness {
    std::string chain;
    int level = 0;
    std::vector<PuiseuxJet> partial;
    std::vector<PuiseuxJet> common;
};

struct SolveReport {
    std::vector<SolutionBranch> branches;
    std::vector<AmbiguityWitness> ambiguities;
    std::vector<std::string> notes;
    /// Pipeline failures tagged with chain and level.
    std::vector<std::string> errors;
    /// Some chain proved that there are no small solutions.
    bool no_small_solutions = false;
    bool degenerate_edge = false;
};

/// Effectively computable small solutions, each certified regular at every
/// level and verified against the original equations to order T.
SolveReport solve_effective(const PolySystem& system, const SolveOptions& options = {});

enum class FamilyVerdict { finite, no_small_solutions, family, undetermined };
std::string to_string(FamilyVerdict v);

struct LevelGcd {
    int level = 0;
    GcdReport gcd;
};

struct FamilyReport {
    FamilyVerdict verdict = FamilyVerdict::undetermined;
    int family_level = 0;  ///< level of the common factor when verdict == family
    std::vector<LevelGcd> levels;  ///< from level n down to 1
    std::string detail;
};

/// Runs the pairwise-resultant reduction and reports common factors level by
/// level. A common factor through the origin at level >= 2 is a family.
FamilyReport detect_families(const PolySystem& system);

struct NumericCheck {
    Complex lambda;
    std::vector<Complex> jet_value;
    std::vector<Complex> root;
    Real distance{0};
    bool converged = false;
};

/// Newton iteration on the original system seeded at the jet value.
NumericCheck verify_numeric(const PolySystem& system, const SolutionBranch& branch, const Complex& lambda);

}  // namespace smallsol
