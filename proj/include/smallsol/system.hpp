#pragma once

#include "smallsol/jet.hpp"
#include "smallsol/multipoly.hpp"

#include <vector>

namespace smallsol {

/// Equations f_1..f_m in lambda and `level` unknowns.
class PolySystem {
public:
    PolySystem() = default;
    /// Throws InputError on a zero equation or mismatched variable counts.
    PolySystem(std::vector<MultiPoly> equations, int level);

    int level() const { return level_; }
    std::size_t size() const { return equations_.size(); }
    const std::vector<MultiPoly>& equations() const { return equations_; }
    const MultiPoly& operator[](std::size_t i) const { return equations_.at(i); }

    bool is_exact() const;
    /// True when every equation vanishes at lambda = 0, x = 0.
    bool vanishes_at_origin() const;
    /// Each equation divided by its largest lambda power.
    PolySystem normalized() const;
    PolySystem conj() const;

private:
    std::vector<MultiPoly> equations_;
    int level_ = 0;
};

/// Invertible integer substitution of the unknowns: x_old = M * x_new.
class LinearMap {
public:
    LinearMap() = default;
    explicit LinearMap(std::vector<std::vector<long>> m);
    static LinearMap identity(int n);

    int size() const { return static_cast<int>(m_.size()); }
    const std::vector<std::vector<long>>& matrix() const { return m_; }
    bool is_identity() const;

    /// f(lambda, x_old) rewritten in the new unknowns.
    MultiPoly apply(const MultiPoly& f) const;
    PolySystem apply(const PolySystem& s) const;
    /// Maps a point or branch given in new coordinates to old ones.
    std::vector<PuiseuxJet> to_old(const std::vector<PuiseuxJet>& x_new) const;
    std::vector<Complex> to_old(const std::vector<Complex>& x_new) const;
    /// Maps old coordinates to new ones (exact integer inverse).
    std::vector<Complex> to_new(const std::vector<Complex>& x_old) const;
    LinearMap inverse() const;

    friend LinearMap operator*(const LinearMap& a, const LinearMap& b);

private:
    std::vector<std::vector<long>> m_;
};

struct Regularized {
    PolySystem system;
    LinearMap map;
};

/// Finds x_j <- x_j + c_j * x_var (j != var) such that every equation
/// restricted to lambda = 0 and x_j = 0 (j != var) is a nonzero polynomial in
/// x_var. Candidates are tried in a fixed order: the identity first, then
/// integer vectors by growing max |c_j| with entries ordered 0, 1, -1, 2, -2, ...
Regularized regularize(const PolySystem& system, int var);

/// f(0, 0..0, x_var, 0..0) is not identically zero.
bool is_regular_in(const MultiPoly& f, int var);

}  // namespace smallsol
