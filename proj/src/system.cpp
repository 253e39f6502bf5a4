#include "smallsol/system.hpp"

#include "smallsol/error.hpp"

#include <algorithm>

namespace smallsol {

PolySystem::PolySystem(std::vector<MultiPoly> equations, int level) : equations_(std::move(equations)), level_(level) {
    if (level < 0) throw InputError("negative unknown count");
    for (const auto& f : equations_) {
        if (f.nvars() != level) throw InputError("equation has wrong number of variables");
        if (f.is_zero()) throw InputError("zero equation");
    }
}

bool PolySystem::is_exact() const {
    return std::all_of(equations_.begin(), equations_.end(), [](const MultiPoly& f) { return f.is_exact(); });
}

bool PolySystem::vanishes_at_origin() const {
    return std::all_of(equations_.begin(), equations_.end(),
                       [](const MultiPoly& f) { return f.constant_term().is_zero(); });
}

PolySystem PolySystem::normalized() const {
    std::vector<MultiPoly> out;
    for (const auto& f : equations_) out.push_back(normalize_lambda(f).first);
    return PolySystem(std::move(out), level_);
}

PolySystem PolySystem::conj() const {
    std::vector<MultiPoly> out;
    for (const auto& f : equations_) out.push_back(f.conj());
    return PolySystem(std::move(out), level_);
}

LinearMap::LinearMap(std::vector<std::vector<long>> m) : m_(std::move(m)) {
    for (const auto& row : m_)
        if (row.size() != m_.size()) throw Error("linear map must be square");
}

LinearMap LinearMap::identity(int n) {
    std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return LinearMap(std::move(m));
}

bool LinearMap::is_identity() const {
    for (std::size_t i = 0; i < m_.size(); ++i)
        for (std::size_t j = 0; j < m_.size(); ++j)
            if (m_[i][j] != (i == j ? 1 : 0)) return false;
    return true;
}

MultiPoly LinearMap::apply(const MultiPoly& f) const {
    if (f.nvars() != size()) throw Error("linear map dimension mismatch");
    if (is_identity()) return f;
    const int n = size();
    std::vector<MultiPoly> images;
    for (int i = 0; i < n; ++i) {
        MultiPoly row(n);
        for (int j = 0; j < n; ++j)
            if (m_[i][j] != 0) row += Coefficient(m_[i][j]) * MultiPoly::variable(n, j + 1);
        images.push_back(std::move(row));
    }
    // Substitute all unknowns simultaneously: expand term by term.
    std::vector<std::vector<MultiPoly>> powers(n, {MultiPoly::constant(n, Coefficient(1))});
    MultiPoly out(n);
    for (const auto& [e, c] : f.terms()) {
        Exponent lam(n + 1, 0);
        lam[0] = e[0];
        MultiPoly t = MultiPoly::monomial(n, lam, c);
        for (int i = 0; i < n; ++i) {
            auto& pw = powers[i];
            while (pw.size() <= e[i + 1]) pw.push_back(pw.back() * images[i]);
            if (e[i + 1] > 0) t = t * pw[e[i + 1]];
        }
        out += t;
    }
    return out;
}

PolySystem LinearMap::apply(const PolySystem& s) const {
    std::vector<MultiPoly> out;
    for (const auto& f : s.equations()) out.push_back(apply(f));
    return PolySystem(std::move(out), s.level());
}

std::vector<PuiseuxJet> LinearMap::to_old(const std::vector<PuiseuxJet>& x_new) const {
    if (static_cast<int>(x_new.size()) != size()) throw Error("linear map dimension mismatch");
    std::vector<PuiseuxJet> out;
    for (const auto& row : m_) {
        PuiseuxJet acc = PuiseuxJet::zero();
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0) acc = acc + Coefficient(row[j]) * x_new[j];
        out.push_back(std::move(acc));
    }
    return out;
}

std::vector<Complex> LinearMap::to_old(const std::vector<Complex>& x_new) const {
    if (static_cast<int>(x_new.size()) != size()) throw Error("linear map dimension mismatch");
    std::vector<Complex> out;
    for (const auto& row : m_) {
        Complex acc;
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0) acc += Complex(Real(row[j])) * x_new[j];
        out.push_back(std::move(acc));
    }
    return out;
}

std::vector<Complex> LinearMap::to_new(const std::vector<Complex>& x_old) const { return inverse().to_old(x_old); }

LinearMap LinearMap::inverse() const {
    const int n = size();
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = m_[i][j];
        a[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw Error("linear map is singular");
        std::swap(a[piv], a[col]);
        mpq_class p = a[col][col];
        for (auto& v : a[col]) v /= p;
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            mpq_class f = a[r][col];
            for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
        }
    }
    std::vector<std::vector<long>> inv(n, std::vector<long>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (a[i][n + j].get_den() != 1) throw Error("linear map has no integer inverse");
            inv[i][j] = a[i][n + j].get_num().get_si();
        }
    }
    return LinearMap(std::move(inv));
}

LinearMap operator*(const LinearMap& a, const LinearMap& b) {
    const int n = a.size();
    if (b.size() != n) throw Error("linear map dimension mismatch");
    std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j) m[i][j] += a.m_[i][k] * b.m_[k][j];
    return LinearMap(std::move(m));
}

bool is_regular_in(const MultiPoly& f, int var) {
    for (const auto& [e, c] : f.terms()) {
        bool pure = e[0] == 0 && e[var] > 0;
        for (std::size_t i = 1; i < e.size() && pure; ++i)
            if (static_cast<int>(i) != var && e[i] != 0) pure = false;
        if (pure) return true;
    }
    return false;
}

namespace {

// f(0, c_1 t, ..., t, ..., c_n t) as coefficients of t^d; zero check only.
bool restriction_nonzero(const MultiPoly& f, int var, const std::vector<long>& c) {
    std::map<unsigned, Coefficient> by_degree;
    std::map<unsigned, Real> scale;
    for (const auto& [e, coef] : f.terms()) {
        if (e[0] != 0) continue;
        Coefficient v = coef;
        unsigned d = 0;
        bool zero = false;
        for (std::size_t i = 1; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            d += e[i];
            if (static_cast<int>(i) == var) continue;
            if (c[i - 1] == 0) {
                zero = true;
                break;
            }
            v *= Coefficient(c[i - 1]).pow(e[i]);
        }
        if (zero) continue;
        auto [it, fresh] = by_degree.try_emplace(d, v);
        if (!fresh) it->second += v;
        if (!v.is_exact()) scale[d] = max(scale[d], v.magnitude());
    }
    for (const auto& [d, v] : by_degree)
        if (!v.negligible(scale[d])) return true;
    return false;
}

}  // namespace

Regularized regularize(const PolySystem& system, int var) {
    const int n = system.level();
    if (var < 1 || var > n) throw Error("regularize: unknown index out of range");
    unsigned total = 0;
    for (const auto& f : system.equations()) {
        bool depends = false;
        for (int i = 1; i <= n; ++i) depends = depends || f.depends_on(i);
        if (!depends) throw Error("regularize: equation does not depend on any unknown");
        // Only the lambda-free part matters for the certificate.
        total += f.at_zero(0).total_degree();
    }

    // A grid of 2b+1 values per coordinate exceeding the product degree
    // always contains a point where no restriction vanishes.
    const long bound = static_cast<long>(total) / 2 + 1;
    auto value_of = [](long idx) { return idx == 0 ? 0 : (idx % 2 == 1 ? (idx + 1) / 2 : -(idx / 2)); };

    std::vector<int> others;
    for (int i = 1; i <= n; ++i)
        if (i != var) others.push_back(i);

    for (long b = 0; b <= bound; ++b) {
        // Index vectors with entries in [0, 2b] whose largest entry is 2b-1 or 2b.
        std::vector<long> idx(others.size(), 0);
        const long top = 2 * b;
        while (true) {
            long hi = idx.empty() ? 0 : *std::max_element(idx.begin(), idx.end());
            if (b == 0 || hi >= top - 1) {
                std::vector<long> c(n, 0);
                for (std::size_t k = 0; k < others.size(); ++k) c[others[k] - 1] = value_of(idx[k]);
                bool ok = std::all_of(system.equations().begin(), system.equations().end(),
                                      [&](const MultiPoly& f) { return restriction_nonzero(f, var, c); });
                if (ok) {
                    LinearMap map = LinearMap::identity(n);
                    auto m = map.matrix();
                    for (int i = 1; i <= n; ++i)
                        if (i != var) m[i - 1][var - 1] = c[i - 1];
                    map = LinearMap(std::move(m));
                    return {map.apply(system), map};
                }
            }
            std::size_t k = 0;
            while (k < idx.size() && idx[k] == top) idx[k++] = 0;
            if (k == idx.size()) break;
            ++idx[k];
        }
    }
    throw Error("regularization failed");
}

}  // namespace smallsol
