#include "smallsol/multipoly.hpp"

#include "smallsol/error.hpp"

#include <algorithm>
#include <sstream>

namespace smallsol {

MultiPoly MultiPoly::constant(int nvars, const Coefficient& c) {
    MultiPoly p(nvars);
    p.add_term(Exponent(nvars + 1, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int var) {
    Exponent e(nvars + 1, 0);
    e.at(var) = 1;
    return monomial(nvars, std::move(e), Coefficient(1));
}

MultiPoly MultiPoly::monomial(int nvars, Exponent e, const Coefficient& c) {
    if (e.size() != static_cast<std::size_t>(nvars + 1)) throw InputError("exponent vector length mismatch");
    MultiPoly p(nvars);
    p.add_term(e, c);
    return p;
}

void MultiPoly::add_term(const Exponent& e, const Coefficient& c) {
    if (e.size() != static_cast<std::size_t>(nvars_ + 1)) throw InputError("exponent vector length mismatch");
    if (c.is_zero()) return;
    if (!c.is_exact()) {
        if (bits_ != 0 && bits_ != c.bits()) throw Error("mixing numeric precisions in one polynomial");
        bits_ = c.bits();
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    if (it->second.is_exact() && c.is_exact()) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
        return;
    }
    Real scale = 0;
    if (!it->second.is_exact() || !c.is_exact()) scale = max(it->second.magnitude(), c.magnitude());
    it->second += c;
    if (it->second.negligible(scale)) terms_.erase(it);
}

bool MultiPoly::is_exact() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_exact(); });
}

Coefficient MultiPoly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coefficient(0) : it->second;
}

unsigned MultiPoly::degree(int var) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

unsigned MultiPoly::valuation(int var) const {
    if (terms_.empty()) return 0;
    unsigned v = ~0u;
    for (const auto& [e, c] : terms_) v = std::min(v, e[var]);
    return v;
}

unsigned MultiPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
        unsigned s = 0;
        for (unsigned k : e) s += k;
        d = std::max(d, s);
    }
    return d;
}

bool MultiPoly::depends_on(int var) const { return degree(var) > 0; }

Coefficient MultiPoly::constant_term() const { return coeff(Exponent(nvars_ + 1, 0)); }

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (o.nvars_ != nvars_) throw Error("adding polynomials with different variable counts");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (o.nvars_ != nvars_) throw Error("subtracting polynomials with different variable counts");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_) throw Error("multiplying polynomials with different variable counts");
    MultiPoly r(a.nvars_);
    Exponent e(a.nvars_ + 1);
    if (a.is_exact() && b.is_exact()) {
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                Coefficient prod = ca;
                prod *= cb;
                r.terms_[e] += prod;
            }
        }
        std::erase_if(r.terms_, [](const auto& kv) { return kv.second.is_zero(); });
        return r;
    }
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly operator*(const Coefficient& c, const MultiPoly& p) {
    MultiPoly r(p.nvars_);
    for (const auto& [e, x] : p.terms_) r.add_term(e, c * x);
    return r;
}

MultiPoly MultiPoly::operator-() const { return Coefficient(-1) * *this; }

MultiPoly MultiPoly::pow(unsigned k) const {
    MultiPoly result = constant(nvars_, Coefficient(1)), base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

MultiPoly MultiPoly::derivative(int var) const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponent d = e;
        --d[var];
        r.add_term(d, c * Coefficient(static_cast<long>(e[var])));
    }
    return r;
}

MultiPoly MultiPoly::at_zero(int var) const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_)
        if (e[var] == 0) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::substitute(int var, const MultiPoly& value) const {
    if (value.nvars_ != nvars_) throw Error("substitution with mismatched variable count");
    std::vector<MultiPoly> powers{constant(nvars_, Coefficient(1))};
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        while (powers.size() <= e[var]) powers.push_back(powers.back() * value);
        Exponent rest = e;
        rest[var] = 0;
        r += monomial(nvars_, rest, c) * powers[e[var]];
    }
    return r;
}

MultiPoly MultiPoly::shift_down(int var, unsigned k) const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] < k) throw Error("shift_down: term not divisible");
        Exponent d = e;
        d[var] -= k;
        r.add_term(d, c);
    }
    return r;
}

MultiPoly MultiPoly::conj() const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, c.conj());
    return r;
}

MultiPoly MultiPoly::to_numeric(unsigned bits) const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, c.to_numeric(bits));
    return r;
}

MultiPoly MultiPoly::remove_var(int var) const {
    if (var < 1 || var > nvars_) throw Error("remove_var: index out of range");
    MultiPoly r(nvars_ - 1);
    for (const auto& [e, c] : terms_) {
        if (e[var] != 0) throw Error("remove_var: polynomial depends on the variable");
        Exponent d = e;
        d.erase(d.begin() + var);
        r.add_term(d, c);
    }
    return r;
}

MultiPoly MultiPoly::embed(int nvars) const {
    if (nvars < nvars_) throw Error("embed: cannot shrink");
    MultiPoly r(nvars);
    for (const auto& [e, c] : terms_) {
        Exponent d = e;
        d.resize(nvars + 1, 0);
        r.add_term(d, c);
    }
    return r;
}

Complex MultiPoly::evaluate(std::span<const Complex> point) const {
    if (point.size() != static_cast<std::size_t>(nvars_ + 1)) throw Error("evaluation point has wrong dimension");
    Complex sum;
    for (const auto& [e, c] : terms_) {
        Complex t = c.to_complex();
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) t *= point[i].pow(e[i]);
        sum += t;
    }
    return sum;
}

std::string MultiPoly::str(const std::vector<std::string>& names_in) const {
    auto names = names_in.empty() ? default_names(nvars_) : names_in;
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string cs = c.str();
        bool unit = true;
        for (unsigned k : e) unit = unit && k == 0;
        if (!first) os << " + ";
        first = false;
        bool one = c.is_exact() && c.exact() == GaussRational(1);
        if (!one || unit) os << (cs.find_first_of("+*") != std::string::npos ? "(" + cs + ")" : cs);
        bool star = !one || unit;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << (star ? "*" : "") << names[i];
            if (e[i] > 1) os << "^" << e[i];
            star = true;
        }
    }
    return os.str();
}

bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

std::vector<std::string> default_names(int nvars) {
    std::vector<std::string> names{"lambda"};
    for (int i = 1; i <= nvars; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

UniView::UniView(const MultiPoly& base, int var) : base_(base), var_(var) {
    if (base.is_zero()) throw InputError("univariate view of the zero polynomial");
    if (var < 1 || var > base.nvars()) throw InputError("distinguished variable out of range");
    coeffs_.assign(base.degree(var) + 1, MultiPoly(base.nvars()));
    for (const auto& [e, c] : base.terms()) {
        Exponent rest = e;
        rest[var] = 0;
        coeffs_[e[var]].add_term(rest, c);
    }
}

MultiPoly UniView::assemble(const std::vector<MultiPoly>& coeffs, int var, int nvars) {
    MultiPoly r(nvars);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        for (const auto& [e, c] : coeffs[k].terms()) {
            Exponent full = e;
            full[var] += static_cast<unsigned>(k);
            r.add_term(full, c);
        }
    }
    return r;
}

std::pair<MultiPoly, unsigned> normalize_lambda(const MultiPoly& f) {
    if (f.is_zero()) throw InputError("zero equation");
    unsigned k = f.valuation(0);
    return {f.shift_down(0, k), k};
}

}  // namespace smallsol
