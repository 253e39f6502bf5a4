#include "smallsol/jet.hpp"

#include "smallsol/error.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <sstream>

namespace smallsol {

long lcm_ram(long a, long b) { return std::lcm(a, b); }

long grid_floor(const Order& order, long ram) {
    if (order.is_infinite()) return LONG_MAX;
    mpz_class n = order.value().get_num() * ram;
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), order.value().get_den().get_mpz_t());
    return q.get_si();
}

void SeriesAccumulator::add(long exp, const Coefficient& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = slots_.try_emplace(exp);
    Slot& s = it->second;
    if (fresh) {
        s.sum = c;
        if (!c.is_exact()) s.scale = c.magnitude();
        return;
    }
    s.sum += c;
    if (!c.is_exact()) {
        Real m = c.magnitude();
        if (m > s.scale) s.scale = m;
    }
}

std::map<long, Coefficient> SeriesAccumulator::finish() const {
    std::map<long, Coefficient> out;
    for (const auto& [e, s] : slots_)
        if (!s.sum.negligible(s.scale)) out.emplace(e, s.sum);
    return out;
}

PuiseuxJet::PuiseuxJet(long ram, std::vector<JetTerm> terms, Order trunc) : ram_(ram), trunc_(std::move(trunc)) {
    if (ram <= 0) throw Error("ramification must be positive");
    std::sort(terms.begin(), terms.end(), [](const JetTerm& a, const JetTerm& b) { return a.num < b.num; });
    long limit = grid_floor(trunc_, ram_);
    for (auto& t : terms) {
        if (t.coef.is_zero() || t.num > limit) continue;
        if (!terms_.empty() && terms_.back().num == t.num) throw Error("duplicate exponent in jet");
        terms_.push_back(std::move(t));
    }
    long g = ram_;
    for (const auto& t : terms_) g = std::gcd(g, t.num);
    if (g > 1) {
        ram_ /= g;
        for (auto& t : terms_) t.num /= g;
    }
}

PuiseuxJet PuiseuxJet::constant(const Coefficient& c, Order trunc) { return PuiseuxJet(1, {{0, c}}, std::move(trunc)); }

PuiseuxJet PuiseuxJet::monomial(const Coefficient& c, long num, long ram, Order trunc) {
    return PuiseuxJet(ram, {{num, c}}, std::move(trunc));
}

bool PuiseuxJet::has_numeric() const {
    return std::any_of(terms_.begin(), terms_.end(), [](const JetTerm& t) { return !t.coef.is_exact(); });
}

Order PuiseuxJet::valuation_bound() const {
    if (terms_.empty()) return trunc_;
    return Order(mpq_class(terms_.front().num, ram_));
}

Coefficient PuiseuxJet::coefficient_at(const mpq_class& e) const {
    mpq_class scaled = e * ram_;
    if (scaled.get_den() != 1) return Coefficient(0);
    long n = scaled.get_num().get_si();
    for (const auto& t : terms_)
        if (t.num == n) return t.coef;
    return Coefficient(0);
}

PuiseuxJet PuiseuxJet::lift(long k) const {
    if (k <= 0) throw Error("lift factor must be positive");
    std::vector<JetTerm> lifted = terms_;
    for (auto& t : lifted) t.num *= k;
    return PuiseuxJet(Raw{}, ram_ * k, std::move(lifted), trunc_);
}

PuiseuxJet PuiseuxJet::normalized() const { return PuiseuxJet(ram_, terms_, trunc_); }

PuiseuxJet PuiseuxJet::truncated(const Order& t) const { return PuiseuxJet(ram_, terms_, min(trunc_, t)); }

PuiseuxJet PuiseuxJet::with_trunc(Order t) const { return PuiseuxJet(ram_, terms_, std::move(t)); }

PuiseuxJet PuiseuxJet::conj() const {
    std::vector<JetTerm> c = terms_;
    for (auto& t : c) t.coef = t.coef.conj();
    return PuiseuxJet(ram_, std::move(c), trunc_);
}

PuiseuxJet PuiseuxJet::with_term(const mpq_class& e, const Coefficient& c, Order new_trunc) const {
    long r = lcm_ram(ram_, e.get_den().get_si());
    PuiseuxJet base = lift(r / ram_);
    std::vector<JetTerm> terms = base.terms_;
    mpq_class n = e * r;
    if (!terms.empty() && terms.back().num >= n.get_num().get_si()) throw Error("with_term: exponent not beyond last term");
    terms.push_back({n.get_num().get_si(), c});
    return PuiseuxJet(r, std::move(terms), std::move(new_trunc));
}

PuiseuxJet PuiseuxJet::operator-() const {
    std::vector<JetTerm> c = terms_;
    for (auto& t : c) t.coef = -t.coef;
    return PuiseuxJet(Raw{}, ram_, std::move(c), trunc_);
}

PuiseuxJet operator+(const PuiseuxJet& a, const PuiseuxJet& b) {
    long r = lcm_ram(a.ram_, b.ram_);
    Order trunc = min(a.trunc_, b.trunc_);
    SeriesAccumulator acc;
    for (const auto& t : a.terms_) acc.add(t.num * (r / a.ram_), t.coef);
    for (const auto& t : b.terms_) acc.add(t.num * (r / b.ram_), t.coef);
    std::vector<JetTerm> terms;
    for (auto& [e, c] : acc.finish()) terms.push_back({e, c});
    return PuiseuxJet(r, std::move(terms), trunc);
}

PuiseuxJet operator*(const PuiseuxJet& a, const PuiseuxJet& b) {
    if (a.is_identically_zero() || b.is_identically_zero()) return PuiseuxJet::zero();
    Order trunc = min(a.valuation_bound() + b.trunc_, b.valuation_bound() + a.trunc_);
    long r = lcm_ram(a.ram_, b.ram_);
    long limit = grid_floor(trunc, r);
    long fa = r / a.ram_, fb = r / b.ram_;
    SeriesAccumulator acc;
    for (const auto& x : a.terms_) {
        for (const auto& y : b.terms_) {
            long e = x.num * fa + y.num * fb;
            if (e > limit) break;
            acc.add(e, x.coef * y.coef);
        }
    }
    std::vector<JetTerm> terms;
    for (auto& [e, c] : acc.finish()) terms.push_back({e, c});
    return PuiseuxJet(r, std::move(terms), trunc);
}

PuiseuxJet operator*(const Coefficient& c, const PuiseuxJet& a) {
    if (c.is_zero()) return PuiseuxJet::zero();
    std::vector<JetTerm> terms = a.terms_;
    for (auto& t : terms) t.coef = c * t.coef;
    return PuiseuxJet(a.ram_, std::move(terms), a.trunc_);
}

Complex PuiseuxJet::evaluate(const Complex& lambda) const {
    Real modulus = lambda.abs();
    if (modulus == 0) return Complex();
    Real arg = atan2(lambda.im, lambda.re);
    Complex sum;
    for (const auto& t : terms_) {
        Real e = Real(t.num) / ram_;
        sum += t.coef.to_complex() * Complex::polar(pow(modulus, e), arg * e);
    }
    return sum;
}

std::string PuiseuxJet::str(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << t.coef.str() << ")";
        mpq_class e(t.num, ram_);
        e.canonicalize();
        if (e == 1) os << "*" << var;
        else if (e != 0) os << "*" << var << "^" << (e.get_den() == 1 ? e.get_str() : "(" + e.get_str() + ")");
    }
    if (!trunc_.is_infinite()) {
        if (!first) os << " + ";
        os << "o(" << var << "^" << trunc_.str() << ")";
    } else if (first) {
        os << "0";
    }
    return os.str();
}

bool jets_agree(const PuiseuxJet& a, const PuiseuxJet& b, const Order& upto) {
    long r = lcm_ram(a.ram(), b.ram());
    long limit = grid_floor(upto, r);
    std::map<long, std::pair<Coefficient, Coefficient>> slots;
    for (const auto& t : a.terms()) {
        long e = t.num * (r / a.ram());
        if (e <= limit) slots[e].first = t.coef;
    }
    for (const auto& t : b.terms()) {
        long e = t.num * (r / b.ram());
        if (e <= limit) slots[e].second = t.coef;
    }
    for (const auto& [e, pair] : slots) {
        const auto& [x, y] = pair;
        if (x.is_exact() && y.is_exact()) {
            if (!(x.exact() == y.exact())) return false;
        } else if (!approx_equal(x.to_numeric(std::max(x.bits(), y.bits())),
                                 y.to_numeric(std::max(x.bits(), y.bits())))) {
            return false;
        }
    }
    return true;
}

int compare_jets(const PuiseuxJet& a, const PuiseuxJet& b) {
    std::size_t n = std::min(a.terms().size(), b.terms().size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = cmp(a.exponent(i), b.exponent(i));
        // The jet whose first differing term comes earlier sorts by that term's value against zero.
        if (c != 0) return c < 0 ? compare(a.terms()[i].coef, Coefficient(0)) : -compare(b.terms()[i].coef, Coefficient(0));
        int v = compare(a.terms()[i].coef, b.terms()[i].coef);
        if (v != 0) return v;
    }
    if (a.terms().size() != b.terms().size())
        return a.terms().size() < b.terms().size() ? -compare(b.terms()[n].coef, Coefficient(0))
                                                   : compare(a.terms()[n].coef, Coefficient(0));
    return 0;
}

}  // namespace smallsol
