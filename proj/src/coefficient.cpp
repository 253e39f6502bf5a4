#include "smallsol/coefficient.hpp"

#include "smallsol/error.hpp"

#include <cmath>
#include <regex>

namespace smallsol {

namespace {

thread_local unsigned g_bits = kDefaultBits;

unsigned digits10_for(unsigned bits) {
    return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

struct DefaultPrecisionInit {
    DefaultPrecisionInit() { Real::default_precision(digits10_for(kDefaultBits)); }
} const g_default_precision_init;

Complex exact_to_complex(const GaussRational& g) { return Complex(to_real(g.re), to_real(g.im)); }

unsigned join_bits(const Coefficient& a, const Coefficient& b) {
    if (a.is_exact()) return b.bits();
    if (b.is_exact()) return a.bits();
    if (a.bits() != b.bits()) throw Error("mixing numeric coefficients of different precisions");
    return a.bits();
}

}  // namespace

PrecisionScope::PrecisionScope(unsigned bits)
    : saved_bits_(g_bits), saved_digits_(Real::default_precision()) {
    if (bits < 32) throw InputError("precision must be at least 32 bits");
    g_bits = bits;
    Real::default_precision(digits10_for(bits));
}

PrecisionScope::~PrecisionScope() {
    g_bits = saved_bits_;
    Real::default_precision(saved_digits_);
}

unsigned working_bits() { return g_bits; }

Real tolerance(unsigned bits) {
    return boost::multiprecision::ldexp(Real(1), -static_cast<int>(bits / 2));
}

Real to_real(const mpq_class& q) { return Real(q.get_mpq_t()); }

Complex& Complex::operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
}

Complex& Complex::operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

Complex& Complex::operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    Real i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

Complex& Complex::operator/=(const Complex& o) {
    Real d = o.re * o.re + o.im * o.im;
    if (d == 0) throw Error("complex division by zero");
    Real r = (re * o.re + im * o.im) / d;
    Real i = (im * o.re - re * o.im) / d;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

Real Complex::abs() const { return sqrt(re * re + im * im); }

Complex Complex::pow(long n) const {
    if (n < 0) return Complex(Real(1)) / pow(-n);
    Complex result(Real(1)), base = *this;
    while (n > 0) {
        if (n & 1) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

Complex Complex::polar(const Real& r, const Real& theta) { return Complex(r * cos(theta), r * sin(theta)); }

bool Coefficient::is_zero() const {
    if (is_exact()) return exact().is_zero();
    return num().z.re == 0 && num().z.im == 0;
}

bool Coefficient::negligible(const Real& scale) const {
    if (is_exact()) return exact().is_zero();
    Real s = scale > 1 ? scale : Real(1);
    return num().z.abs() <= tolerance(num().bits) * s;
}

bool Coefficient::is_real() const {
    if (is_exact()) return sgn(exact().im) == 0;
    Real s = num().z.abs();
    if (s < 1) s = 1;
    return abs(num().z.im) <= tolerance(num().bits) * s;
}

Real Coefficient::magnitude() const { return to_complex().abs(); }

Complex Coefficient::to_complex() const { return is_exact() ? exact_to_complex(exact()) : num().z; }

Coefficient Coefficient::conj() const {
    if (is_exact()) return Coefficient(GaussRational(exact().re, -exact().im));
    return numeric(num().z.conj(), num().bits);
}

Coefficient Coefficient::to_numeric(unsigned bits) const {
    if (!is_exact()) {
        if (num().bits != bits) throw Error("mixing numeric coefficients of different precisions");
        return *this;
    }
    return numeric(exact_to_complex(exact()), bits);
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
    if (is_exact() && o.is_exact()) {
        auto& g = std::get<GaussRational>(v_);
        g.re += o.exact().re;
        g.im += o.exact().im;
        return *this;
    }
    unsigned b = join_bits(*this, o);
    *this = numeric(to_complex() + o.to_complex(), b);
    return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) { return *this += -o; }

Coefficient& Coefficient::operator*=(const Coefficient& o) {
    if (is_exact() && o.is_exact()) {
        auto& a = std::get<GaussRational>(v_);
        const auto& b = o.exact();
        // mpq arithmetic keeps results canonical.
        if (sgn(a.im) == 0 && sgn(b.im) == 0) {
            a.re *= b.re;
            return *this;
        }
        mpq_class re = a.re * b.re - a.im * b.im;
        mpq_class im = a.re * b.im + a.im * b.re;
        a.re = std::move(re);
        a.im = std::move(im);
        return *this;
    }
    unsigned b = join_bits(*this, o);
    *this = numeric(to_complex() * o.to_complex(), b);
    return *this;
}

Coefficient& Coefficient::operator/=(const Coefficient& o) {
    if (o.is_zero()) throw Error("coefficient division by zero");
    if (is_exact() && o.is_exact()) {
        const auto& a = exact();
        const auto& b = o.exact();
        mpq_class d = b.re * b.re + b.im * b.im;
        mpq_class re = (a.re * b.re + a.im * b.im) / d;
        mpq_class im = (a.im * b.re - a.re * b.im) / d;
        v_ = GaussRational(std::move(re), std::move(im));
        return *this;
    }
    unsigned b = join_bits(*this, o);
    *this = numeric(to_complex() / o.to_complex(), b);
    return *this;
}

Coefficient Coefficient::operator-() const {
    if (is_exact()) return Coefficient(GaussRational(-exact().re, -exact().im));
    return numeric(-num().z, num().bits);
}

Coefficient Coefficient::pow(long n) const {
    if (n < 0) return Coefficient(1) / pow(-n);
    Coefficient result(1), base = *this;
    while (n > 0) {
        if (n & 1) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

bool approx_equal(const Coefficient& a, const Coefficient& b) {
    if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
    unsigned bits = join_bits(a, b);
    Real scale = max(a.magnitude(), b.magnitude());
    if (scale < 1) scale = 1;
    return (a.to_complex() - b.to_complex()).abs() <= tolerance(bits) * scale;
}

bool operator==(const Coefficient& a, const Coefficient& b) {
    if (a.is_exact() != b.is_exact()) return false;
    if (a.is_exact()) return a.exact() == b.exact();
    return a.num().bits == b.num().bits && a.num().z.re == b.num().z.re && a.num().z.im == b.num().z.im;
}

int compare(const Coefficient& a, const Coefficient& b) {
    if (a.is_exact() && b.is_exact()) {
        int c = cmp(a.exact().re, b.exact().re);
        if (c != 0) return c < 0 ? -1 : 1;
        c = cmp(a.exact().im, b.exact().im);
        return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    // Parts equal within tolerance compare as equal, so numeric noise does not
    // decide the order of conjugate or repeated values.
    unsigned bits = a.is_exact() ? b.bits() : a.bits();
    Complex x = a.to_complex(), y = b.to_complex();
    Real scale = max(a.magnitude(), b.magnitude());
    if (scale < 1) scale = 1;
    Real eps = tolerance(bits) * scale;
    if (abs(x.re - y.re) > eps) return x.re < y.re ? -1 : 1;
    if (abs(x.im - y.im) > eps) return x.im < y.im ? -1 : 1;
    return 0;
}

std::string rational_str(const mpq_class& q) { return q.get_str(); }

std::string real_str(const Real& x, int digits) {
    if (x == 0) return "0";
    return x.str(digits, std::ios_base::scientific);
}

std::string Coefficient::str() const {
    if (is_exact()) {
        const auto& g = exact();
        if (sgn(g.im) == 0) return rational_str(g.re);
        std::string im = rational_str(g.im) + "*i";
        if (sgn(g.re) == 0) return im;
        return rational_str(g.re) + (sgn(g.im) > 0 ? "+" : "") + im;
    }
    int digits = static_cast<int>(num().bits * 0.30103) + 1;
    std::string re = real_str(num().z.re, digits);
    if (num().z.im == 0) return re;
    return "(" + re + "," + real_str(num().z.im, digits) + ")";
}

mpq_class parse_rational(const std::string& s) {
    static const std::regex pattern(R"(^\s*([+-]?[0-9]+)(?:\s*/\s*([0-9]+))?\s*$)");
    std::smatch m;
    if (!std::regex_match(s, m, pattern)) throw InputError("not an exact rational: '" + s + "'");
    mpz_class num(m[1].str()[0] == '+' ? m[1].str().substr(1) : m[1].str(), 10);
    mpz_class den = m[2].matched ? mpz_class(m[2].str(), 10) : mpz_class(1);
    if (den == 0) throw InputError("zero denominator in '" + s + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace smallsol
