#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <gmpxx.h>

#include <compare>
#include <string>
#include <variant>

namespace smallsol {

using Real = boost::multiprecision::mpfr_float;

constexpr unsigned kDefaultBits = 256;

/// Sets the working precision of newly created `Real` values for the lifetime
/// of the scope. Precision is given in bits.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned bits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_bits_;
    unsigned saved_digits_;
};

/// Working precision (bits) currently in effect.
unsigned working_bits();

/// 2^(-bits/2): the relative tolerance used for every numeric zero and
/// equality test at precision `bits`.
Real tolerance(unsigned bits);

Real to_real(const mpq_class& q);

struct Complex {
    Real re{0};
    Real im{0};

    Complex() = default;
    Complex(Real r, Real i = Real(0)) : re(std::move(r)), im(std::move(i)) {}

    Complex& operator+=(const Complex& o);
    Complex& operator-=(const Complex& o);
    Complex& operator*=(const Complex& o);
    Complex& operator/=(const Complex& o);

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
    Complex operator-() const { return Complex(-re, -im); }

    Real abs() const;
    Complex conj() const { return Complex(re, -im); }
    Complex pow(long n) const;
    static Complex polar(const Real& r, const Real& theta);
};

/// Exact coefficient: a Gaussian rational re + i*im, always canonical.
struct GaussRational {
    mpq_class re{0};
    mpq_class im{0};

    GaussRational() = default;
    GaussRational(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {
        re.canonicalize();
        im.canonicalize();
    }
    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re == b.re && a.im == b.im;
    }
};

/// High-precision complex value tagged with the precision it was computed at.
struct Numeric {
    Complex z;
    unsigned bits = kDefaultBits;
};

/// A polynomial or series coefficient: either exact (Gaussian rational) or a
/// tagged high-precision complex number. Exact op exact stays exact; anything
/// touching a numeric value becomes numeric. Mixing two numeric precisions is
/// rejected.
class Coefficient {
public:
    Coefficient() : v_(GaussRational()) {}
    Coefficient(long n) : v_(GaussRational(mpq_class(n))) {}
    Coefficient(int n) : v_(GaussRational(mpq_class(n))) {}
    Coefficient(mpq_class q) : v_(GaussRational(std::move(q))) {}
    Coefficient(GaussRational g) : v_(std::move(g)) {}
    Coefficient(Numeric n) : v_(std::move(n)) {}
    static Coefficient numeric(Complex z, unsigned bits) { return Coefficient(Numeric{std::move(z), bits}); }

    bool is_exact() const { return std::holds_alternative<GaussRational>(v_); }
    const GaussRational& exact() const { return std::get<GaussRational>(v_); }
    const Numeric& num() const { return std::get<Numeric>(v_); }
    unsigned bits() const { return is_exact() ? 0u : num().bits; }

    /// Exact zero test (no tolerance).
    bool is_zero() const;
    /// Zero within tolerance relative to `scale` (exact coefficients: exact test).
    bool negligible(const Real& scale) const;
    bool is_real() const;

    Real magnitude() const;
    Complex to_complex() const;
    Coefficient conj() const;
    /// Numeric copy at the given precision (identity for numeric values of that precision).
    Coefficient to_numeric(unsigned bits) const;

    Coefficient& operator+=(const Coefficient& o);
    Coefficient& operator-=(const Coefficient& o);
    Coefficient& operator*=(const Coefficient& o);
    Coefficient& operator/=(const Coefficient& o);
    friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
    friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
    friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
    friend Coefficient operator/(Coefficient a, const Coefficient& b) { return a /= b; }
    Coefficient operator-() const;
    Coefficient pow(long n) const;

    /// Exact equality for exact pairs, tolerance equality otherwise.
    friend bool approx_equal(const Coefficient& a, const Coefficient& b);
    /// Strict structural equality (same kind, same value).
    friend bool operator==(const Coefficient& a, const Coefficient& b);

    /// Total order used for deterministic output: by real part, then imaginary part.
    friend int compare(const Coefficient& a, const Coefficient& b);

    std::string str() const;

private:
    std::variant<GaussRational, Numeric> v_;
};

/// Decimal rendering of a real number with `digits` significant digits.
std::string real_str(const Real& x, int digits);
/// Parses "p", "-p/q" into a canonical rational; throws InputError.
mpq_class parse_rational(const std::string& s);
std::string rational_str(const mpq_class& q);

/// Rational exponent or truncation order that may be +infinity.
class Order {
public:
    Order() = default;
    Order(long n) : value_(n) {}
    Order(mpq_class q) : value_(std::move(q)) { value_.canonicalize(); }
    static Order infinity() {
        Order o;
        o.inf_ = true;
        return o;
    }

    bool is_infinite() const { return inf_; }
    const mpq_class& value() const { return value_; }

    friend bool operator==(const Order& a, const Order& b) {
        return a.inf_ == b.inf_ && (a.inf_ || a.value_ == b.value_);
    }
    friend std::strong_ordering operator<=>(const Order& a, const Order& b) {
        if (a.inf_ || b.inf_) return a.inf_ <=> b.inf_;
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    friend Order operator+(const Order& a, const Order& b) {
        if (a.inf_ || b.inf_) return infinity();
        return Order(mpq_class(a.value_ + b.value_));
    }
    friend Order operator-(const Order& a, const mpq_class& b) {
        if (a.inf_) return infinity();
        return Order(mpq_class(a.value_ - b));
    }
    friend Order operator*(long k, const Order& a) {
        if (a.inf_) return k == 0 ? Order(0) : infinity();
        return Order(mpq_class(a.value_ * k));
    }

    std::string str() const { return inf_ ? "inf" : rational_str(value_); }

private:
    mpq_class value_{0};
    bool inf_ = false;
};

inline const Order& min(const Order& a, const Order& b) { return b < a ? b : a; }
inline const Order& max(const Order& a, const Order& b) { return a < b ? b : a; }

}  // namespace smallsol
