#ifndef GVX_SCALAR_HPP
#define GVX_SCALAR_HPP

#include <gmpxx.h>
#include <string>

namespace gvx::exactlin {

using Rational = mpq_class;

/// Rational from a num/den pair, reduced to lowest terms with positive denominator.
Rational make_rational(long num, long den = 1);

std::string rational_str(const Rational& r);

/// Element of Q(i): re + im*i with exact rational parts. Line instances keep im = 0.
struct Scalar {
    Rational re;
    Rational im;

    Scalar() : re(0), im(0) {}
    Scalar(long n) : re(n), im(0) {}
    Scalar(const Rational& r) : re(r), im(0) {}
    Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static Scalar i(long c = 1) { return Scalar(Rational(0), Rational(c)); }
    static Scalar ratio(long num, long den) { return Scalar(make_rational(num, den)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    Scalar operator-() const { return Scalar(-re, -im); }
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    Scalar inverse() const;

    /// "p/q", "a/b+c/d*i", "c/d*i"; zero prints "0".
    std::string str() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend bool operator<(const Scalar& a, const Scalar& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }
};

} // namespace gvx::exactlin

#endif
