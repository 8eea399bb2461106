#include "gvx/scalar.hpp"

#include <stdexcept>

namespace gvx::exactlin {

Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string rational_str(const Rational& r) {
    return r.get_str();
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re += o.re;
    im += o.im;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    Rational nre = re * o.re - im * o.im;
    Rational nim = re * o.im + im * o.re;
    re = std::move(nre);
    im = std::move(nim);
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: division by zero");
    Rational n = re * re + im * im;
    return Scalar(re / n, -im / n);
}

Scalar& Scalar::operator/=(const Scalar& o) {
    return *this *= o.inverse();
}

std::string Scalar::str() const {
    if (is_zero()) return "0";
    std::string s;
    if (re != 0) s = re.get_str();
    if (im != 0) {
        if (im > 0 && !s.empty()) s += "+";
        if (im < 0) {
            s += "-";
            Rational a = -im;
            s += a.get_str();
        } else {
            s += im.get_str();
        }
        s += "*i";
    }
    return s;
}

} // namespace gvx::exactlin
