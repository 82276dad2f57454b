#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace mvortho {

using Rational = mpq_class;

/// Gaussian rational a + b*i with exact field arithmetic. Values are kept in
/// canonical lowest terms (positive denominators) by GMP.
struct ExactScalar {
    Rational re;
    Rational im;

    ExactScalar() : re(0), im(0) {}
    ExactScalar(long v) : re(v), im(0) {}
    ExactScalar(long num, long den) : re(num, den), im(0) { re.canonicalize(); }
    ExactScalar(const Rational& r) : re(r), im(0) { re.canonicalize(); }
    ExactScalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {
        re.canonicalize();
        im.canonicalize();
    }

    static ExactScalar make_i() { return ExactScalar(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    ExactScalar conj() const { return ExactScalar(re, -im); }
    /// re^2 + im^2 as a rational.
    Rational norm2() const { return re * re + im * im; }

    ExactScalar operator-() const { return ExactScalar(-re, -im); }

    ExactScalar& operator+=(const ExactScalar& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    ExactScalar& operator-=(const ExactScalar& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    ExactScalar& operator*=(const ExactScalar& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    ExactScalar& operator/=(const ExactScalar& o);

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

    std::string str() const;
};

inline ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
inline ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
inline ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
inline ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
inline bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.re == b.re && a.im == b.im;
}
inline bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

ExactScalar inverse(const ExactScalar& a);

/// a^k for any integer k (negative k inverts first; a must be nonzero then).
ExactScalar pow(const ExactScalar& a, long k);

/// Exact square root of a Gaussian rational. Returns the root with re > 0,
/// or re == 0 and im >= 0. Throws std::domain_error when the argument is not
/// a perfect square in Q(i).
ExactScalar sqrt_exact(const ExactScalar& a);

bool is_square(const ExactScalar& a);

/// Parses "p/q", "p/q+r/s*i", "p/q-r/s*i" or "r/s*i" ('-' allowed on
/// numerators, integer parts may omit the denominator).
ExactScalar parse_exact(const std::string& text);

}  // namespace mvortho
