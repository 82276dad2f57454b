#include "mvortho/exact.hpp"

#include <cctype>
#include <sstream>

namespace mvortho {

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
    Rational n2 = o.norm2();
    if (n2 == 0) throw std::domain_error("ExactScalar: division by zero");
    Rational r = (re * o.re + im * o.im) / n2;
    Rational i = (im * o.re - re * o.im) / n2;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

ExactScalar inverse(const ExactScalar& a) {
    ExactScalar one(1);
    return one / a;
}

ExactScalar pow(const ExactScalar& a, long k) {
    if (k < 0) return pow(inverse(a), -k);
    ExactScalar acc(1);
    ExactScalar base = a;
    unsigned long e = static_cast<unsigned long>(k);
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

namespace {

bool rational_sqrt(const Rational& a, Rational& out) {
    if (a < 0) return false;
    if (a == 0) {
        out = 0;
        return true;
    }
    const mpz_class& num = a.get_num();
    const mpz_class& den = a.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    out = Rational(rn, rd);
    return true;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

}  // namespace

bool is_square(const ExactScalar& a) {
    // Mirrors sqrt_exact without throwing.
    if (a.im == 0) {
        Rational s;
        return rational_sqrt(a.re >= 0 ? a.re : Rational(-a.re), s);
    }
    Rational m, c2, c;
    if (!rational_sqrt(a.norm2(), m)) return false;
    c2 = (a.re + m) / 2;
    return rational_sqrt(c2, c);
}

ExactScalar sqrt_exact(const ExactScalar& a) {
    if (a.im == 0) {
        Rational s;
        if (a.re >= 0) {
            if (!rational_sqrt(a.re, s))
                throw std::domain_error("sqrt_exact: " + a.str() + " is not a perfect square");
            return ExactScalar(s);
        }
        if (!rational_sqrt(Rational(-a.re), s))
            throw std::domain_error("sqrt_exact: " + a.str() + " is not a perfect square");
        return ExactScalar(Rational(0), s);
    }
    // (c+di)^2 = a+bi  =>  c^2 = (a + |a+bi|)/2, d = b/(2c).
    Rational m;
    if (!rational_sqrt(a.norm2(), m))
        throw std::domain_error("sqrt_exact: |" + a.str() + "|^2 is not a perfect square");
    Rational c2 = (a.re + m) / 2;
    Rational c;
    if (!rational_sqrt(c2, c))
        throw std::domain_error("sqrt_exact: " + a.str() + " is not a perfect square in Q(i)");
    if (c == 0) throw std::domain_error("sqrt_exact: internal inconsistency");
    Rational d = a.im / (2 * c);
    return ExactScalar(c, d);
}

std::string ExactScalar::str() const {
    if (im == 0) return rational_str(re);
    std::string imag = rational_str(im >= 0 ? im : Rational(-im)) + "*i";
    if (re == 0) return (im < 0 ? "-" : "") + imag;
    return rational_str(re) + (im < 0 ? "-" : "+") + imag;
}

namespace {

// One signed rational: [+-]digits[/digits]
Rational parse_rational_at(const std::string& s, size_t& pos) {
    bool neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        neg = (s[pos] == '-');
        ++pos;
    }
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("parse_exact: expected digits in '" + s + "'");
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        size_t den = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == den) throw std::invalid_argument("parse_exact: expected denominator in '" + s + "'");
    }
    Rational r(s.substr(start, pos - start));
    r.canonicalize();
    if (neg) r = -r;
    return r;
}

}  // namespace

ExactScalar parse_exact(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("parse_exact: empty string");

    // Special-case bare imaginary units.
    if (s == "i" || s == "+i") return ExactScalar::make_i();
    if (s == "-i") return -ExactScalar::make_i();

    size_t pos = 0;
    Rational first = parse_rational_at(s, pos);
    bool first_imag = false;
    if (pos < s.size() && (s[pos] == '*' || s[pos] == 'i')) {
        if (s[pos] == '*') {
            ++pos;
            if (pos >= s.size() || s[pos] != 'i')
                throw std::invalid_argument("parse_exact: expected 'i' after '*' in '" + text + "'");
        }
        ++pos;  // consume 'i'
        first_imag = true;
    }
    if (pos == s.size()) {
        return first_imag ? ExactScalar(Rational(0), first) : ExactScalar(first);
    }
    if (first_imag)
        throw std::invalid_argument("parse_exact: imaginary part must come last in '" + text + "'");
    if (s[pos] != '+' && s[pos] != '-')
        throw std::invalid_argument("parse_exact: unexpected character in '" + text + "'");
    Rational second = parse_rational_at(s, pos);
    if (pos < s.size() && s[pos] == '*') {
        ++pos;
        if (pos >= s.size() || s[pos] != 'i')
            throw std::invalid_argument("parse_exact: expected 'i' after '*' in '" + text + "'");
        ++pos;
    } else if (pos < s.size() && s[pos] == 'i') {
        ++pos;
    } else {
        throw std::invalid_argument("parse_exact: second term must be imaginary in '" + text + "'");
    }
    if (pos != s.size()) throw std::invalid_argument("parse_exact: trailing characters in '" + text + "'");
    return ExactScalar(first, second);
}

}  // namespace mvortho
