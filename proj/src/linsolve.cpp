#include "mvortho/linsolve.hpp"

#include <utility>

namespace mvortho {

namespace {

// Gaussian integer a + b i.
struct GInt {
    mpz_class re, im;

    bool is_zero() const { return re == 0 && im == 0; }
};

GInt gi_mul(const GInt& a, const GInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GInt gi_sub(const GInt& a, const GInt& b) { return {a.re - b.re, a.im - b.im}; }

// Exact division in Z[i]; Bareiss guarantees divisibility.
GInt gi_divexact(const GInt& a, const GInt& d) {
    mpz_class n2 = d.re * d.re + d.im * d.im;
    mpz_class re_num = a.re * d.re + a.im * d.im;
    mpz_class im_num = a.im * d.re - a.re * d.im;
    GInt out;
    mpz_divexact(out.re.get_mpz_t(), re_num.get_mpz_t(), n2.get_mpz_t());
    mpz_divexact(out.im.get_mpz_t(), im_num.get_mpz_t(), n2.get_mpz_t());
    return out;
}

ExactScalar gi_to_scalar(const GInt& a) { return ExactScalar(Rational(a.re), Rational(a.im)); }

}  // namespace

bool solve_exact(std::vector<std::vector<ExactScalar>> a, std::vector<ExactScalar> b,
                 std::vector<ExactScalar>& x) {
    const size_t n = a.size();
    // Clear denominators per row: the augmented row times the lcm of all its
    // denominators becomes Gaussian-integer valued.
    std::vector<std::vector<GInt>> m(n, std::vector<GInt>(n + 1));
    for (size_t i = 0; i < n; ++i) {
        mpz_class l = 1;
        auto fold = [&l](const ExactScalar& v) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.re.get_den().get_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.im.get_den().get_mpz_t());
        };
        for (size_t j = 0; j < n; ++j) fold(a[i][j]);
        fold(b[i]);
        Rational scale = Rational(l);
        for (size_t j = 0; j < n; ++j) {
            Rational re = a[i][j].re * scale, im = a[i][j].im * scale;
            m[i][j] = {re.get_num(), im.get_num()};
        }
        Rational re = b[i].re * scale, im = b[i].im * scale;
        m[i][n] = {re.get_num(), im.get_num()};
    }

    GInt prev{mpz_class(1), mpz_class(0)};
    for (size_t k = 0; k < n; ++k) {
        size_t pivot = k;
        while (pivot < n && m[pivot][k].is_zero()) ++pivot;
        if (pivot == n) return false;
        if (pivot != k) std::swap(m[pivot], m[k]);
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j <= n; ++j) {
                GInt num = gi_sub(gi_mul(m[k][k], m[i][j]), gi_mul(m[i][k], m[k][j]));
                m[i][j] = gi_divexact(num, prev);
            }
            m[i][k] = {mpz_class(0), mpz_class(0)};
        }
        prev = m[k][k];
    }

    x.assign(n, ExactScalar(0));
    for (size_t ii = n; ii-- > 0;) {
        ExactScalar acc = gi_to_scalar(m[ii][n]);
        for (size_t j = ii + 1; j < n; ++j) acc -= gi_to_scalar(m[ii][j]) * x[j];
        x[ii] = acc / gi_to_scalar(m[ii][ii]);
    }
    return true;
}

}  // namespace mvortho
