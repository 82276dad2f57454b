#include "mvortho/special.hpp"

#include <cmath>

namespace mvortho {

ExactScalar pochhammer_exact(const ExactScalar& a, unsigned k) {
    ExactScalar acc(1);
    ExactScalar term = a;
    const ExactScalar one(1);
    for (unsigned m = 0; m < k; ++m) {
        acc *= term;
        term += one;
    }
    return acc;
}

ExactScalar qpochhammer_exact(const ExactScalar& a, const ExactScalar& q, unsigned k) {
    ExactScalar acc(1);
    ExactScalar aq = a;
    const ExactScalar one(1);
    for (unsigned m = 0; m < k; ++m) {
        acc *= one - aq;
        aq *= q;
    }
    return acc;
}

std::complex<double> qpochhammer_inf(std::complex<double> a, std::complex<double> q, double tol) {
    if (std::abs(q) >= 1.0) throw std::domain_error("qpochhammer_inf: |q| must be < 1");
    if (tol <= 0.0) throw std::domain_error("qpochhammer_inf: tol must be positive");
    std::complex<double> acc(1.0, 0.0);
    std::complex<double> aq = a;
    while (std::abs(aq) >= tol) {
        acc *= (1.0 - aq);
        aq *= q;
    }
    return acc;
}

namespace {

// Lanczos approximation, g = 607/128, 15 terms (Godfrey's coefficients).
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczosCoeff[15] = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5,
};
constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kSqrtTwoPi = 2.50662827463100050241576528481104525;

std::complex<double> gamma_lanczos_halfplane(std::complex<double> z) {
    // Requires Re(z) >= 0.5.
    std::complex<double> sum(kLanczosCoeff[0], 0.0);
    for (int k = 1; k < 15; ++k) sum += kLanczosCoeff[k] / (z + (double)(k - 1));
    std::complex<double> base = z + (kLanczosG - 0.5);
    return kSqrtTwoPi * std::pow(base, z - 0.5) * std::exp(-base) * sum;
}

bool is_nonpositive_integer(std::complex<double> z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

}  // namespace

std::complex<double> gamma_cx(std::complex<double> z) {
    if (is_nonpositive_integer(z))
        throw std::domain_error("gamma_cx: pole at nonpositive integer argument");
    if (z.real() >= 0.5) return gamma_lanczos_halfplane(z);
    // Reflection: Gamma(z) = pi / (sin(pi z) Gamma(1-z)).
    return kPi / (std::sin(kPi * z) * gamma_lanczos_halfplane(1.0 - z));
}

std::complex<double> rgamma_cx(std::complex<double> z) {
    if (z.real() >= 0.5) return 1.0 / gamma_lanczos_halfplane(z);
    return std::sin(kPi * z) * gamma_lanczos_halfplane(1.0 - z) / kPi;
}

}  // namespace mvortho
