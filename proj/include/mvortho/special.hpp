#pragma once

#include <complex>

#include "mvortho/exact.hpp"

namespace mvortho {

/// (a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1.
ExactScalar pochhammer_exact(const ExactScalar& a, unsigned k);

/// (a;q)_k = (1-a)(1-aq)...(1-a q^{k-1}), with (a;q)_0 = 1.
ExactScalar qpochhammer_exact(const ExactScalar& a, const ExactScalar& q, unsigned k);

/// Truncated (a;q)_\infty: the product is cut once |a| |q|^M < tol,
/// giving a relative truncation error of order tol. Requires |q| < 1.
std::complex<double> qpochhammer_inf(std::complex<double> a, std::complex<double> q,
                                     double tol = 1e-15);

/// Complex gamma function (Lanczos), good to ~13 significant digits for
/// |z| <= 50 away from the poles. Throws std::domain_error at nonpositive
/// integer arguments.
std::complex<double> gamma_cx(std::complex<double> z);

/// Entire reciprocal 1/Gamma(z); returns exact zeros at z = 0, -1, -2, ...
std::complex<double> rgamma_cx(std::complex<double> z);

}  // namespace mvortho
