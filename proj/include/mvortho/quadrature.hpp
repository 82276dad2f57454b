#pragma once

#include <complex>
#include <vector>

#include "mvortho/family.hpp"
#include "mvortho/sympoly.hpp"

namespace mvortho {

/// Numeric grid: midpoint tensor rule on the period cube for aw/j, composite
/// Gauss-Legendre panels on [-radius, radius]^n for w/ch.
struct GridSpec {
    int npoints = 256;      // per dimension (aw/j); a power of two
    double radius = 40.0;   // truncation radius L (w/ch)
    int panels = 10;        // Gauss-Legendre panels per dimension (w/ch)
    int panel_order = 32;   // nodes per panel
    double qtol = 1e-15;    // q-product truncation tolerance
};

/// Weight density at one point (alpha = 1). Parameters must lie in the
/// analytic domain; the value is real and nonnegative up to a 1e-10 relative
/// imaginary residue, which is asserted.
double weight_value(const FamilyParams& params, const std::vector<double>& x,
                    double qtol = 1e-15);

/// Float value of an exact symmetric polynomial at a real coordinate vector.
std::complex<double> eval_float(const SymPoly& f, const std::vector<double>& x);

/// integral of f conj(g) Delta over the family's domain.
std::complex<double> inner_product_numeric(const FamilyParams& params, const SymPoly& f,
                                           const SymPoly& g, const GridSpec& grid);

struct GramEntry {
    Partition a, b;
    std::complex<double> value;   // <p_a, p_b>
    double normalized;            // |<p_a,p_b>| / (|p_a| |p_b|), a != b
};

struct OrthoReport {
    Family family = Family::j;
    Partition lambda_max;
    std::vector<GramEntry> entries;
    double constant_term = 0.0;       // <1,1>
    double convergence_delta = 0.0;   // relative change of <1,1> on N -> 2N
    double min_weight_sample = 0.0;
    double max_offdiag = 0.0;
    double max_ratio_defect = 0.0;    // vs norm_ratio_exact, when available
    bool ratio_checked = false;
    bool pass = false;
    double offdiag_tol = 1e-8;
    double ratio_tol = 1e-6;
};

/// Gram matrix of {p_mu : mu <= lambda_max} under the numeric inner product,
/// with off-diagonal defects and exact-vs-numeric norm-ratio defects.
OrthoReport orthogonality_report(const FamilyParams& params, const Partition& lambda_max,
                                 const GridSpec& grid);

}  // namespace mvortho
