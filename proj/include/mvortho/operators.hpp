#pragma once

#include <vector>

#include "mvortho/family.hpp"
#include "mvortho/partition.hpp"
#include "mvortho/sympoly.hpp"

namespace mvortho {

/// E_r(x_1..x_n; y_r..y_n); y must have length n-r+1.
ExactScalar er_kernel(const std::vector<ExactScalar>& x, const std::vector<ExactScalar>& y, int r);

/// Exact eigenvalue E_{r,lambda}. For aw this is the rationalized variant
/// (the printed value times t^{r(n-1)-r(r-1)/2} (t0t1t2t3/q)^{r/2}), matching
/// the rationalized operator used by apply_difference_operator.
ExactScalar eigenvalue(const FamilyParams& params, int r, const Partition& lambda);

/// D_r f computed by exact point evaluation of the combinatorial sum followed
/// by interpolation over span. Requires support(f) within span and span a
/// dominance ideal; the j family supports r = 1 only. On a residual failure
/// the span is grown by one dominance layer and the expansion retried once.
SymPoly apply_difference_operator(const FamilyParams& params, int r, const SymPoly& f,
                                  const std::vector<Partition>& span);

}  // namespace mvortho
