#pragma once

#include <vector>

#include "mvortho/exact.hpp"

namespace mvortho {

/// Solves the square system A x = b exactly. Returns false when A is
/// singular. Uses fraction-free (Bareiss) elimination over the Gaussian
/// integers after clearing denominators row by row.
bool solve_exact(std::vector<std::vector<ExactScalar>> a, std::vector<ExactScalar> b,
                 std::vector<ExactScalar>& x);

}  // namespace mvortho
