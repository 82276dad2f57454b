#pragma once

#include <optional>

#include "mvortho/family.hpp"
#include "mvortho/operators.hpp"

namespace mvortho {

struct OrthoPoly {
    FamilyParams params;
    Partition lambda;
    SymPoly monic;  // leading coefficient 1, support within ideal(lambda)
    // c_lambda with P_lambda = c_lambda * p_lambda; absent when the hat
    // parameters require square roots outside Q(i) (generic aw parameters).
    std::optional<ExactScalar> cnorm;
};

/// The unique monic eigenvector of D_1 on ideal(lambda), obtained by
/// back-substitution down the linear extension. Throws on an eigenvalue
/// collision E_mu = E_lambda (non-generic parameters).
OrthoPoly build_monic(const FamilyParams& params, const Partition& lambda);

/// n = 1 reference polynomial from the terminating (basic) hypergeometric
/// series, rewritten exactly into the family's m-basis.
SymPoly onevar_reference(const FamilyParams& params, int l);

/// c_lambda through the finite Pochhammer ratio forms.
ExactScalar renorm_constant(const FamilyParams& params, const Partition& lambda);

/// c_lambda * p_lambda.
SymPoly renormalized(const FamilyParams& params, const Partition& lambda);

}  // namespace mvortho
