#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mvortho/family.hpp"
#include "mvortho/partition.hpp"
#include "mvortho/polynomials.hpp"

namespace mvortho {

struct VerificationReport {
    std::string identity;
    Family family = Family::j;
    int r = 0;
    Partition lambda, mu;
    bool pass = false;
    bool self_dual = false;
    bool condition_met = true;
    std::vector<std::pair<Partition, ExactScalar>> residual_terms;
    std::string note;
};

/// The symmetric function Ehat_r multiplying P_lambda on the left-hand side
/// of the r-th recurrence relation, as an exact coefficient map.
SymPoly ehat_poly(const FamilyParams& params, int r);

/// Evaluation point for the recurrence coefficient functions: rho + lambda,
/// stored additively for w/ch/j and multiplicatively (q^{rho_j+lambda_j} =
/// tau_j q^{lambda_j}) for aw.
struct RecPoint {
    std::vector<ExactScalar> v;
};

RecPoint rho_lambda_point(const FamilyParams& params, const Partition& lambda);
RecPoint point_negate(const FamilyParams& params, const RecPoint& x);
RecPoint point_add_omega(const FamilyParams& params, const RecPoint& x, int r);

/// Vhat_{{1..r},{r+1..n}}(x) with all signs positive.
ExactScalar vhat_block(const FamilyParams& params, int r, const RecPoint& x);

/// Uhat_{J^c, r-|J|}(rho+lambda) * Vhat_{eps J, J^c}(rho+lambda).
ExactScalar pieri_coefficient(const FamilyParams& params, int r, const Partition& lambda,
                              const SignedIndexSet& eps_j);

/// Expands Ehat_r P_lambda - sum of coefficients times P_{lambda+e_{eps J}}
/// and reports the residual; PASS iff identically zero. The family's stated
/// parameter condition is enforced unless override_condition is set.
VerificationReport verify_recurrence(const FamilyParams& params, int r, const Partition& lambda,
                                     bool override_condition = false);

/// Left side: p_lambda at the family's special point. Right side: prefactor
/// times the DeltaHat_+ ratio in telescoped Pochhammer form.
std::pair<ExactScalar, ExactScalar> specialization_value(const FamilyParams& params,
                                                         const Partition& lambda);

VerificationReport specialization_check(const FamilyParams& params, const Partition& lambda);

/// P_lambda at the mu-shifted dual point against P-hat_mu at the
/// lambda-shifted point (aw and w families).
VerificationReport duality_check(const FamilyParams& params, const Partition& lambda,
                                 const Partition& mu);

/// DeltaHat_{+-}(rho+lambda)/DeltaHat_{+-}(rho) through finite telescoped
/// products of vhat/what.
struct DeltaHatRatio {
    Family family;
    Partition lambda;
    ExactScalar plus_ratio;
    ExactScalar minus_ratio;
};
DeltaHatRatio delta_hat_ratios(const FamilyParams& params, const Partition& lambda);

/// <p_lambda, p_lambda> / <1, 1> exactly.
ExactScalar norm_ratio_exact(const FamilyParams& params, const Partition& lambda);

}  // namespace mvortho
