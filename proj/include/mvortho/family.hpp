#pragma once

#include <array>
#include <string>
#include <vector>

#include "mvortho/exact.hpp"
#include "mvortho/sympoly.hpp"

namespace mvortho {

enum class Family { aw, w, ch, j };

std::string family_name(Family f);
Family family_from_name(const std::string& s);

/// Concrete exact parameter set for one family.
///   aw : q, t, t0..t3
///   w  : nu, nu0..nu3
///   ch : nu, nu0p, nu1p, nu0m, nu1m
///   j  : nu, nu0, nu1
struct FamilyParams {
    Family family = Family::j;
    int n = 1;

    ExactScalar q, t, t0, t1, t2, t3;
    ExactScalar nu, nu0, nu1, nu2, nu3;
    ExactScalar nu0p, nu1p, nu0m, nu1m;

    static FamilyParams askey_wilson(int n, ExactScalar q, ExactScalar t, ExactScalar t0,
                                     ExactScalar t1, ExactScalar t2, ExactScalar t3);
    static FamilyParams wilson(int n, ExactScalar nu, ExactScalar nu0, ExactScalar nu1,
                               ExactScalar nu2, ExactScalar nu3);
    static FamilyParams cont_hahn(int n, ExactScalar nu, ExactScalar nu0p, ExactScalar nu1p,
                                  ExactScalar nu0m, ExactScalar nu1m);
    static FamilyParams jacobi(int n, ExactScalar nu, ExactScalar nu0, ExactScalar nu1);

    VariableKind kind() const;

    /// qt0 = t1t2t3 (aw), nu0-nu1-nu2-nu3+1 = 0 (w), the cH analogue, or
    /// unconditionally true (j).
    bool self_dual() const;
};

/// Dependent parameters entering the recurrence coefficients, the
/// renormalization constants and the norm formulas.
struct HatParams {
    bool self_dual = false;

    // aw only: s = (t0 t1 t2 t3 / q)^{1/2} and that[r], plus the spectral
    // vectors tau_j = t^{n-j} s and tauhat_j = t^{n-j} t0.
    ExactScalar s;
    std::array<ExactScalar, 4> that;
    std::vector<ExactScalar> tau, tauhat;

    // additive families: nuhat (4 for w/ch, 2 for j), rho and rhohat vectors.
    std::vector<ExactScalar> nuhat;
    std::vector<ExactScalar> rho, rhohat;
};

/// Derives the hat parameters. For aw the radicand t0t1t2t3/q must be a
/// perfect square in Q(i) unless the self-duality condition holds (then
/// that_r = t_r and s = t0). Throws std::domain_error naming the offending
/// product otherwise.
HatParams hat_parameters(const FamilyParams& p);

/// Same family with every parameter conjugated. For ch with conjugate-pair
/// parameters this swaps the +/- sets.
FamilyParams conj_params(const FamilyParams& p);

}  // namespace mvortho
