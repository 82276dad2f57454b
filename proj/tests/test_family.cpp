#include <doctest.h>

#include "mvortho/family.hpp"

using namespace mvortho;

namespace {
ExactScalar r(long n, long d = 1) { return ExactScalar(n, d); }
}  // namespace

TEST_CASE("wilson hat parameters at nu_r = 1") {
    auto p = FamilyParams::wilson(2, r(1, 2), r(1), r(1), r(1), r(1));
    auto h = hat_parameters(p);
    CHECK(h.nuhat[0] == r(3, 2));
    CHECK(h.nuhat[1] == r(1, 2));
    CHECK(h.nuhat[2] == r(1, 2));
    CHECK(h.nuhat[3] == r(1, 2));
    // rho_j = (n-j) nu + (sum nu - 1)/2 ; rhohat_j = (n-j) nu + nu0
    CHECK(h.rho[0] == r(1, 2) + r(3, 2));
    CHECK(h.rho[1] == r(3, 2));
    CHECK(h.rhohat[0] == r(1, 2) + r(1));
    CHECK(h.rhohat[1] == r(1));
}

TEST_CASE("jacobi hat parameters") {
    auto p = FamilyParams::jacobi(1, r(0), r(1), r(1, 2));
    auto h = hat_parameters(p);
    CHECK(h.nuhat[0] == r(3, 4));
    CHECK(h.nuhat[1] == r(3, 4));
    CHECK(h.rho[0] == r(3, 4));
    CHECK(p.self_dual());
}

TEST_CASE("askey-wilson self-dual hat parameters fix that = t") {
    // q t0 = t1 t2 t3 with q=1/4, t0=1/2, t1=t2=t3=1/2
    auto p = FamilyParams::askey_wilson(2, r(1, 4), r(1, 3), r(1, 2), r(1, 2), r(1, 2), r(1, 2));
    REQUIRE(p.self_dual());
    auto h = hat_parameters(p);
    CHECK(h.self_dual);
    CHECK(h.that[0] == p.t0);
    CHECK(h.that[1] == p.t1);
    CHECK(h.that[2] == p.t2);
    CHECK(h.that[3] == p.t3);
    CHECK(h.s == p.t0);
    CHECK(h.tau[0] == p.t * p.t0);
    CHECK(h.tau[1] == p.t0);
    CHECK(h.tauhat == h.tau);
}

TEST_CASE("askey-wilson perfect-square radicand outside self-duality") {
    // t0 t1 t2 t3 / q = (1/2)(1/2)(1/8)(1/2)/(1/4) = 1/16, a perfect square,
    // but q t0 = 1/8 != t1 t2 t3 = 1/32.
    auto p = FamilyParams::askey_wilson(1, r(1, 4), r(1, 3), r(1, 2), r(1, 2), r(1, 8), r(1, 2));
    REQUIRE_FALSE(p.self_dual());
    auto h = hat_parameters(p);
    CHECK(h.s == r(1, 4));
    CHECK(h.that[0] == r(1, 4));
    // that_r tau_j = t^{n-j} t0 t_r must hold for the chosen branches
    for (int rr = 1; rr <= 3; ++rr) {
        const ExactScalar& tr = rr == 1 ? p.t1 : (rr == 2 ? p.t2 : p.t3);
        CHECK(h.that[rr] * h.tau[0] == p.t0 * tr);
    }
    // that products reproduce their defining squares
    CHECK(h.that[1] * h.that[1] == p.t0 * p.t1 / (p.t2 * p.t3) * p.q);
    CHECK(h.that[0] * h.that[1] * h.that[2] * h.that[3] / p.q == p.t0 * p.t0);
}

TEST_CASE("askey-wilson non-square radicand is rejected") {
    auto p = FamilyParams::askey_wilson(1, r(1, 3), r(1, 3), r(1, 2), r(1, 3), r(1, 5), r(1, 7));
    REQUIRE_FALSE(p.self_dual());
    CHECK_THROWS_AS(hat_parameters(p), std::domain_error);
}

TEST_CASE("self-duality flags") {
    CHECK(FamilyParams::wilson(1, r(0), r(3, 2), r(1, 2), r(3, 4), r(5, 4)).self_dual());
    CHECK_FALSE(FamilyParams::wilson(1, r(0), r(1), r(1), r(1), r(1)).self_dual());
    // nu0p - nu1p - nu0m - nu1m + 1 = 0 with conjugate pairs
    auto i = ExactScalar::make_i();
    auto ch = FamilyParams::cont_hahn(2, r(1, 2), r(1), r(1, 2) + i * r(1, 3), r(1),
                                      r(1, 2) - i * r(1, 3));
    CHECK(ch.self_dual());
    auto hch = hat_parameters(ch);
    // nuhat0 = (1 + 1 + (1/2+i/3) + (1/2-i/3) - 1)/2 = 1
    CHECK(hch.nuhat[0] == r(1));
    // rhohat_j = (n-j) nu + nu0p for ch
    CHECK(hch.rhohat[0] == r(1, 2) + ch.nu0p);
    CHECK(hch.rhohat[1] == ch.nu0p);
}
