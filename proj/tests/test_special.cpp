#include <doctest.h>

#include <cmath>
#include <random>

#include "mvortho/special.hpp"

using namespace mvortho;

TEST_CASE("pochhammer examples") {
    CHECK(pochhammer_exact(ExactScalar(1), 0) == ExactScalar(1));
    CHECK(pochhammer_exact(ExactScalar(1), 4) == ExactScalar(24));
    CHECK(pochhammer_exact(ExactScalar(-2), 4) == ExactScalar(0));
}

TEST_CASE("pochhammer splitting identity (a)_{k+m} = (a)_k (a+k)_m") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7), kk(0, 8);
    for (int trial = 0; trial < 40; ++trial) {
        ExactScalar a(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
        unsigned k = kk(rng), m = kk(rng);
        ExactScalar lhs = pochhammer_exact(a, k + m);
        ExactScalar rhs = pochhammer_exact(a, k) * pochhammer_exact(a + ExactScalar((long)k), m);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("q-pochhammer examples and recurrence") {
    ExactScalar half(1, 2);
    CHECK(qpochhammer_exact(ExactScalar(5), half, 0) == ExactScalar(1));
    CHECK(qpochhammer_exact(ExactScalar(1), half, 3) == ExactScalar(0));
    CHECK(qpochhammer_exact(half, half, 2) == ExactScalar(3, 8));

    std::mt19937 rng(11);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 5), kk(0, 7);
    for (int trial = 0; trial < 40; ++trial) {
        ExactScalar a(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
        ExactScalar q(Rational(num(rng), den(rng)), 0);
        unsigned k = kk(rng);
        ExactScalar lhs = qpochhammer_exact(a, q, k + 1);
        ExactScalar rhs = (ExactScalar(1) - a * pow(q, k)) * qpochhammer_exact(a, q, k);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("q-pochhammer infinite product") {
    CHECK(qpochhammer_inf({0.0, 0.0}, {0.5, 0.0}) == std::complex<double>(1.0, 0.0));
    CHECK(qpochhammer_inf({1.0, 0.0}, {0.5, 0.0}).real() == doctest::Approx(0.0));
    double v = qpochhammer_inf({0.5, 0.0}, {0.5, 0.0}, 1e-17).real();
    CHECK(v == doctest::Approx(0.2887880951).epsilon(1e-9));
    CHECK_THROWS_AS(qpochhammer_inf({0.5, 0.0}, {1.0, 0.0}), std::domain_error);

    // result(a) = (1-a) * result(a q)
    for (double a : {0.3, -0.7, 0.9}) {
        std::complex<double> q(0.6, 0.0);
        auto lhs = qpochhammer_inf({a, 0.0}, q, 1e-14);
        auto rhs = (1.0 - a) * qpochhammer_inf(std::complex<double>(a, 0.0) * q, q, 1e-14);
        CHECK(std::abs(lhs - rhs) < 1e-13 * std::abs(lhs));
    }
}

TEST_CASE("complex gamma") {
    CHECK(gamma_cx({1.0, 0.0}).real() == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(gamma_cx({0.5, 0.0}).real() == doctest::Approx(1.7724538509055160).epsilon(1e-13));
    CHECK(gamma_cx({5.0, 0.0}).real() == doctest::Approx(24.0).epsilon(1e-13));
    CHECK_THROWS_AS(gamma_cx({0.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(gamma_cx({-3.0, 0.0}), std::domain_error);

    // Known value: |Gamma(i)|^2 = pi / sinh(pi)
    auto gi = gamma_cx({0.0, 1.0});
    CHECK(std::norm(gi) == doctest::Approx(M_PI / std::sinh(M_PI)).epsilon(1e-12));

    // Functional equation across the sampled range.
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> re(-20.0, 20.0), im(-20.0, 20.0);
    int tested = 0;
    while (tested < 100) {
        std::complex<double> z(re(rng), im(rng));
        if (std::abs(z) < 0.1 || std::abs(z) > 20.0) continue;
        if (z.imag() == 0.0 && z.real() <= 0.0) continue;
        if (std::abs(z.real() - std::round(z.real())) < 0.05 && z.real() < 0.5 &&
            std::abs(z.imag()) < 0.05)
            continue;  // stay away from poles
        auto ratio = gamma_cx(z + 1.0) / gamma_cx(z);
        CHECK(std::abs(ratio - z) <= 1e-10 * std::abs(z));
        ++tested;
    }
}

TEST_CASE("entire reciprocal gamma") {
    CHECK(rgamma_cx({0.0, 0.0}) == std::complex<double>(0.0, 0.0));
    CHECK(std::abs(rgamma_cx({-4.0, 0.0})) < 1e-14);
    CHECK(std::abs(rgamma_cx({3.0, 0.0}) - 0.5) < 1e-13);
    auto z = std::complex<double>(1.5, 2.5);
    CHECK(std::abs(rgamma_cx(z) * gamma_cx(z) - 1.0) < 1e-12);
}
