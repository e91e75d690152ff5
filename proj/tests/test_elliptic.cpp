#include <doctest.h>

#include <cmath>

#include "vf21/elliptic.hpp"
#include "vf21/identity.hpp"

using namespace vf21;

TEST_CASE("theta_char basics") {
    ModelParams p = default_params();
    // theta_1 is odd: zero at u = 0, antisymmetric in u
    const cplx tau(0.0, 0.5);
    CHECK(std::abs(jtheta(1, cplx(0.0), tau, p)) < 1e-12);
    const cplx a = jtheta(1, cplx(0.23), tau, p);
    const cplx b = jtheta(1, cplx(-0.23), tau, p);
    CHECK(std::abs(a + b) < 1e-12 * std::abs(a));
    // theta_2(0) nonzero real
    const cplx t2 = jtheta(2, cplx(0.0), tau, p);
    CHECK(t2.real() > 0.0);
    CHECK(std::abs(t2.imag()) < 1e-12 * t2.real());
    CHECK_THROWS_AS(jtheta(5, cplx(0.0), tau, p), domain_error);
    CHECK_THROWS_AS(jtheta(3, cplx(0.1), cplx(0.3, -0.2), p), domain_error);
}

TEST_CASE("theta_char against brute-force partial sum") {
    ModelParams p = default_params();
    const cplx tau(0.0, 0.5);
    const double u = 0.2;
    // direct 200-term summation of the defining series
    cplx s = 0.0;
    for (int m = -200; m <= 200; ++m) {
        const cplx ipi(0.0, 3.14159265358979323846);
        s += std::exp(ipi * double(m) * (double(m) * tau + 2.0 * u));
    }
    const cplx v = theta_char(0.0, 0.0, cplx(u), tau, p);
    CHECK(std::abs(v - s) < 1e-12 * std::abs(s));
    // theta_4 at another point
    cplx s4 = 0.0;
    const cplx tau4(0.0, 0.7);
    for (int m = -200; m <= 200; ++m) {
        const cplx ipi(0.0, 3.14159265358979323846);
        s4 += std::exp(ipi * double(m) * (double(m) * tau4 + 2.0 * (0.3 + 0.5)));
    }
    CHECK(std::abs(jtheta(4, cplx(0.3), tau4, p) - s4) < 1e-12 * std::abs(s4));
}

TEST_CASE("triple product routes agree") {
    ModelParams p = default_params();
    CHECK(std::abs(theta_q(1.0, 0.3, p)) < 1e-14);        // (1;q) factor vanishes
    CHECK(std::abs(theta_q(0.1, 0.1, p)) < 1e-14);        // z = q
    const double a = theta_q(0.5, 0.1, p);
    const double b = theta_q_sum(0.5, 0.1, p);
    CHECK(std::abs(a - b) < 1e-12 * std::abs(b));
    CHECK_THROWS_AS(theta_q(0.5, 1.2, p), domain_error);
}

TEST_CASE("qpoch_multi") {
    ModelParams p = default_params();
    CHECK(qpoch_multi(0.0, {0.2}, p) == 1.0);
    // single base recursion (z;q) = (1-z)(zq;q)
    const double z = 0.3, q = 0.2;
    CHECK(qpoch_multi(z, {q}, p) ==
          doctest::Approx((1 - z) * qpoch_multi(z * q, {q}, p)).epsilon(1e-14));
    // double base vs direct double loop
    double direct = 1.0;
    for (int i = 0; i < 60; ++i)
        for (int j = 0; j < 60; ++j) direct *= (1.0 - 0.3 * std::pow(0.2, i) * std::pow(0.2, j));
    CHECK(qpoch_multi(0.3, {0.2, 0.2}, p) == doctest::Approx(direct).epsilon(1e-12));
    CHECK_THROWS_AS(qpoch_multi(0.3, {1.2}, p), domain_error);
}

TEST_CASE("bracket symmetries") {
    ModelParams p = default_params();
    CHECK(std::abs(br(0.0, p)) < 1e-13);
    SplitMix64 rng(7);
    for (int i = 0; i < 50; ++i) {
        const double u = rng.uniform(-3.0, 3.0);
        const double scale = std::abs(br(u, p)) + 1.0;
        CHECK(std::abs(br(-u, p) + br(u, p)) < 1e-12 * scale);               // parity
        CHECK(std::abs(br(u + p.r, p) + br(u, p)) < 1e-10 * scale);          // quasi-period
        CHECK(std::abs(br(p.r - u, p) - br(u, p)) < 1e-10 * scale);          // reflection
    }
    // zeros at integer multiples of r
    double scale = 0.0;
    for (int i = 1; i <= 5; ++i) scale = std::max(scale, std::abs(br(0.4 * i, p)));
    for (int n = -2; n <= 2; ++n)
        CHECK(std::abs(br(n * p.r, p)) < 1e-10 * scale);
}

TEST_CASE("h function product route equals series route") {
    ModelParams p = default_params();
    // stated closed form at t = r: h1(u) = sqrt(eps r / pi) e^{-eps r/4} [u]
    const double u = 0.37;
    const double h1 = h_func(1, p.r, u, p);
    const double closed = std::sqrt(p.epsilon * p.r / 3.14159265358979323846) *
                          std::exp(-p.epsilon * p.r / 4.0) * br(u, p);
    CHECK(h1 == doctest::Approx(closed).epsilon(1e-14));
    CHECK(std::abs(h_func(1, 2.0 * p.r, 0.0, p)) < 1e-13);
    SplitMix64 rng(11);
    for (int i = 0; i < 100; ++i) {
        const int j = 1 + int(rng.next() % 4);
        const double t = (rng.next() % 2 ? 1.0 : 2.0) * p.r;
        const double uu = rng.uniform(-2.0, 3.0);
        const double a = h_func(j, t, uu, p);
        const double b = h_func_series(j, t, uu, p);
        CHECK(std::abs(a - b) <= 1e-10 * std::max(std::abs(b), 1e-6));
    }
}

TEST_CASE("bracket binomial") {
    ModelParams p = default_params();
    CHECK(bracket_binom(1.7, 0, p) == 1.0);
    CHECK(bracket_binom(2.0, 2, p) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(bracket_binom(2.0 - 0.0, 2, p) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(bracket_binom(1.0, -1, p), domain_error);
}
