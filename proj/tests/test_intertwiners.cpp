#include <doctest.h>

#include <cmath>

#include "vf21/elliptic.hpp"
#include "vf21/identity.hpp"
#include "vf21/intertwiners.hpp"

using namespace vf21;

TEST_CASE("tau components") {
    ModelParams p = ModelParams::from_x(0.3, 6.0);
    const double u = 0.3;
    const long long k = 2;
    const Vec2 up = tau(u, k, k + 1, p);
    CHECK(up[0] == doctest::Approx(h_func(3, 2 * p.r, k - u, p) / std::sqrt(2.0)));
    CHECK(up[1] == doctest::Approx(h_func(4, 2 * p.r, k - u, p) / std::sqrt(2.0)));
    const Vec2 dn = tau(u, k, k - 1, p);
    CHECK(dn[0] == doctest::Approx(h_func(3, 2 * p.r, k + u, p) / std::sqrt(2.0)));
    CHECK_THROWS_AS(tau(u, k, k + 2, p), domain_error);
}

TEST_CASE("fused vector structure") {
    ModelParams p = ModelParams::from_x(0.3, 6.5);
    const double u = 0.25;
    const long long k = 3;
    // middle component of t(u)^k_{k+-2} carries 2 h4(1) h4(k -+ u +- 1/2)
    const Vec3 tp = t_fused(u, k, k + 2, p);
    const double pref = 1.0 / (2.0 * h_func(1, p.r, u + 0.5, p));
    CHECK(tp[1] ==
          doctest::Approx(pref * 2.0 * h_func(4, p.r, 1.0, p) *
                          h_func(4, p.r, k - u + 0.5, p)).epsilon(1e-13));
    // middle of t(u)^k_k vanishes only with h4(k) h4(u+1/2)
    const Vec3 tm = t_fused(u, k, k, p);
    CHECK(tm[1] == doctest::Approx(pref * 2.0 * h_func(4, p.r, double(k), p) *
                                   h_func(4, p.r, u + 0.5, p)).epsilon(1e-13));
}

TEST_CASE("inversion relations") {
    SuiteConfig cfg;
    cfg.samples = 30;
    cfg.seed = 5;
    for (const auto& rep : check_inversion(cfg)) CHECK(rep.residual < rep.tolerance);
    // shifted variant used by the S-matrix relations
    ModelParams p = ModelParams::from_x(0.3, 7.5);
    const double u = 0.3;
    const long long k = 4;
    for (long long kp : {k - 2, k, k + 2})
        for (long long kpp : {k - 2, k, k + 2}) {
            const Vec3 s = t_star(u, k, kp, p, 2);
            const Vec3 t = t_fused(u, k, kpp, p, 2);
            const double v = s[0] * t[0] + s[1] * t[1] + s[2] * t[2];
            CHECK(std::abs(v - (kp == kpp ? 1.0 : 0.0)) < 1e-10);
        }
}

TEST_CASE("l_op routes agree") {
    SuiteConfig cfg;
    cfg.samples = 30;
    cfg.seed = 5;
    for (const auto& rep : check_lop_inverse(cfg)) CHECK(rep.residual < rep.tolerance);
    for (const auto& rep : check_lop_cross_route(cfg)) CHECK(rep.residual < rep.tolerance);
}

TEST_CASE("l_op_explicit pattern zeros and poles") {
    ModelParams p = ModelParams::from_x(0.3, 7.3);
    // numerator binomial zero: pattern (k', k'+2; k, k-2) vanishes when the
    // [u0 + (k+k'+1)/2; 2] factor hits a bracket zero
    const long long k = 6, kp = 6;
    // [(k - k')/2; 2] = [0][.]/..; the (k'=k) same-direction corner is zero
    CHECK(std::abs(l_op_explicit(kp, kp + 2, k, k - 2, 0.8, p)) < 1e-12);
    // simple poles only at u0 = +-1/2
    CHECK_THROWS_AS(l_op_explicit(4, 6, 6, 6, 0.5 + 1e-15, p), pole_error);
}

TEST_CASE("l_dprime matches the shifted displays") {
    ModelParams p = ModelParams::from_x(0.3, 7.3);
    const double v = 0.8;
    for (long long l : {3, 5}) {
        auto R = [&](double a) { return br(a, p, 2); };
        const double lhs1 = l_dprime(l - 2, l, l, l, v, p);
        const double rhs1 = R(2.0) * R(v + l - 0.5) / (R(l + 1.0) * R(v + 0.5));
        CHECK(lhs1 == doctest::Approx(rhs1).epsilon(1e-11));
        const double lhs2 = l_dprime(l - 2, l, l + 2, l, v, p);
        const double rhs2 = R(1.0) * R(2.0) * R(v + l - 0.5) * R(v + l + 0.5) /
                            (R(l + 1.0) * R(l + 2.0) * R(v - 0.5) * R(v + 0.5));
        CHECK(lhs2 == doctest::Approx(rhs2).epsilon(1e-11));
        // vanishing at the numerator zero u0 - u = 1/2 - l
        const double z = l_dprime(l - 2, l, l, l, 0.5 - double(l) + p.r - 2.0, p);
        CHECK(std::abs(z) < 1e-8);
    }
}

TEST_CASE("residue degeneracy") {
    SuiteConfig cfg;
    cfg.samples = 10;
    cfg.seed = 5;
    for (const auto& rep : check_residue_degeneracy(cfg)) CHECK(rep.residual < rep.tolerance);
}
