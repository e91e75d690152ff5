#include <doctest.h>

#include <cmath>

#include "vf21/identity.hpp"
#include "vf21/vertex_weights.hpp"

using namespace vf21;

namespace {

double max_abs(const WeightTensor& T) {
    double m = 0.0;
    for (double v : T.data) m = std::max(m, std::abs(v));
    return m;
}

} // namespace

TEST_CASE("kappa_bar normalization") {
    ModelParams p = default_params();
    CHECK(kappa_bar(1e-14, p) == doctest::Approx(1.0).epsilon(1e-10));
    // cutoff doubling leaves the value unchanged
    ModelParams p2 = p;
    p2.product_cutoff = 120;
    const double a = kappa_bar(0.5, p);
    const double b = kappa_bar(0.5, p2);
    CHECK(a == doctest::Approx(b).epsilon(1e-12));
    // inversion z -> 1/z flips the product ratio
    CHECK(kappa_bar(0.5, p) * kappa_bar(-0.5, p) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("r8v structure") {
    ModelParams p = default_params();
    // u = 0 is the permutation
    const WeightTensor R0 = r8v(1e-13, p);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d)
                    CHECK(R0.at(a, b, c, d) ==
                          doctest::Approx((a == d && b == c) ? 1.0 : 0.0).epsilon(1e-9));
    // spin-flip symmetry
    const WeightTensor R = r8v(0.37, p);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d)
                    CHECK(R.at(a, b, c, d) ==
                          doctest::Approx(R.at(1 - a, 1 - b, 1 - c, 1 - d)).epsilon(1e-13));
}

TEST_CASE("r21v_table structure") {
    ModelParams p = default_params();
    const WeightTensor R0 = r21v_table(0.0, p);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int d = 0; d < 3; ++d)
                    CHECK(std::abs(R0.at(a, b, c, d) - ((a == d && b == c) ? 1.0 : 0.0)) <
                          1e-9);
    // twenty-one structurally non-zero entries
    const WeightTensor R = r21v_table(0.37, p);
    CHECK(structural_nonzeros(R) == 21);
    // charge conservation mod 4 over all 81 entries
    const int s_of[3] = {1, 0, -1};
    const WeightTensor R4 = r21v_table(0.4, p);
    for (int o1 = 0; o1 < 3; ++o1)
        for (int o2 = 0; o2 < 3; ++o2)
            for (int i1 = 0; i1 < 3; ++i1)
                for (int i2 = 0; i2 < 3; ++i2)
                    if (std::abs(R4.at(o1, o2, i1, i2)) > 1e-13 * max_abs(R4)) {
                        const int diff = s_of[i1] + s_of[i2] - s_of[o1] - s_of[o2];
                        CHECK(((diff % 4) + 4) % 4 == 0);
                    }
}

TEST_CASE("r21v_fused structure") {
    ModelParams p = default_params();
    const WeightTensor R0 = r21v_fused(0.0, p);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int d = 0; d < 3; ++d)
                    CHECK(R0.at(a, b, c, d) == ((a == d && b == c) ? 1.0 : 0.0));
    // entries real and finite across the principal band; spin-flip symmetric
    for (double u : {0.1, 0.37, 0.63, 0.9}) {
        const WeightTensor R = r21v_fused(u, p);
        for (double v : R.data) CHECK(std::isfinite(v));
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                for (int c = 0; c < 3; ++c)
                    for (int d = 0; d < 3; ++d)
                        CHECK(R.at(a, b, c, d) ==
                              doctest::Approx(R.at(2 - a, 2 - b, 2 - c, 2 - d))
                                  .epsilon(1e-11));
    }
}

TEST_CASE("fusion projector at u = 1") {
    for (const auto& pt : {std::pair{0.3, 4.5}, {0.2, 5.0}, {0.45, 6.0}}) {
        ModelParams p = ModelParams::from_x(pt.first, pt.second);
        const WeightTensor R1 = r21v_table(1.0, p);
        const auto res = projector_residuals(R1);
        // the u = 1 degeneration satisfies P R(1) = +R(1) for the spin-1 matrix
        CHECK(res[0] < 1e-10);
        // spin-flip conjugation leaves the residual unchanged
        WeightTensor Rf = R1;
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                for (int c = 0; c < 3; ++c)
                    for (int d = 0; d < 3; ++d)
                        Rf.at(a, b, c, d) = R1.at(2 - a, 2 - b, 2 - c, 2 - d);
        const auto res2 = projector_residuals(Rf);
        CHECK(res2[0] == doctest::Approx(res[0]).epsilon(1e-9));
    }
    // for the spin-1/2 matrix the sign is the stated minus
    ModelParams p = default_params();
    const WeightTensor R8 = r8v(1.0 - 1e-9, p);
    const auto res8 = projector_residuals(R8);
    CHECK(res8[1] < 1e-6);
}

TEST_CASE("s21v is the shifted negation") {
    ModelParams p = ModelParams::from_x(0.3, 6.5);
    const WeightTensor S = s21v_table(0.4, p);
    const WeightTensor R = r21v_table(0.4, p.shifted(2));
    for (size_t i = 0; i < S.size(); ++i) CHECK(S.data[i] == doctest::Approx(-R.data[i]));
    const WeightTensor Sf = s21v_fused(0.4, p);
    const WeightTensor Rf = r21v_fused(0.4, p.shifted(2));
    for (size_t i = 0; i < Sf.size(); ++i) CHECK(Sf.data[i] == doctest::Approx(-Rf.data[i]));
}

TEST_CASE("r18v charge rule") {
    ModelParams p = default_params();
    const WeightTensor R = r18v(0.3, p);
    const int s_of[3] = {1, 0, -1};
    const int e_of[2] = {1, -1};
    for (int eo = 0; eo < 2; ++eo)
        for (int so = 0; so < 3; ++so)
            for (int ei = 0; ei < 2; ++ei)
                for (int si = 0; si < 3; ++si)
                    if (std::abs(R.at(eo, so, ei, si)) > 1e-13 * max_abs(R)) {
                        const int diff = e_of[ei] + 2 * s_of[si] - e_of[eo] - 2 * s_of[so];
                        CHECK(((diff % 4) + 4) % 4 == 0);
                    }
    CHECK(structural_nonzeros(R) == 18);
}
