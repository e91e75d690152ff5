#include "vf21/intertwiners.hpp"

#include <cmath>

#include "vf21/elliptic.hpp"

namespace vf21 {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
}

Vec2 tau(double u, long long k, long long k_prime, const ModelParams& p) {
    if (std::llabs(k - k_prime) != 1) throw domain_error("tau: need |k - k'| = 1");
    const double arg = (k_prime == k + 1) ? (k - u) : (k + u);
    const double R = 2.0 * p.r;
    return {kInvSqrt2 * h_func(3, R, arg, p), kInvSqrt2 * h_func(4, R, arg, p)};
}

Vec3 t_fused(double u, long long k, long long k_prime, const ModelParams& p0, int shift) {
    const ModelParams p = p0.shifted(shift);
    const double r = p.r;
    const double R = 2.0 * r;
    auto H1 = [&](double a) { return h_func(1, r, a, p); };
    auto H3 = [&](double a) { return h_func(3, R, a, p); };
    auto H4r = [&](double a) { return h_func(4, r, a, p); };
    auto H4 = [&](double a) { return h_func(4, R, a, p); };
    const double pref = 1.0 / (2.0 * guard_denominator(H1(u + 0.5), 1.0, "h1(u+1/2)"));
    const long long dk = k_prime - k;
    if (dk == 2 || dk == -2) {
        const int sg = dk > 0 ? 1 : -1;
        const double a = k - sg * u;
        return {pref * H3(a + sg * 1.5) * H3(a - sg * 0.5),
                pref * 2.0 * H4r(1.0) * H4r(a + sg * 0.5),
                pref * H4(a + sg * 1.5) * H4(a - sg * 0.5)};
    }
    if (dk == 0) {
        return {pref * H3(k - u - 0.5) * H3(k + u + 0.5),
                pref * 2.0 * H4r(static_cast<double>(k)) * H4r(u + 0.5),
                pref * H4(k - u - 0.5) * H4(k + u + 0.5)};
    }
    throw domain_error("t_fused: need k' in {k, k+-2}");
}

Vec3 t_star(double u, long long k, long long k_prime, const ModelParams& p0, int shift) {
    const ModelParams p = p0.shifted(shift);
    const double r = p.r;
    const double R = 2.0 * r;
    auto H1 = [&](double a) { return h_func(1, r, a, p); };
    auto H3 = [&](double a) { return h_func(3, R, a, p); };
    auto H4r = [&](double a) { return h_func(4, r, a, p); };
    auto H4 = [&](double a) { return h_func(4, R, a, p); };
    const double kk = static_cast<double>(k);
    const long long dk = k_prime - k;
    if (dk == 2 || dk == -2) {
        const int sg = dk > 0 ? 1 : -1;
        const double a = kk + sg * u + sg * 0.5;
        const double den = 2.0 * guard_denominator(H1(u - 0.5), 1.0, "h1(u-1/2)") *
                           guard_denominator(H1(kk), 1.0, "h1(k)") *
                           guard_denominator(H1(kk + sg), 1.0, "h1(k+-1)");
        return {H4(a) * H4(a) / den, -H3(a) * H4(a) / den, H3(a) * H3(a) / den};
    }
    if (dk == 0) {
        const double den = 2.0 * guard_denominator(H1(u - 0.5), 1.0, "h1(u-1/2)") *
                           guard_denominator(H1(kk), 1.0, "h1(k)") *
                           guard_denominator(H1(kk - 1.0), 1.0, "h1(k-1)") *
                           guard_denominator(H1(kk + 1.0), 1.0, "h1(k+1)");
        const double wm = H1(kk - 1.0);
        const double wp = H1(kk + 1.0);
        const double c1 = -(wm * H4(kk + u + 0.5) * H4(kk - u + 1.5) +
                            wp * H4(kk - u - 0.5) * H4(kk + u - 1.5)) / den;
        const double c0 = H4r(u - 0.5) * (wm * H4r(kk + 1.0) + wp * H4r(kk - 1.0)) / den;
        const double cm = -(wm * H3(kk + u + 0.5) * H3(kk - u + 1.5) +
                            wp * H3(kk - u - 0.5) * H3(kk + u - 1.5)) / den;
        return {c1, c0, cm};
    }
    throw domain_error("t_star: need k' in {k, k+-2}");
}

double l_op_sum(long long a0p, long long a1p, long long a0, long long a1, double u0,
                const ModelParams& p, int shift) {
    const Vec3 ts = t_star(-u0, a0, a1, p, shift);
    const Vec3 tv = t_fused(-u0, a0p, a1p, p, shift);
    return ts[0] * tv[0] + ts[1] * tv[1] + ts[2] * tv[2];
}

double l_op_explicit(long long kp, long long kp2, long long k, long long k2, double u0,
                     const ModelParams& p, int shift) {
    if ((k - kp) % 2 != 0) throw domain_error("l_op_explicit: k - k' must be even");
    auto R = [&](double v) { return br(v, p, shift); };
    auto B2 = [&](double v) { return bracket_binom(v, 2, p, shift); };
    const double K = static_cast<double>(k), Kp = static_cast<double>(kp);
    const long long dk2 = k2 - k, dkp2 = kp2 - kp;
    const double scale = R(1.0);

    if (dkp2 == -2 && dk2 == -2)
        return B2((K + Kp) / 2) * B2(u0 + (K - Kp + 1) / 2) /
               (guard_denominator(B2(K), 1.0, "[k;2]") *
                guard_denominator(B2(u0 + 0.5), 1.0, "[u0+1/2;2]"));
    if (dkp2 == 2 && dk2 == 2)
        return B2(-(K + Kp) / 2) * B2(u0 - (K - Kp - 1) / 2) /
               (guard_denominator(B2(-K), 1.0, "[-k;2]") *
                guard_denominator(B2(u0 + 0.5), 1.0, "[u0+1/2;2]"));
    if (dkp2 == 2 && dk2 == -2)
        return B2((K - Kp) / 2) * B2(u0 + (K + Kp + 1) / 2) /
               (guard_denominator(B2(K), 1.0, "[k;2]") *
                guard_denominator(B2(u0 + 0.5), 1.0, "[u0+1/2;2]"));
    if (dkp2 == -2 && dk2 == 2)
        return B2(-(K - Kp) / 2) * B2(u0 - (K + Kp - 1) / 2) /
               (guard_denominator(B2(-K), 1.0, "[-k;2]") *
                guard_denominator(B2(u0 + 0.5), 1.0, "[u0+1/2;2]"));
    const double du = guard_denominator(R(u0 + 0.5), scale, "[u0+1/2]") *
                      guard_denominator(R(u0 - 0.5), scale, "[u0-1/2]");
    if ((dkp2 == 2 || dkp2 == -2) && dk2 == 0) {
        const int sg = dkp2 > 0 ? 1 : -1;
        return R((K + Kp) / 2) * R((K - Kp) / 2) * R(u0 + sg * (K + Kp + sg) / 2) *
               R(u0 + sg * (Kp - K + sg) / 2) /
               (guard_denominator(R(K + 1), scale, "[k+1]") *
                guard_denominator(R(K - 1), scale, "[k-1]") * du) *
               R(2.0) / R(1.0);
    }
    if (dkp2 == 0 && (dk2 == 2 || dk2 == -2)) {
        const int sg = dk2 > 0 ? 1 : -1;
        return R((K + Kp) / 2) * R((K - Kp) / 2) * R(u0 - sg * (K + Kp + sg) / 2) *
               R(u0 - sg * (K - Kp + sg) / 2) /
               (guard_denominator(R(K), scale, "[k]") *
                guard_denominator(R(K + sg), scale, "[k+-1]") * du);
    }
    // (k', k'; k, k)
    return R((K + Kp) / 2) * R((K + Kp) / 2 - 1) * R(u0 + (K - Kp - 1) / 2) *
               R(u0 - (K - Kp - 1) / 2) /
               (guard_denominator(R(K), scale, "[k]") *
                guard_denominator(R(K - 1), scale, "[k-1]") * du) +
           R((K - Kp) / 2) * R((K - Kp) / 2 + 1) * R(u0 + (K + Kp + 1) / 2) *
               R(u0 - (K + Kp + 1) / 2) /
               (guard_denominator(R(K), scale, "[k]") *
                guard_denominator(R(K + 1), scale, "[k+1]") * du);
}

double l_residue_limit(long long kp, long long kpp, long long k, double u,
                       const ModelParams& p, double delta) {
    auto g = [&](double d) {
        const double arg = -0.5 + d;
        return br(arg + 0.5, p) * l_op_explicit(kp, kpp, k, k - 2, arg, p);
    };
    const double d1 = delta, d2 = delta / 10.0;
    const double g1 = g(d1), g2 = g(d2);
    return (g2 * d1 - g1 * d2) / (d1 - d2);
}

} // namespace vf21
