#include "vf21/vertex_weights.hpp"

#include <cmath>

#include "vf21/elliptic.hpp"

namespace vf21 {

namespace {

// h_i^{(2r)}(a)
inline double T2r(int i, double a, const ModelParams& p) {
    return h_func(i, 2.0 * p.r, a, p);
}

constexpr double kSqrt2 = 1.41421356237309504880;

} // namespace

double kappa_bar(double u, const ModelParams& p) {
    const double x = p.x;
    const double r = p.r;
    const double z = std::pow(x, 2.0 * u);
    const double zeta = std::pow(x, u);
    const std::vector<double> qs{std::pow(x, 4.0), std::pow(x, 2.0 * r)};
    auto rho = [&](double zz) {
        return qpoch_multi(x * x * zz, qs, p) * qpoch_multi(std::pow(x, 2.0 * r + 2.0) * zz, qs, p) /
               (qpoch_multi(std::pow(x, 4.0) * zz, qs, p) * qpoch_multi(std::pow(x, 2.0 * r) * zz, qs, p));
    };
    return std::pow(zeta, -(r - 1.0) / r) * rho(z) / rho(1.0 / z);
}

double kappa_bar_12(double u, const ModelParams& p) {
    const double x = p.x;
    const double r = p.r;
    const double z = std::pow(x, 2.0 * u);
    const double q = std::pow(x, 2.0 * r);
    return std::pow(z / x, -(r - 1.0) / r) * qpoch(z, q, p) * qpoch(q / z, q, p) /
           (qpoch(x * x / z, q, p) * qpoch(std::pow(x, 2.0 * r - 2.0) * z, q, p));
}

double kappa_bar_22(double u, const ModelParams& p) {
    const double x = p.x;
    const double r = p.r;
    const double z = std::pow(x, 2.0 * u);
    const double q = std::pow(x, 2.0 * r);
    return std::pow(z, -(r - 2.0) / r) * qpoch(x * x * z, q, p) *
           qpoch(std::pow(x, 2.0 * r - 2.0) / z, q, p) /
           (qpoch(x * x / z, q, p) * qpoch(std::pow(x, 2.0 * r - 2.0) * z, q, p));
}

WeightTensor r8v(double u, const ModelParams& p) {
    WeightTensor R(ModelTag::R8, {2, 2, 2, 2}, u);
    const double k = kappa_bar(u, p);
    const double h20 = T2r(2, 0.0, p);
    const double h21 = T2r(2, 1.0, p);
    const double h11 = T2r(1, 1.0, p);
    const double h2u = T2r(2, u, p);
    const double h1u = T2r(1, u, p);
    const double h2m = guard_denominator(T2r(2, 1.0 - u, p), h20, "h2(1-u)");
    const double h1m = guard_denominator(T2r(1, 1.0 - u, p), h20, "h1(1-u)");
    const double a = h21 * h2u / (h20 * h2m) / k;
    const double b = -h21 * h1u / (h20 * h1m) / k;
    const double c = h11 * h2u / (h20 * h1m) / k;
    const double d = h11 * h1u / (h20 * h2m) / k;
    for (int e = 0; e < 2; ++e) {
        const int f = 1 - e;
        R.at(e, e, e, e) = a;
        R.at(e, f, e, f) = b;
        R.at(f, e, e, f) = c;
        R.at(f, f, e, e) = d;
    }
    return R;
}

WeightTensor r18v(double u, const ModelParams& p) {
    WeightTensor R(ModelTag::R18, {2, 3, 2, 3}, u);
    const double k = kappa_bar_12(u, p);
    auto t1 = [&](double a) { return T2r(1, a, p); };
    auto t2 = [&](double a) { return T2r(2, a, p); };
    const double d20 = t2(0.0);
    const double d1m = guard_denominator(t1(2.0 - u), d20, "h1(2-u)");
    const double d2m = guard_denominator(t2(2.0 - u), d20, "h2(2-u)");
    // set(eps, s, epsp, sp, v): incoming (eps, s), outgoing (epsp, sp)
    auto set = [&](int eps, int s, int epsp, int sp, double v) {
        R.at(epsp > 0 ? 0 : 1, s1idx(sp), eps > 0 ? 0 : 1, s1idx(s)) = v;
    };
    for (int sg : {+1, -1}) {
        set(sg, sg, sg, sg, t2(1) * t2(1) * t2(u) / (d20 * d20 * d2m) / k);
        set(sg, -sg, sg, sg, t1(1) * t1(1) * t1(u) / (d20 * d20 * d1m) / k);
        set(sg, 0, sg, 0, t2(2) * t1(1 - u) * t2(1 - u) / (d20 * d1m * d2m) / k);
        set(sg, -sg, sg, -sg, -t2(1) * t2(1) * t1(u) / (d20 * d20 * d1m) / k);
        // paired partner of the charge-violating element; the tabulation in
        // the source carries a misprint here (theta_1^2 theta_1(u)/theta_1(2-u));
        // the form below is fixed by the fusion construction.
        set(sg, sg, sg, -sg, -t1(1) * t1(1) * t2(u) / (d20 * d20 * d2m) / k);
        set(sg, 0, -sg, sg, t1(2) * t2(1 - u) * t2(1 - u) / (d20 * d1m * d2m) / k);
        set(sg, 0, -sg, -sg, -t1(2) * t1(1 - u) * t1(1 - u) / (d20 * d1m * d2m) / k);
        set(sg, -sg, -sg, 0, t1(1) * t2(1) * t2(u) / (d20 * d20 * d1m) / k);
        set(sg, sg, -sg, 0, t1(1) * t2(1) * t1(u) / (d20 * d20 * d2m) / k);
    }
    return R;
}

namespace {

// h_1^{(2r)}(1-u) / (1 - x^{2-2u}), finite and nonzero at u = 1.
double T1_reduced(double u, const ModelParams& p) {
    const double x = p.x;
    const double t = 2.0 * p.r;
    const double q4 = std::pow(x, 2.0 * t);
    const double w = std::pow(x, 2.0 * (1.0 - u));
    const double pref = std::sqrt(p.epsilon * t / 3.14159265358979323846) *
                        std::exp(-p.epsilon * t / 4.0);
    const double xp = std::pow(x, (1.0 - u) * (1.0 - u) / t - (1.0 - u));
    return pref * xp * qpoch(w * q4, q4, p) * qpoch(q4 / w, q4, p) * qpoch(q4, q4, p);
}

// kappa_bar_22(u) * (1 - x^2/z), finite and nonzero at u = 1.
double kappa22_hat(double u, const ModelParams& p) {
    const double x = p.x;
    const double r = p.r;
    const double q = std::pow(x, 2.0 * r);
    const double z = std::pow(x, 2.0 * u);
    return std::pow(z, -(r - 2.0) / r) * qpoch(x * x * z, q, p) *
           qpoch(std::pow(x, 2.0 * r - 2.0) / z, q, p) /
           (qpoch(std::pow(x, 2.0 * r + 2.0) / z, q, p) *
            qpoch(std::pow(x, 2.0 * r - 2.0) * z, q, p));
}

} // namespace

WeightTensor r21v_table(double u, const ModelParams& p) {
    WeightTensor R(ModelTag::R21, {3, 3, 3, 3}, u);
    auto t1 = [&](double a) { return T2r(1, a, p); };
    auto t2 = [&](double a) { return T2r(2, a, p); };
    const double g = 1.0 - std::pow(p.x, 2.0 - 2.0 * u);
    const double kh = kappa22_hat(u, p);
    const double T1m = guard_denominator(T1_reduced(u, p), t2(0.0), "reduced h1(1-u)");
    const double d20 = t2(0.0);
    const double d1m = guard_denominator(t1(2.0 - u), d20, "h1(2-u)");
    const double d2m = guard_denominator(t2(2.0 - u), d20, "h2(2-u)");
    const double t2u = t2(u), t1u = t1(u);
    auto set = [&](int s1p, int s2p, int s1, int s2, double v) {
        R.at(s1idx(s1p), s1idx(s2p), s1idx(s1), s1idx(s2)) = v;
    };
    for (int sg : {+1, -1}) {
        double v = (g * std::pow(t2(1), 4) * t2u * t2(1 + u) / (std::pow(d20, 4) * d2m * t2(1 - u)) -
                    std::pow(t1(1), 4) * t2u * t1(1 + u) / (std::pow(d20, 4) * d2m * T1m)) / kh;
        set(sg, sg, sg, sg, v);
        v = g * (t1(2) * t2(2) * t2u * t2u / (d20 * d20 * d1m * d2m)) / kh;
        set(sg, 0, 0, sg, v);
        set(0, sg, sg, 0, v);
        v = g * (t2(2) * t2(2) * t1u * t2u / (d20 * d20 * d1m * d2m)) / kh;
        set(sg, 0, sg, 0, v);
        set(0, sg, 0, sg, v);
        v = (std::pow(t2(1), 4) * t1u * t1(1 + u) / (std::pow(d20, 4) * d1m * T1m) -
             g * std::pow(t1(1), 4) * t1u * t2(1 + u) / (std::pow(d20, 4) * d1m * t2(1 - u))) / kh;
        set(sg, -sg, sg, -sg, v);
        v = (t1(1) * t2(1) * t1(2) * t2u * t2u * t2u /
             (std::pow(d20, 3) * d1m * T1m * t2(1 - u))) / kh;
        set(-sg, sg, sg, -sg, v);
        v = -(t1(2) * t2(2) * t1u * t2u * t2(1 - u) /
              (d20 * d20 * d1m * d2m * T1m)) / kh;
        set(0, 0, sg, -sg, v);
        set(sg, -sg, 0, 0, v);
        v = -(t1(1) * t2(1) * t1(2) * t1u * t1u * t1u /
              (std::pow(d20, 3) * d2m * T1m * t2(1 - u))) / kh;
        set(-sg, -sg, sg, sg, v);
    }
    const double term1 = -g * (t2(2) * t2(2) * t1u * t2u / (d20 * d20 * d1m * d2m));
    const double term2 = t1(1) * t2(1) * t1(2) * t2(1 - u) * t2(1 - u) * t2(1 + u) /
                         (std::pow(d20, 3) * d1m * d2m * T1m);
    const double term3 = -g * t1(1) * t2(1) * t1(2) * t1(1 - u) * t1(1 - u) * t1(1 + u) /
                         (std::pow(d20, 3) * d1m * d2m * t2(1 - u));
    R.at(1, 1, 1, 1) = (term1 + term2 + term3) / kh;
    return R;
}

namespace {

// operator product of two 16x16 matrices kept as flat arrays
using Mat16 = std::array<double, 256>;

void matmul16(const Mat16& A, const Mat16& B, Mat16& C) {
    for (int i = 0; i < 16; ++i) {
        for (int j = 0; j < 16; ++j) {
            double s = 0.0;
            for (int k = 0; k < 16; ++k) s += A[i * 16 + k] * B[k * 16 + j];
            C[i * 16 + j] = s;
        }
    }
}

// embed the two-site R (acting on sites a<b of four spin-1/2 sites) into 16x16
Mat16 embed4(const WeightTensor& R, int a, int b) {
    Mat16 M{};
    for (int o0 = 0; o0 < 2; ++o0)
    for (int o1 = 0; o1 < 2; ++o1)
    for (int o2 = 0; o2 < 2; ++o2)
    for (int o3 = 0; o3 < 2; ++o3) {
        const int out[4] = {o0, o1, o2, o3};
        for (int i0 = 0; i0 < 2; ++i0)
        for (int i1 = 0; i1 < 2; ++i1)
        for (int i2 = 0; i2 < 2; ++i2)
        for (int i3 = 0; i3 < 2; ++i3) {
            const int inn[4] = {i0, i1, i2, i3};
            bool ok = true;
            for (int s = 0; s < 4; ++s)
                if (s != a && s != b && out[s] != inn[s]) { ok = false; break; }
            if (!ok) continue;
            const int oi = ((o0 * 2 + o1) * 2 + o2) * 2 + o3;
            const int ii = ((i0 * 2 + i1) * 2 + i2) * 2 + i3;
            M[oi * 16 + ii] = R.at(out[a], out[b], inn[a], inn[b]);
        }
    }
    return M;
}

// Maps between spin-1 coordinates and symmetric pair states, in the
// normalization fixed by the intertwining vectors (middle state carried
// as the plain sum v+- + v-+). in-map columns carry the 1/2 weights,
// out-map rows the unit weights; out * in = identity on coordinates.
constexpr double in_map[4][3] = {
    {1.0, 0.0, 0.0},
    {0.0, 0.5, 0.0},
    {0.0, 0.5, 0.0},
    {0.0, 0.0, 1.0}};
constexpr double out_map[3][4] = {
    {1.0, 0.0, 0.0, 0.0},
    {0.0, 1.0, 1.0, 0.0},
    {0.0, 0.0, 0.0, 1.0}};

WeightTensor project_composite(const Mat16& C, double u, ModelTag tag) {
    WeightTensor R(tag, {3, 3, 3, 3}, u);
    for (int o1 = 0; o1 < 3; ++o1)
    for (int o2 = 0; o2 < 3; ++o2)
    for (int i1 = 0; i1 < 3; ++i1)
    for (int i2 = 0; i2 < 3; ++i2) {
        double s = 0.0;
        for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            const double wo = out_map[o1][a] * out_map[o2][b];
            if (wo == 0.0) continue;
            for (int c = 0; c < 4; ++c)
            for (int d = 0; d < 4; ++d) {
                const double wi = in_map[c][i1] * in_map[d][i2];
                if (wi == 0.0) continue;
                s += wo * wi * C[(a * 4 + b) * 16 + (c * 4 + d)];
            }
        }
        // overall minus from the composite normalization
        R.at(o1, o2, i1, i2) = -s;
    }
    return R;
}

} // namespace

WeightTensor r21v_fused(double u, const ModelParams& p) {
    if (std::abs(u) < 1e-12) {
        // continuity limit: R(0) is the exchange permutation
        WeightTensor R(ModelTag::R21Fused, {3, 3, 3, 3}, u);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) R.at(b, a, a, b) = 1.0;
        return R;
    }
    // composite R23(u-1) R24(u) R13(u) R14(u+1) on sites (1,2 | 3,4)
    const Mat16 A = embed4(r8v(u - 1.0, p), 1, 2);
    const Mat16 B = embed4(r8v(u, p), 1, 3);
    const Mat16 C = embed4(r8v(u, p), 0, 2);
    const Mat16 D = embed4(r8v(u + 1.0, p), 0, 3);
    Mat16 T1, T2, T3;
    matmul16(A, B, T1);
    matmul16(T1, C, T2);
    matmul16(T2, D, T3);
    return project_composite(T3, u, ModelTag::R21Fused);
}

WeightTensor s21v_table(double u, const ModelParams& p) {
    WeightTensor R = r21v_table(u, p.shifted(2));
    R.tag = ModelTag::S21;
    for (auto& v : R.data) v = -v;
    return R;
}

WeightTensor s21v_fused(double u, const ModelParams& p) {
    WeightTensor R = r21v_fused(u, p.shifted(2));
    R.tag = ModelTag::S21Fused;
    for (auto& v : R.data) v = -v;
    return R;
}

WeightTensor exchange_tensor(int d) {
    WeightTensor P(ModelTag::R21, {d, d, d, d}, 0.0);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) P.at(b, a, a, b) = 1.0;
    return P;
}

std::array<double, 2> projector_residuals(const WeightTensor& R) {
    const int d = R.dims[0];
    double scale = 0.0;
    for (double v : R.data) scale = std::max(scale, std::abs(v));
    double rp = 0.0, rm = 0.0;
    for (int o1 = 0; o1 < d; ++o1)
    for (int o2 = 0; o2 < d; ++o2)
    for (int i1 = 0; i1 < d; ++i1)
    for (int i2 = 0; i2 < d; ++i2) {
        const double pr = R.at(o2, o1, i1, i2); // (P R)(o1,o2) = R(o2,o1)
        const double rr = R.at(o1, o2, i1, i2);
        rp = std::max(rp, std::abs(pr - rr));
        rm = std::max(rm, std::abs(pr + rr));
    }
    return {rp / scale, rm / scale};
}

int structural_nonzeros(const WeightTensor& T, double floor) {
    double scale = 0.0;
    for (double v : T.data) scale = std::max(scale, std::abs(v));
    int n = 0;
    for (double v : T.data)
        if (std::abs(v) > floor * scale) ++n;
    return n;
}

} // namespace vf21
