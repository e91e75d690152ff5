#include "vf21/face_weights.hpp"

#include <cmath>
#include <cstdint>
#include <unordered_map>

#include "vf21/elliptic.hpp"
#include "vf21/vertex_weights.hpp"

namespace vf21 {

double w_sos(long long c, long long d, long long b, long long a, double u,
             const ModelParams& p) {
    if (!(adm_half(a, b) && adm_half(a, d) && adm_half(b, c) && adm_half(d, c)))
        return 0.0;
    const double kb = kappa_bar(u, p);
    const long long k = a;
    if (c == a + 2 || c == a - 2) return 1.0 / kb;
    // c == a
    const double kbr = guard_denominator(br(static_cast<double>(k), p), br(1.0, p), "[k]");
    const double umr = guard_denominator(br(1.0 - u, p), br(1.0, p), "[1-u]");
    if (b == d) {
        const int sg = (b == a + 1) ? 1 : -1;
        return br(1.0, p) * br(k + sg * u, p) / (umr * kbr) / kb;
    }
    const int sg = (d == a + 1) ? 1 : -1;
    return -br(u, p) * br(k + sg * 1.0, p) / (umr * kbr) / kb;
}

double wbar22(long long c, long long d, long long b, long long a, double u,
              const ModelParams& p, int shift) {
    if (!(adm_fused(a, b) && adm_fused(a, d) && adm_fused(b, c) && adm_fused(d, c)))
        return 0.0;
    const double k = static_cast<double>(a);
    auto R = [&](double v) { return br(v, p, shift); };
    auto B2 = [&](double v) { return bracket_binom(v, 2, p, shift); };
    const long long db = b - a, dd = d - a, dc = c - a;
    const double scale = R(1.0);

    if ((dc == 4 && dd == 2 && db == 2) || (dc == -4 && dd == -2 && db == -2))
        return B2(2.0 - u);
    if ((dc == 2 && dd == 2 && db == 2) || (dc == -2 && dd == -2 && db == -2)) {
        const int sg = dc > 0 ? 1 : -1;
        return R(1.0 - u) * R(k + sg + sg * u) /
               (R(1.0) * guard_denominator(R(k + sg), scale, "[k+-1]"));
    }
    if ((dc == 2 && dd == 0 && db == 0) || (dc == -2 && dd == 0 && db == 0)) {
        const int sg = dc > 0 ? 1 : -1;
        return R(1.0 - u) * R(k + sg - sg * u) /
               (R(1.0) * guard_denominator(R(k + sg), scale, "[k+-1]"));
    }
    if ((dc == 2 && dd == 2 && db == 0) || (dc == -2 && dd == -2 && db == 0)) {
        const int sg = dc > 0 ? 1 : -1;
        return R(k + 3.0 * sg) / guard_denominator(R(k + sg), scale, "[k+-1]") * B2(1.0 - u);
    }
    if ((dc == 2 && dd == 0 && db == 2) || (dc == -2 && dd == 0 && db == -2)) {
        const int sg = dc > 0 ? 1 : -1;
        return R(k - sg) / guard_denominator(R(k + sg), scale, "[k+-1]") * B2(1.0 - u);
    }
    if ((dc == 0 && dd == 2 && db == 2) || (dc == 0 && dd == -2 && db == -2)) {
        const int sg = dd > 0 ? 1 : -1;
        return B2(sg * k + u + 1.0) /
               guard_denominator(B2(sg * k + 1.0), 1.0, "[+-k+1; 2]");
    }
    if ((dc == 0 && dd == 2 && db == -2) || (dc == 0 && dd == -2 && db == 2)) {
        const int sg = dd > 0 ? 1 : -1;
        return B2(sg * k + 2.0) / guard_denominator(B2(sg * k), 1.0, "[+-k; 2]") *
               B2(u + 1.0);
    }
    if ((dc == 0 && dd == 0 && (db == 2 || db == -2))) {
        const int sg = db > 0 ? 1 : -1;
        return -R(k - sg) * R(u) * R(k + sg * u) /
               (R(2.0) * guard_denominator(R(k), scale, "[k]") *
                guard_denominator(R(k + sg), scale, "[k+-1]"));
    }
    if ((dc == 0 && (dd == 2 || dd == -2) && db == 0)) {
        // the printed table carries [k -+ 2] here; the fusion construction
        // (and the face star-triangle relation) require [k +- 2].
        const int sg = dd > 0 ? 1 : -1;
        return -R(2.0) * R(k + 2.0 * sg) * R(u) * R(k + sg * u) /
               (R(1.0) * R(1.0) * guard_denominator(R(k - 1.0), scale, "[k-1]") *
                guard_denominator(R(k + 1.0), scale, "[k+1]"));
    }
    // dc == dd == db == 0
    return R(k - 1.0 + u) * R(k - u) /
               (guard_denominator(R(k), scale, "[k]") *
                guard_denominator(R(k - 1.0), scale, "[k-1]")) +
           R(k - 1.0) * R(k + 2.0) /
               (guard_denominator(R(k), scale, "[k]") *
                guard_denominator(R(k + 1.0), scale, "[k+1]")) * B2(1.0 - u);
}

namespace {

struct FaceKey {
    long long c, d, b, a;
    double u;
    int shift;
    bool operator==(const FaceKey& o) const {
        return c == o.c && d == o.d && b == o.b && a == o.a && u == o.u && shift == o.shift;
    }
};

struct FaceKeyHash {
    size_t operator()(const FaceKey& k) const {
        uint64_t h = 1469598103934665603ull;
        auto mix = [&h](uint64_t v) {
            h ^= v;
            h *= 1099511628211ull;
        };
        mix(static_cast<uint64_t>(k.c));
        mix(static_cast<uint64_t>(k.d) * 0x9e3779b97f4a7c15ull);
        mix(static_cast<uint64_t>(k.b) * 0xbf58476d1ce4e5b9ull);
        mix(static_cast<uint64_t>(k.a) * 0x94d049bb133111ebull);
        uint64_t ubits;
        static_assert(sizeof(double) == sizeof(uint64_t));
        std::memcpy(&ubits, &k.u, sizeof ubits);
        mix(ubits);
        mix(static_cast<uint64_t>(k.shift));
        return static_cast<size_t>(h);
    }
};

thread_local std::unordered_map<FaceKey, double, FaceKeyHash> g_memo;
thread_local double g_memo_x = -1.0, g_memo_r = -1.0;

} // namespace

void clear_face_memo() { g_memo.clear(); }

double w22(long long c, long long d, long long b, long long a, double u,
           const ModelParams& p, int shift) {
    if (g_memo_x != p.x || g_memo_r != p.r) {
        g_memo.clear();
        g_memo_x = p.x;
        g_memo_r = p.r;
    }
    const FaceKey key{c, d, b, a, u, shift};
    auto it = g_memo.find(key);
    if (it != g_memo.end()) return it->second;
    const double wb = wbar22(c, d, b, a, u, p, shift);
    double v = 0.0;
    if (wb != 0.0) {
        const ModelParams ps = p.shifted(shift);
        const double norm = kappa_bar_22(u, ps) * bracket_binom(2.0 - u, 2, p, shift);
        v = wb / guard_denominator(norm, 1.0, "kappa22 [2-u;2]");
    }
    g_memo.emplace(key, v);
    return v;
}

double w22_dprime(long long c, long long d, long long b, long long a, double u,
                  const ModelParams& p) {
    return -w22(c, d, b, a, u, p, 2);
}

} // namespace vf21
