#include "vf21/spectra.hpp"

#include <cmath>
#include <cstdlib>
#include <map>

#include "vf21/elliptic.hpp"

namespace vf21 {

int h_bond(int s, int s_prime) {
    if (s < -1 || s > 1 || s_prime < -1 || s_prime > 1)
        throw domain_error("h_bond: labels must lie in {-1,0,1}");
    return std::abs(s + s_prime);
}

namespace {

inline int ground_vertex(int i, int j) { return (j % 2 == 0) ? (1 - i) : (i - 1); }

inline long long ground_face(int i, long long l, int j) {
    return (j % 2 == 0) ? (l + i) : (l + 2 - i);
}

void check_counts(long long v) {
    if (v < 0) throw domain_error("path count overflow");
}

} // namespace

ISeries vertex_partition_series(int i, int e_max) {
    if (i < 0 || i > 2) throw domain_error("sector must be 0, 1 or 2");
    if (e_max < 0) throw domain_error("e_max must be non-negative");
    const int jmax = e_max + 2;  // any deviation at site j >= jmax costs > e_max
    // T[s+1][e]: number of tail completions with s_j = s, bonds j..infinity
    std::array<std::vector<long long>, 3> T;
    for (auto& v : T) v.assign(e_max + 1, 0);
    T[ground_vertex(i, jmax) + 1][0] = 1;
    for (int j = jmax - 1; j >= 1; --j) {
        std::array<std::vector<long long>, 3> N;
        for (auto& v : N) v.assign(e_max + 1, 0);
        for (int s = -1; s <= 1; ++s) {
            for (int sp = -1; sp <= 1; ++sp) {
                const int cost = j * h_bond(s, sp);
                if (cost > e_max) continue;
                const auto& src = T[sp + 1];
                auto& dst = N[s + 1];
                for (int e = 0; e + cost <= e_max; ++e) {
                    if (src[e]) {
                        dst[e + cost] += src[e];
                        check_counts(dst[e + cost]);
                    }
                }
            }
        }
        T = std::move(N);
    }
    ISeries out(2, e_max);
    for (int s = 0; s < 3; ++s)
        for (int e = 0; e <= e_max; ++e) out.c[e] += T[s][e];
    return out;
}

ISeries vertex_partition_brute(int i, int e_max, int sites) {
    ISeries out(2, e_max);
    std::vector<int> s(sites + 2);
    // beyond `sites`, frozen to ground; iterate over 3^sites assignments
    const long long total = static_cast<long long>(std::pow(3.0, sites));
    for (long long code = 0; code < total; ++code) {
        long long t = code;
        for (int j = 1; j <= sites; ++j) {
            s[j] = static_cast<int>(t % 3) - 1;
            t /= 3;
        }
        s[sites + 1] = ground_vertex(i, sites + 1);
        long long H = 0;
        for (int j = 1; j <= sites; ++j) H += static_cast<long long>(j) * h_bond(s[j], s[j + 1]);
        // bonds beyond `sites` vanish only if the frozen tail is ground;
        // deviations inside cost the computed H; tail bond at sites+1 uses ground
        if (H <= e_max) out.c[static_cast<int>(H)] += 1;
    }
    return out;
}

ISeries chi_product_series(int i, int e_max) {
    if (i < 0 || i > 2) throw domain_error("sector must be 0, 1 or 2");
    ISeries s(2, e_max);
    s.c[0] = 1;
    for (int m = 1; m <= e_max; ++m) s.mul_one_plus(m, +1);        // (-q; q)
    if (i == 1) {
        for (int m = 1; m <= e_max; m += 2) s.mul_one_plus(m, +1); // (-q; q^2)
    } else {
        for (int m = 2; m <= e_max; m += 2) s.mul_one_plus(m, +1); // (-q^2; q^2)
    }
    return s;
}

ISeries face_partition_series(int i, long long l, long long k, int e_max) {
    if (i < 0 || i > 2) throw domain_error("sector must be 0, 1 or 2");
    if ((k - l - i) % 2 != 0)
        throw domain_error("face sector: k must agree with l+i mod 2");
    const int jmax = e_max + 3;
    const long long span = 2LL * (e_max + 3);
    const long long lo = std::min(k, l) - span, hi = std::max(k, l) + span;
    // state: (k_{j-1}, k_j) with energies; march bonds backward from jmax
    using State = std::pair<long long, long long>;
    std::map<State, std::vector<long long>> T;
    T[{ground_face(i, l, jmax - 1), ground_face(i, l, jmax)}].assign(e_max + 1, 0);
    T.begin()->second[0] = 1;
    for (int j = jmax - 1; j >= 1; --j) {
        std::map<State, std::vector<long long>> N;
        for (const auto& [st, arr] : T) {
            const auto [b, c] = st;  // b = k_j, c = k_{j+1}
            for (long long a = b - 2; a <= b + 2; a += 2) {
                if (a < lo || a > hi) continue;
                const long long cost2 = static_cast<long long>(j) * std::llabs(c - a);
                if (cost2 % 2 != 0) continue;
                const long long cost = cost2 / 2;
                if (cost > e_max) continue;
                auto& dst = N[{a, b}];
                if (dst.empty()) dst.assign(e_max + 1, 0);
                for (int e = 0; e + cost <= e_max; ++e) {
                    if (arr[e]) {
                        dst[e + static_cast<int>(cost)] += arr[e];
                        check_counts(dst[e + static_cast<int>(cost)]);
                    }
                }
            }
        }
        T = std::move(N);
    }
    ISeries out(2, e_max);
    for (const auto& [st, arr] : T) {
        if (st.first != k) continue;
        for (int e = 0; e <= e_max; ++e) out.c[e] += arr[e];
    }
    return out;
}

ISeries face_partition_brute(int i, long long l, long long k, int e_max, int sites) {
    ISeries out(2, e_max);
    std::vector<long long> ks(sites + 3);
    ks[0] = k;
    const long long total = static_cast<long long>(std::pow(3.0, sites));
    for (long long code = 0; code < total; ++code) {
        long long t = code;
        bool ok = true;
        for (int j = 1; j <= sites; ++j) {
            ks[j] = ks[j - 1] + (static_cast<int>(t % 3) - 1) * 2;
            t /= 3;
        }
        ks[sites + 1] = ground_face(i, l, sites + 1);
        ks[sites + 2] = ground_face(i, l, sites + 2);
        if (std::llabs(ks[sites + 1] - ks[sites]) > 2) continue;
        long long H2 = 0;
        for (int j = 1; j <= sites + 1; ++j)
            H2 += static_cast<long long>(j) * std::llabs(ks[j + 1] - ks[j - 1]);
        if (H2 % 2 != 0) { ok = false; }
        if (!ok) continue;
        const long long H = H2 / 2;
        if (H <= e_max) out.c[static_cast<int>(H)] += 1;
    }
    return out;
}

StringSeries string_function_series(int i, int j, int e_max) {
    StringSeries out;
    const int im = ((i % 4) + 4) % 4;
    const int jm = ((j % 4) + 4) % 4;
    if ((im - jm) % 2 != 0) {
        out.defined = false;
        out.series = ISeries(2, e_max);
        return out;
    }
    auto poch_pm = [&](int sgn) {
        // (sgn*q; q^2)_inf in q = x^2: product over odd exponents
        ISeries s(2, e_max);
        s.c[0] = 1;
        for (int e = 1; e <= e_max; e += 2) s.mul_one_plus(e, sgn);
        return s;
    };
    auto inv_q2 = [&](ISeries s) {
        for (int e = 2; e <= e_max; e += 2) s.div_one_minus(e);
        return s;
    };
    if (im % 2 == 1) {
        // c^{11}-type: x^{1/2}(-q^2;q^2)/(q^2;q^2)
        ISeries s(2, e_max);
        s.c[0] = 1;
        for (int e = 2; e <= e_max; e += 2) s.mul_one_plus(e, +1);
        out.series = inv_q2(s);
        out.half_unit_lead = true;
        return out;
    }
    // even family via c00 +- c02 = (-+q;q^2)/(q^2;q^2); symmetry maps (2,2)->(0,0),
    // (2,0)->(0,2)
    const bool diag = (im == jm) || (im + jm) % 4 == 0 ? (im == jm) : false;
    ISeries plus = poch_pm(+1), minus = poch_pm(-1);
    ISeries half(2, e_max);
    if (im == jm || (im == 2 && jm == 2)) {
        for (int e = 0; e <= e_max; ++e) {
            const long long v = plus.c[e] + minus.c[e];
            if (v % 2 != 0) throw domain_error("string series parity");
            half.c[e] = v / 2;
        }
        out.series = inv_q2(half);
        return out;
    }
    (void)diag;
    for (int e = 0; e <= e_max; ++e) {
        const long long v = plus.c[e] - minus.c[e];
        if (v % 2 != 0) throw domain_error("string series parity");
        half.c[e] = v / 2;
    }
    out.series = inv_q2(half);
    return out;
}

double string_function_value(int i, int j, const ModelParams& p) {
    const int im = ((i % 4) + 4) % 4;
    const int jm = ((j % 4) + 4) % 4;
    if ((im - jm) % 2 != 0) return 0.0;
    const double x = p.x;
    const double q2 = x * x;
    const double q4 = q2 * q2;
    const double den = qpoch(q4, q4, p);
    if (im % 2 == 1) return std::sqrt(x) * qpoch(-q4, q4, p) / den;
    const double sum = qpoch(-q2, q4, p);
    const double dif = qpoch(q2, q4, p);
    if (im == jm) return 0.5 * (sum + dif) / den;
    return 0.5 * (sum - dif) / den;
}

double chi_value(int i, const ModelParams& p) {
    const double x = p.x;
    const double a = qpoch(-x * x, x * x, p);
    if (i == 1) return a * qpoch(-x * x, std::pow(x, 4.0), p);
    return a * qpoch(-std::pow(x, 4.0), std::pow(x, 4.0), p);
}

SumRuleResult chi_sum_rule(int i, long long l, int k_max, const ModelParams& p) {
    const double r = p.r;
    const double rpp = p.r_dprime();
    double lhs = 0.0;
    double tail = 0.0;
    for (long long k = l + i - k_max; k <= l + i + k_max; k += 2) {
        const long long jj = (((k - l - i) / 2) % 2 + 2) % 2;
        const double c = string_function_value(i, i + 2 * static_cast<int>(jj), p);
        const double quad = (r / (2.0 * rpp)) * l * l - static_cast<double>(l) * k +
                            (rpp / (2.0 * r)) * k * k;
        const double term = br(static_cast<double>(k), p) * c * std::pow(p.x, quad);
        lhs += term;
        if (std::llabs(k - l - i) >= 2 * (k_max / 2) - 1) tail = std::max(tail, std::abs(term));
    }
    const double rhs = br(static_cast<double>(l), p, 2) * chi_value(i, p);
    return {lhs, rhs, tail};
}

TraceCheck boson_fermion_trace(int i, int e_max) {
    TraceCheck out;
    // LHS: boson tower = partitions into parts m >= 1 with weight x^{4m}
    // (each mode m contributes 1/(1 - x^{4m})); fermion tower = strict
    // partitions over n in Z+1/2 (weight x^{4n} = x^{4j+2}) for i = 0,2 and
    // n in Z>0 (weight x^{4n}) for i = 1. All in x^2 units: weights 2m and
    // 2n doublings.
    ISeries lhs(2, e_max);
    lhs.c[0] = 1;
    for (int m = 1; 2 * m <= e_max; ++m) lhs.div_one_minus(2 * m);
    if (i == 1) {
        for (int n = 1; 2 * n <= e_max; ++n) lhs.mul_one_plus(2 * n, +1);
    } else {
        for (int j = 0; 2 * j + 1 <= e_max; ++j) lhs.mul_one_plus(2 * j + 1, +1);
    }
    out.lhs = lhs;
    // RHS: string-function assembly (x^{quad} and the x^{1/2} of c11 are
    // monomial offsets outside the integer series; both sides normalized at
    // degree zero).
    if (i == 1) {
        out.rhs = string_function_series(1, 1, e_max).series;
    } else {
        ISeries c00 = string_function_series(0, 0, e_max).series;
        ISeries c02 = string_function_series(0, 2, e_max).series;
        c00 += c02;
        out.rhs = c00;
    }
    return out;
}

} // namespace vf21
