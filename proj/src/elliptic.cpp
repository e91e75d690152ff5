#include "vf21/elliptic.hpp"

#include <cmath>

namespace vf21 {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double qpoch(double z, double q, const ModelParams& params) {
    if (!(q > 0.0 && q < 1.0)) throw domain_error("qpoch: base must lie in (0,1)");
    double p = 1.0;
    double zq = z;
    for (int i = 0; i < params.product_cutoff; ++i) {
        p *= (1.0 - zq);
        zq *= q;
    }
    return p;
}

cplx qpoch(cplx z, double q, const ModelParams& params) {
    if (!(q > 0.0 && q < 1.0)) throw domain_error("qpoch: base must lie in (0,1)");
    cplx p = 1.0;
    cplx zq = z;
    for (int i = 0; i < params.product_cutoff; ++i) {
        p *= (1.0 - zq);
        zq *= q;
    }
    return p;
}

namespace {
template <typename T>
T qpoch_multi_impl(T z, const std::vector<double>& qs, const ModelParams& params, size_t level) {
    // recursion: (z; q_1..q_m) = prod_{i>=0} (z q_1^i ; q_2..q_m)
    if (level + 1 == qs.size()) {
        double q = qs[level];
        if (!(q > 0.0 && q < 1.0)) throw domain_error("qpoch_multi: base must lie in (0,1)");
        T p = 1.0;
        T zq = z;
        for (int i = 0; i < params.product_cutoff; ++i) {
            p *= (1.0 - zq);
            zq *= q;
        }
        return p;
    }
    double q = qs[level];
    if (!(q > 0.0 && q < 1.0)) throw domain_error("qpoch_multi: base must lie in (0,1)");
    T p = 1.0;
    T zq = z;
    for (int i = 0; i < params.product_cutoff; ++i) {
        p *= qpoch_multi_impl(zq, qs, params, level + 1);
        zq *= q;
    }
    return p;
}
} // namespace

double qpoch_multi(double z, const std::vector<double>& qs, const ModelParams& params) {
    if (qs.empty()) throw domain_error("qpoch_multi: need at least one base");
    if (z == 0.0) return 1.0;
    return qpoch_multi_impl(z, qs, params, 0);
}

cplx qpoch_multi(cplx z, const std::vector<double>& qs, const ModelParams& params) {
    if (qs.empty()) throw domain_error("qpoch_multi: need at least one base");
    if (z == cplx(0.0)) return cplx(1.0);
    return qpoch_multi_impl(z, qs, params, 0);
}

double theta_q(double z, double q, const ModelParams& params) {
    if (!(q > 0.0 && q < 1.0)) throw domain_error("theta_q: nome must lie in (0,1)");
    if (z == 0.0) throw domain_error("theta_q: z must be nonzero");
    return qpoch(z, q, params) * qpoch(q / z, q, params) * qpoch(q, q, params);
}

double theta_q_sum(double z, double q, const ModelParams& params) {
    if (!(q > 0.0 && q < 1.0)) throw domain_error("theta_q_sum: nome must lie in (0,1)");
    // sum_m q^{m(m-1)/2} (-z)^m, truncated when increments are negligible
    double s = 1.0; // m = 0
    double tol = params.rel_tol * 1e-2;
    // positive m
    double term = 1.0;
    for (int m = 1; m < 800; ++m) {
        term *= -z * std::pow(q, m - 1);
        s += term;
        if (std::abs(term) < tol * (1.0 + std::abs(s)) && m > 3) break;
    }
    // negative m: q^{m(m-1)/2} with m = -n: q^{n(n+1)/2} (-z)^{-n}
    term = 1.0;
    for (int n = 1; n < 800; ++n) {
        term *= std::pow(q, n) / (-z);
        s += term;
        if (std::abs(term) < tol * (1.0 + std::abs(s)) && n > 3) break;
    }
    return s;
}

cplx theta_char(double a, double b, cplx u, cplx tau, const ModelParams& params) {
    if (!(tau.imag() > 0.0)) throw domain_error("theta_char: Im(tau) must be positive");
    const cplx ipi(0.0, kPi);
    cplx s = 0.0;
    double tol = params.rel_tol * 1e-2;
    double running = 0.0;
    // symmetric truncation in m + a
    for (int m = 0; m < 800; ++m) {
        cplx inc = 0.0;
        for (int sgn : {+1, -1}) {
            if (m == 0 && sgn < 0) continue;
            double mm = sgn > 0 ? m : -m;
            double ma = mm + a;
            inc += std::exp(ipi * ma * (ma * tau + 2.0 * (u + b)));
        }
        s += inc;
        running = std::max(running, std::abs(s));
        if (std::abs(inc) < tol * (1.0 + running) && m > 3) break;
    }
    return s;
}

cplx jtheta(int j, cplx u, cplx tau, const ModelParams& params) {
    switch (j) {
        case 1: return theta_char(0.5, -0.5, u, tau, params);
        case 2: return theta_char(0.5, 0.0, u, tau, params);
        case 3: return theta_char(0.0, 0.0, u, tau, params);
        case 4: return theta_char(0.0, 0.5, u, tau, params);
        default: throw domain_error("jtheta: j must lie in 1..4");
    }
}

double bracket_gen(double u, BracketKind kind, double t, const ModelParams& params) {
    if (!(t > 0.0)) throw domain_error("bracket: modulus must be positive");
    const double x = params.x;
    const double q = std::pow(x, 2.0 * t);
    switch (kind) {
        case BracketKind::Square:
            return std::pow(x, u * u / t - u) * theta_q(std::pow(x, 2.0 * u), q, params);
        case BracketKind::Curly:
            return std::pow(x, u * u / t - u) * theta_q(-std::pow(x, 2.0 * u), q, params);
        case BracketKind::DSquare:
            return std::pow(x, u * u / t) * theta_q(std::pow(x, 2.0 * u + t), q, params);
        case BracketKind::DCurly:
            return std::pow(x, u * u / t) * theta_q(-std::pow(x, 2.0 * u + t), q, params);
    }
    throw domain_error("bracket: bad kind");
}

double bracket(double u, BracketKind kind, const ModelParams& params, int r_shift) {
    if (r_shift < 0 || r_shift > 2) throw domain_error("bracket: r_shift must be 0, 1 or 2");
    double t = params.r - r_shift;
    if (!(t > 0.0)) throw domain_error("bracket: r - r_shift must be positive");
    return bracket_gen(u, kind, t, params);
}

double h_func(int j, double t, double u, const ModelParams& params) {
    if (!(t > 0.0)) throw domain_error("h_func: t must be positive");
    const double pre = std::sqrt(params.epsilon * t / kPi);
    const double damp = std::exp(-params.epsilon * t / 4.0);
    switch (j) {
        case 1: return pre * damp * bracket_gen(u, BracketKind::Square, t, params);
        case 2: return pre * bracket_gen(u, BracketKind::DSquare, t, params);
        case 3: return pre * bracket_gen(u, BracketKind::DCurly, t, params);
        case 4: return pre * damp * bracket_gen(u, BracketKind::Curly, t, params);
        default: throw domain_error("h_func: j must lie in 1..4");
    }
}

double h_func_series(int j, double t, double u, const ModelParams& params) {
    const cplx tau(0.0, kPi / (params.epsilon * t));
    cplx v = jtheta(j, cplx(u / t, 0.0), tau, params);
    return v.real();
}

double bracket_falling(double u, int m, const ModelParams& params, int r_shift) {
    if (m < 0) throw domain_error("bracket_falling: order must be non-negative");
    double p = 1.0;
    for (int i = 0; i < m; ++i) p *= br(u - i, params, r_shift);
    return p;
}

double bracket_binom(double u, int m, const ModelParams& params, int r_shift) {
    if (m < 0) throw domain_error("bracket_binom: order must be non-negative");
    double num = 1.0, den = 1.0;
    for (int i = 0; i < m; ++i) {
        num *= br(u - i, params, r_shift);
        den *= br(m - i, params, r_shift);
    }
    return num / den;
}

} // namespace vf21
