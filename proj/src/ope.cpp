#include "vf21/ope.hpp"

#include <cmath>
#include <sstream>

#include "vf21/elliptic.hpp"

namespace vf21 {

std::string RExponent::str() const {
    std::ostringstream os;
    os << "(" << c2 << " r^2 " << (c1 >= 0 ? "+ " : "- ") << std::llabs(c1) << " r "
       << (c0 >= 0 ? "+ " : "- ") << std::llabs(c0) << ") / (2 r (r-2))";
    return os.str();
}

OpTag op_tag_from(const std::string& name) {
    if (name == "Phi1") return OpTag::Phi1;
    if (name == "A") return OpTag::A;
    if (name == "Ahat") return OpTag::Ahat;
    if (name == "Psi1") return OpTag::Psi1;
    if (name == "B") return OpTag::B;
    if (name == "Bhat") return OpTag::Bhat;
    if (name == "Wop") return OpTag::Wop;
    throw domain_error("unknown operator tag: " + name);
}

std::string op_name(OpTag t) {
    switch (t) {
        case OpTag::Phi1: return "Phi1";
        case OpTag::A: return "A";
        case OpTag::Ahat: return "Ahat";
        case OpTag::Psi1: return "Psi1";
        case OpTag::B: return "B";
        case OpTag::Bhat: return "Bhat";
        case OpTag::Wop: return "Wop";
    }
    return "?";
}

namespace {

// exponent helpers over the canonical denominator 2 r (r-2):
//   r''/(2r)  -> (r-2)^2          = r^2 - 4r + 4
//   -1/2      -> -r(r-2)          = -(r^2 - 2r)
//   r/(2r'')  -> r^2
//   1/r       -> 2(r-2)           = 2r - 4
//   -1/r''    -> -2r
constexpr RExponent kHalfRppOverR{1, -4, 4};     // r''/(2r)
constexpr RExponent kMinusHalf{-1, 2, 0};        // -1/2
constexpr RExponent kHalf{1, -2, 0};             // +1/2
constexpr RExponent kHalfROverRpp{1, 0, 0};      // r/(2r'')
constexpr RExponent kOneOverR{0, 2, -4};         // 1/r
constexpr RExponent kMinusOneOverRpp{0, -2, 0};  // -1/r''

RExponent neg(RExponent e) { return {-e.c2, -e.c1, -e.c0}; }
RExponent scale(RExponent e, long long s) { return {e.c2 * s, e.c1 * s, e.c0 * s}; }

const ModeProfile kProfiles[] = {
    // tag, lam_sign, lam_unit, num, den, dK, dL, aK, bL, klein, fermion
    {OpTag::Phi1, -1, true, ModLabel::R, ModLabel::R, +2, 0, kHalfRppOverR, kMinusHalf, true, false},
    {OpTag::A, +1, true, ModLabel::R, ModLabel::R, -2, 0, neg(kHalfRppOverR), kHalf, false, true},
    {OpTag::Ahat, +1, true, ModLabel::R, ModLabel::R, -2, 0, neg(kHalfRppOverR), kHalf, false, false},
    {OpTag::Psi1, +1, false, ModLabel::R, ModLabel::Rpp, 0, +2, kMinusHalf, kHalfROverRpp, true, false},
    {OpTag::B, -1, false, ModLabel::R, ModLabel::Rpp, 0, -2, kHalf, neg(kHalfROverRpp), false, true},
    {OpTag::Bhat, -1, false, ModLabel::R, ModLabel::Rpp, 0, -2, kHalf, neg(kHalfROverRpp), false, false},
    {OpTag::Wop, -1, false, ModLabel::Two, ModLabel::Rpp, -2, -2, kOneOverR, kMinusOneOverRpp, false, false},
};

double modulus_of(ModLabel m, const ModelParams& p) {
    switch (m) {
        case ModLabel::Two: return 2.0;
        case ModLabel::R: return p.r;
        case ModLabel::Rpp: return p.r_dprime();
    }
    return 0.0;
}

int klein_sign(const ModeProfile& p1, const ModeProfile& p2) {
    if (!p1.klein) return 1;
    const int nK = -p1.dK, nL = -p1.dL;      // -gamma1
    const int rK = -p1.dL, rL = p1.dK;       // quarter turn of gamma1
    if ((p2.dK == nK && p2.dL == nL) || (p2.dK == rK && p2.dL == rL)) return -1;
    return 1;
}

} // namespace

const ModeProfile& profile(OpTag t) {
    for (const auto& p : kProfiles)
        if (p.tag == t) return p;
    throw domain_error("missing profile");
}

double lambda_of(const ModeProfile& pr, int m, const ModelParams& p) {
    if (m == 0) throw domain_error("lambda: m must be nonzero");
    if (pr.lam_unit) return static_cast<double>(pr.lam_sign);
    auto xn = [&](double a) {
        return (std::pow(p.x, a * m) - std::pow(p.x, -a * m)) / (p.x - 1.0 / p.x);
    };
    return pr.lam_sign * xn(modulus_of(pr.lam_num, p)) / xn(modulus_of(pr.lam_den, p));
}

Contraction contraction(OpTag o1, OpTag o2, const ModelParams& p) {
    const ModeProfile& p1 = profile(o1);
    const ModeProfile& p2 = profile(o2);
    Contraction c;
    c.expo = scale(p1.aK, p2.dK) + scale(p1.bL, p2.dL);
    // scale(aK, dK): aK holds the K-exponent over 2r(r-2); multiplying by the
    // integer lattice shift keeps exactness.
    c.sign = klein_sign(p1, p2);
    c.fermion_pair = p1.fermion && p2.fermion;
    // lambda1 lambda2 [r''m]/[rm] simplifies by multiset cancellation of
    // {a1, a2, r''} against {b1, b2, r} down to one ratio [pm]/[qm] (possibly
    // the unit ratio), with overall sign s = lam_sign1 * lam_sign2.
    std::vector<ModLabel> num{ModLabel::Rpp}, den{ModLabel::R};
    auto push = [&](const ModeProfile& pr) {
        if (!pr.lam_unit) {
            num.push_back(pr.lam_num);
            den.push_back(pr.lam_den);
        }
    };
    push(p1);
    push(p2);
    // cancel pairwise
    for (auto it = num.begin(); it != num.end();) {
        auto jt = std::find(den.begin(), den.end(), *it);
        if (jt != den.end()) {
            den.erase(jt);
            it = num.erase(it);
        } else {
            ++it;
        }
    }
    const int s = p1.lam_sign * p2.lam_sign;
    double pm, qm;
    if (num.empty() && den.empty()) {
        pm = qm = 1.0;  // unit ratio placeholder; resolved below
    } else if (num.size() == 1 && den.size() == 1) {
        pm = modulus_of(num[0], p);
        qm = modulus_of(den[0], p);
    } else {
        throw domain_error("contraction: dressing ratio did not simplify");
    }
    // exp(-s sum_m ([pm]/[qm]) y^m / m) = [(x^{q-p} y; x^{2q}) / (x^{q+p} y; x^{2q})]^s
    // for p = q this degenerates to (1 - y)^s.
    if (num.empty()) {
        c.linear = true;
        c.linear_pow = s;
        c.arg_lo = c.arg_hi = 0.0;
        c.nome = 0.0;
        return c;
    }
    c.linear = false;
    c.linear_pow = 0;
    if (s == 1) {
        c.arg_lo = std::pow(p.x, qm - pm);
        c.arg_hi = std::pow(p.x, qm + pm);
    } else {
        c.arg_lo = std::pow(p.x, qm + pm);
        c.arg_hi = std::pow(p.x, qm - pm);
    }
    c.nome = std::pow(p.x, 2.0 * qm);
    return c;
}

namespace {

DSeries poch_series(double a, double q, int n) {
    DSeries s(1, n);
    double den = 1.0;
    double qfac = 1.0;  // q^{k(k-1)/2}
    double apow = 1.0;
    for (int k = 0; k <= n; ++k) {
        s.c[k] = ((k % 2 == 0) ? 1.0 : -1.0) * apow * qfac / den;
        apow *= a;
        qfac *= std::pow(q, k);
        den *= (1.0 - std::pow(q, k + 1));
    }
    return s;
}

DSeries inv_poch_series(double a, double q, int n) {
    DSeries s(1, n);
    double den = 1.0;
    double apow = 1.0;
    for (int k = 0; k <= n; ++k) {
        s.c[k] = apow / den;
        apow *= a;
        den *= (1.0 - std::pow(q, k + 1));
    }
    return s;
}

DSeries ratio_series(double lo, double hi, double q, int n) {
    return poch_series(lo, q, n) * inv_poch_series(hi, q, n);
}

} // namespace

DSeries contraction_series(OpTag o1, OpTag o2, int n, const ModelParams& p) {
    const Contraction c = contraction(o1, o2, p);
    if (c.linear) {
        DSeries s(1, n);
        if (c.linear_pow == 1) {
            s.c[0] = 1.0;
            if (n >= 1) s.c[1] = -1.0;
        } else {
            for (int k = 0; k <= n; ++k) s.c[k] = 1.0;
        }
        return s;
    }
    return ratio_series(c.arg_lo, c.arg_hi, c.nome, n);
}

double contraction_value(OpTag o1, OpTag o2, double u1, double u2, const ModelParams& p) {
    const Contraction c = contraction(o1, o2, p);
    const double z1 = std::pow(p.x, 2.0 * u1);
    const double y = std::pow(p.x, 2.0 * (u2 - u1));
    const double mono = c.sign * std::pow(z1, c.expo.eval(p.r));
    if (c.linear) {
        return mono * ((c.linear_pow == 1) ? (1.0 - y) : 1.0 / (1.0 - y));
    }
    return mono * qpoch(c.arg_lo * y, c.nome, p) / qpoch(c.arg_hi * y, c.nome, p);
}

DSeries fermion_contraction(FermionSector sector, int n, const ModelParams& p) {
    // coefficient index k corresponds to y^{k/2}: NS modes live on half-integers
    DSeries s(1, 2 * n);
    const double norm = 1.0 / (p.x + 1.0 / p.x);
    if (sector == FermionSector::Ramond) {
        s.c[0] = norm;  // phi_0^2
        for (int m = 1; m <= n; ++m)
            s.c[2 * m] = norm * (std::pow(p.x, 2.0 * m) + std::pow(p.x, -2.0 * m));
    } else {
        for (int k = 1; k <= 2 * n; k += 2) {
            const double m = k / 2.0;
            s.c[k] = norm * (std::pow(p.x, 2.0 * m) + std::pow(p.x, -2.0 * m));
        }
    }
    return s;
}

const std::vector<PrintedPair>& printed_pairs(const ModelParams& p) {
    static thread_local std::vector<PrintedPair> table;
    static thread_local double cached_x = -1.0, cached_r = -1.0;
    if (cached_x == p.x && cached_r == p.r && !table.empty()) return table;
    table.clear();
    cached_x = p.x;
    cached_r = p.r;
    const double x = p.x, r = p.r;
    const double rp = r - 1.0, rpp = r - 2.0;
    const double q = std::pow(x, 2.0 * r), qpp = std::pow(x, 2.0 * rpp);
    const RExponent RppOverR{2, -8, 8};       // r''/r
    const RExponent ROverRpp{2, 0, 0};        // r/r''
    const RExponent One{2, -4, 0};            // 1
    const RExponent TwoOverR{0, 4, -8};       // 2/r
    const RExponent TwoOverRpp{0, 4, 0};      // 2/r''
    auto lin = [&](const std::string& nm, OpTag a, OpTag b, RExponent e, int sg, int pw) {
        table.push_back({nm, a, b, e, sg, 0.0, 0.0, 0.0, true, pw, 1.0});
    };
    auto rat = [&](const std::string& nm, OpTag a, OpTag b, RExponent e, int sg,
                   double lo, double hi, double nome) {
        const double rescale = std::max({1.0, lo, hi});
        table.push_back({nm, a, b, e, sg, lo, hi, nome, false, 0, rescale});
    };
    rat("Phi1Phi1", OpTag::Phi1, OpTag::Phi1, RppOverR, +1, x * x, std::pow(x, 2 * rp), q);
    rat("Phi1A", OpTag::Phi1, OpTag::A, neg(RppOverR), -1, std::pow(x, 2 * rp), x * x, q);
    rat("APhi1", OpTag::A, OpTag::Phi1, neg(RppOverR), +1, std::pow(x, 2 * rp), x * x, q);
    rat("AhatAhat", OpTag::Ahat, OpTag::Ahat, RppOverR, +1, x * x, std::pow(x, 2 * rp), q);
    rat("AA", OpTag::A, OpTag::A, RppOverR, +1, x * x, std::pow(x, 2 * rp), q);
    rat("Psi1Psi1", OpTag::Psi1, OpTag::Psi1, ROverRpp, +1, std::pow(x, -2.0), std::pow(x, 2 * rp), qpp);
    rat("Psi1B", OpTag::Psi1, OpTag::B, neg(ROverRpp), -1, std::pow(x, 2 * rp), std::pow(x, -2.0), qpp);
    rat("BPsi1", OpTag::B, OpTag::Psi1, neg(ROverRpp), +1, std::pow(x, 2 * rp), std::pow(x, -2.0), qpp);
    rat("BhatBhat", OpTag::Bhat, OpTag::Bhat, ROverRpp, +1, std::pow(x, -2.0), std::pow(x, 2 * rp), qpp);
    rat("BB", OpTag::B, OpTag::B, ROverRpp, +1, std::pow(x, -2.0), std::pow(x, 2 * rp), qpp);
    lin("Phi1Psi1", OpTag::Phi1, OpTag::Psi1, neg(One), -1, -1);
    lin("Phi1B", OpTag::Phi1, OpTag::B, One, +1, +1);
    lin("Psi1A", OpTag::Psi1, OpTag::A, One, -1, +1);
    lin("AB", OpTag::A, OpTag::B, neg(One), +1, -1);
    lin("BA", OpTag::B, OpTag::A, neg(One), +1, -1);
    rat("WopPhi1", OpTag::Wop, OpTag::Phi1, TwoOverR, +1, std::pow(x, r - 2.0), std::pow(x, r + 2.0), q);
    rat("WopA", OpTag::Wop, OpTag::A, neg(TwoOverR), +1, std::pow(x, r + 2.0), std::pow(x, r - 2.0), q);
    rat("WopPsi1", OpTag::Wop, OpTag::Psi1, neg(TwoOverRpp), +1, std::pow(x, r), std::pow(x, r - 4.0), qpp);
    rat("WopB", OpTag::Wop, OpTag::B, TwoOverRpp, +1, std::pow(x, r - 4.0), std::pow(x, r), qpp);
    return table;
}

DSeries printed_series(const PrintedPair& pp, int n, const ModelParams& p) {
    if (pp.linear) {
        DSeries s(1, n);
        if (pp.linear_pow == 1) {
            s.c[0] = 1.0;
            if (n >= 1) s.c[1] = -1.0;
        } else {
            for (int k = 0; k <= n; ++k) s.c[k] = 1.0;
        }
        return s;
    }
    return ratio_series(pp.arg_lo, pp.arg_hi, pp.nome, n);
}

double printed_value(const PrintedPair& pp, double u1, double u2, const ModelParams& p) {
    const double z1 = std::pow(p.x, 2.0 * u1);
    const double y = std::pow(p.x, 2.0 * (u2 - u1));
    const double mono = pp.sign * std::pow(z1, pp.expo.eval(p.r));
    if (pp.linear)
        return mono * ((pp.linear_pow == 1) ? (1.0 - y) : 1.0 / (1.0 - y));
    return mono * qpoch(pp.arg_lo * y, pp.nome, p) / qpoch(pp.arg_hi * y, pp.nome, p);
}

} // namespace vf21
