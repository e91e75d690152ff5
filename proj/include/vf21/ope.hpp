#ifndef VF21_OPE_HPP
#define VF21_OPE_HPP

// Scalar operator-product data for the free-field operators: mode profiles,
// pairwise contraction prefactors (exact rational exponents in r, sign, and
// the expansion in y = z2/z1), and the fermion pair functions.
//
// A profile stores the boson-mode dressing lambda(m) = sgn [a m]_x / [b m]_x
// (a = b meaning the constant sgn), the lattice shift (dK, dL) of the vertex
// factor, the monomial exponents (aK, bL) of z^{aK K + bL L}, whether the
// operator carries the alternating phase (sqrt-1)^{K-L}, and whether it
// carries a fermion factor. Everything downstream is computed from these.

#include <array>
#include <string>
#include <vector>

#include "vf21/params.hpp"
#include "vf21/series.hpp"

namespace vf21 {

// Exact rational in r with denominator r (r - 2):
// value = (c2 r^2 + c1 r + c0) / (2 r (r - 2)) with integer c's.
struct RExponent {
    long long c2 = 0, c1 = 0, c0 = 0;

    double eval(double r) const {
        return (c2 * r * r + c1 * r + c0) / (2.0 * r * (r - 2.0));
    }
    bool operator==(const RExponent& o) const {
        return c2 == o.c2 && c1 == o.c1 && c0 == o.c0;
    }
    RExponent operator+(const RExponent& o) const {
        return {c2 + o.c2, c1 + o.c1, c0 + o.c0};
    }
    std::string str() const;
};

enum class OpTag { Phi1, A, Ahat, Psi1, B, Bhat, Wop };

OpTag op_tag_from(const std::string& name);
std::string op_name(OpTag t);

// lambda(m) ratio indices a, b refer to moduli in {2, r, r''}; Unit means
// the constant dressing.
enum class ModLabel { Two, R, Rpp };

struct ModeProfile {
    OpTag tag;
    int lam_sign;             // sgn of lambda
    bool lam_unit;            // lambda = sgn (a = b)
    ModLabel lam_num, lam_den;
    int dK, dL;               // lattice shift of the vertex factor
    RExponent aK, bL;         // monomial z^{aK K + bL L} exponents (x2 scaled in eval)
    bool klein;               // carries (sqrt-1)^{K-L}
    bool fermion;             // carries phi(w)
};

const ModeProfile& profile(OpTag t);

// Numeric lambda(m) at the parameter point (used by cross-checks).
double lambda_of(const ModeProfile& pr, int m, const ModelParams& params);

// Contraction data of the ordered product O1(z1) O2(z2):
//   O1 O2 = sign * z1^{expo} * poch(c1 y; q)^{pw} / poch(c2 y; q)^{pw} * :O1 O2:
// with y = z2/z1 and pw = +1; exponents exact in r.
struct Contraction {
    RExponent expo;
    int sign;                   // +1 / -1 from the alternating phase
    double arg_lo, arg_hi;      // pochhammer arguments c1 (numerator), c2 (denominator)
    double nome;                // q
    bool linear;                // true: prefactor is (1 - y)^{pm}
    int linear_pow;             // +1 or -1 when linear
    bool fermion_pair;          // both operators fermionic (additive f-channel)
};

Contraction contraction(OpTag o1, OpTag o2, const ModelParams& params);

// Series of the contraction prefactor in y to order n (constant term 1).
DSeries contraction_series(OpTag o1, OpTag o2, int n, const ModelParams& params);

// Converged numeric value of the prefactor at z1 = x^{2u1}, z2 = x^{2u2}
// (products converge for all argument magnitudes).
double contraction_value(OpTag o1, OpTag o2, double u1, double u2,
                         const ModelParams& params);

// Fermion pair function <phi(z) phi(w)> as a series in y = w/z:
// NS sector: sum over m in Z+1/2 (reported on the half-integer grid via
// coefficient index 2m); Ramond: integer m >= 1 plus the constant 1/(x+1/x).
enum class FermionSector { NS, Ramond };
DSeries fermion_contraction(FermionSector sector, int n, const ModelParams& params);

// Appendix-table pair list (printed side of check_ope).
struct PrintedPair {
    std::string name;       // e.g. "Phi1Phi1"
    OpTag o1, o2;
    RExponent expo;
    int sign;
    double arg_lo, arg_hi, nome;
    bool linear;
    int linear_pow;
    double rescale;         // expansion-variable rescale for well-conditioned
                            // coefficient comparison (>= 1)
};
const std::vector<PrintedPair>& printed_pairs(const ModelParams& params);

DSeries printed_series(const PrintedPair& pp, int n, const ModelParams& params);
double printed_value(const PrintedPair& pp, double u1, double u2, const ModelParams& params);

} // namespace vf21

#endif
