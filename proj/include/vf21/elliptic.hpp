#ifndef VF21_ELLIPTIC_HPP
#define VF21_ELLIPTIC_HPP

// Theta-type special functions used by every other module.
//
// Two independent evaluation routes are kept side by side:
//   - the product route, built from truncated q-Pochhammer products at
//     nome x^{2t} (the primary route for all lattice quantities), and
//   - the series route, the characteristic theta sum at the complementary
//     nome exp(-pi^2/(eps t)).
// Their agreement is a modular-transformation identity and is re-checked
// by the test suite on every run.
//
// Conventions: x = e^{-eps};
//   Theta_q(z)  = (z;q) (q/z;q) (q;q)    (also as a bilateral sum),
//   [u]   = x^{u^2/r - u} Theta_{x^{2r}}(x^{2u}),
//   {u}   = x^{u^2/r - u} Theta_{x^{2r}}(-x^{2u}),
//   [[u]] = x^{u^2/r} Theta_{x^{2r}}(x^{2u+r}),
//   {{u}} = x^{u^2/r} Theta_{x^{2r}}(-x^{2u+r}),
// and h_j^{(t)}(u) = theta_j(u/t ; i pi/(eps t)) with the product forms
//   h_1^{(t)} = sqrt(eps t/pi) e^{-eps t/4} [u]_t,   h_4^{(t)} likewise with {u}_t,
//   h_2^{(t)} = sqrt(eps t/pi) [[u]]_t,              h_3^{(t)} with {{u}}_t.

#include <complex>
#include <vector>

#include "vf21/params.hpp"

namespace vf21 {

using cplx = std::complex<double>;

// (z; q)_inf truncated at params.product_cutoff factors.
double qpoch(double z, double q, const ModelParams& params);
cplx qpoch(cplx z, double q, const ModelParams& params);

// Multi-base product (z; q_1, ..., q_m)_inf over i_1, ..., i_m >= 0.
double qpoch_multi(double z, const std::vector<double>& qs, const ModelParams& params);
cplx qpoch_multi(cplx z, const std::vector<double>& qs, const ModelParams& params);

// Theta_q(z) by the triple product.
double theta_q(double z, double q, const ModelParams& params);
// Theta_q(z) by the bilateral sum (independent route).
double theta_q_sum(double z, double q, const ModelParams& params);

// Characteristic theta sum; Im(tau) > 0 required.
cplx theta_char(double a, double b, cplx u, cplx tau, const ModelParams& params);
// theta_j, j = 1..4, via (a,b) = (1/2,-1/2), (1/2,0), (0,0), (0,1/2).
cplx jtheta(int j, cplx u, cplx tau, const ModelParams& params);

// Brackets at modulus r - r_shift.
double bracket(double u, BracketKind kind, const ModelParams& params, int r_shift = 0);

// [u] at an arbitrary modulus t (used by the h functions).
double bracket_gen(double u, BracketKind kind, double t, const ModelParams& params);

// h_j^{(t)}(u), product route (primary).
double h_func(int j, double t, double u, const ModelParams& params);
// h_j^{(t)}(u), theta-series route (oracle).
double h_func_series(int j, double t, double u, const ModelParams& params);

// Falling bracket product [u]_m = [u][u-1]...[u-m+1] and the
// bracket binomial [u; m] = [u]_m / [m]_m, at modulus r - r_shift.
double bracket_falling(double u, int m, const ModelParams& params, int r_shift = 0);
double bracket_binom(double u, int m, const ModelParams& params, int r_shift = 0);

// Shorthand for the plain bracket [u] at modulus r - r_shift.
inline double br(double u, const ModelParams& params, int r_shift = 0) {
    return bracket(u, BracketKind::Square, params, r_shift);
}

// Guard: throws pole_error when |value| < floor * scale.
inline double guard_denominator(double value, double scale, const char* what) {
    if (std::abs(value) < 1e-13 * std::abs(scale))
        throw pole_error(std::string("denominator too close to zero: ") + what);
    return value;
}

} // namespace vf21

#endif
