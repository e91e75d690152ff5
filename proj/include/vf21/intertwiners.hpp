#ifndef VF21_INTERTWINERS_HPP
#define VF21_INTERTWINERS_HPP

// Intertwining vectors relating the vertex models to the face models, their
// duals, and the scalar L-operator built from a dual/non-dual pair.
//
// Index conventions: tau(u)^k_{k'} and t(u)^k_{k'} carry upper height k and
// lower height k'; duals t*(u)_k^{k'} carry base k (subscript) and target
// k' (superscript). Components are ordered j = +1, 0, -1 (and eps = +, -
// for spin-1/2).

#include <array>

#include "vf21/params.hpp"

namespace vf21 {

using Vec2 = std::array<double, 2>;
using Vec3 = std::array<double, 3>;

// Spin-1/2 intertwining vector tau(u)^k_{k +- 1}; scalar factor f(u) == 1.
Vec2 tau(double u, long long k, long long k_prime, const ModelParams& params);

// Fused intertwining vector t(u)^k_{k'}, k' in {k, k +- 2}.
Vec3 t_fused(double u, long long k, long long k_prime, const ModelParams& params,
             int r_shift = 0);

// Dual fused vector t*(u)_k^{k'}. The k' = k row of the printed tabulation
// omits the h1(k -+ 1) path weights and one h1(k) factor; the form used here
// restores them (it is the exact inverse of the t-matrix and is validated
// against the inversion relations).
Vec3 t_star(double u, long long k, long long k_prime, const ModelParams& params,
            int r_shift = 0);

// t''*(u) = t*(u; eps, r-2).
inline Vec3 t_star_dprime(double u, long long l, long long l_prime,
                          const ModelParams& params) {
    return t_star(u, l, l_prime, params, 2);
}

// L[a0', a1'; a0, a1 | u0] = sum_j t*_j(-u0)_{a0}^{a1} t^j(-u0)^{a0'}_{a1'}.
double l_op_sum(long long a0p, long long a1p, long long a0, long long a1, double u0,
                const ModelParams& params, int r_shift = 0);

// Same symbol from the closed five-pattern table.
double l_op_explicit(long long k_prime, long long k_prime2, long long k, long long k2,
                     double u0, const ModelParams& params, int r_shift = 0);

// L'' = l_op_explicit with r -> r-2.
inline double l_dprime(long long l_pp, long long l_p, long long l1, long long l,
                       double u, const ModelParams& params) {
    return l_op_explicit(l_pp, l_p, l1, l, u, params, 2);
}

// lim_{u0 -> u-1/2} [u0-u+1/2] L[k',k''; k,k-2 | u0-u] by two-point
// Richardson extrapolation with offsets delta and delta/10.
double l_residue_limit(long long k_prime, long long k_dprime, long long k, double u,
                       const ModelParams& params, double delta = 1e-4);

} // namespace vf21

#endif
