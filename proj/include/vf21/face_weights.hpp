#ifndef VF21_FACE_WEIGHTS_HPP
#define VF21_FACE_WEIGHTS_HPP

// Boltzmann weights of the unrestricted SOS model and of its 2x2 fusion.
// A face configuration is written W[c,d;b,a|u] with the four heights ordered
// clockwise from the SE corner: a = SE, b = SW, c = NW, d = NE; the weight
// vanishes unless all four edges (a,b), (a,d), (b,c), (d,c) are admissible
// (|step| = 1 for spin-1/2, step in {-2,0,2} for the fused model).

#include "vf21/params.hpp"

namespace vf21 {

inline bool adm_half(long long a, long long b) { return std::abs(a - b) == 1; }
inline bool adm_fused(long long a, long long b) {
    long long d = a - b;
    return d == 0 || d == 2 || d == -2;
}

// spin-1/2 SOS weight (normalized by 1/kappa_bar).
double w_sos(long long c, long long d, long long b, long long a, double u,
             const ModelParams& params);

// Unnormalized fused weight table W-bar_22 (r -> r - r_shift).
double wbar22(long long c, long long d, long long b, long long a, double u,
              const ModelParams& params, int r_shift = 0);

// Normalized fused weight W_22 = W-bar / (kappa_bar_22 * [2-u; 2]).
double w22(long long c, long long d, long long b, long long a, double u,
           const ModelParams& params, int r_shift = 0);

// W''_22 = -W_22 with r -> r-2.
double w22_dprime(long long c, long long d, long long b, long long a, double u,
                  const ModelParams& params);

// Clears the per-thread memo table (automatic when params change).
void clear_face_memo();

} // namespace vf21

#endif
