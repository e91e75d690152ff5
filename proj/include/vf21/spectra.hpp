#ifndef VF21_SPECTRA_HPP
#define VF21_SPECTRA_HPP

// Corner-transfer-matrix spectra as exact q-series: path-space enumeration
// by dynamic programming, the closed product characters, level-2 string
// functions, the height-summed character relation, and the free-field
// graded traces.

#include "vf21/params.hpp"
#include "vf21/series.hpp"

namespace vf21 {

// Bond energy |s + s'| of the vertex path space.
int h_bond(int s, int s_prime);

// tr x^{2H} over the sector-i vertex path space, as an exact series in x^2
// up to degree e_max: coefficient[e] counts paths of energy e.
ISeries vertex_partition_series(int i, int e_max);

// Same by brute force over all assignments of the first `sites` spins
// (ground beyond); used as the DP oracle for small cutoffs.
ISeries vertex_partition_brute(int i, int e_max, int sites);

// Product side of the character: (-x^2;x^2)(-x^4;x^4) for i = 0,2 and
// (-x^2;x^2)(-x^2;x^4) for i = 1, expanded in x^2.
ISeries chi_product_series(int i, int e_max);

// Face path space: tr x^{2H} with H = (1/2) sum_j j |k_{j+1} - k_{j-1}|,
// boundary heights alternating l+i / l+2-i, k_0 = k. Series in x^2.
ISeries face_partition_series(int i, long long l, long long k, int e_max);
ISeries face_partition_brute(int i, long long l, long long k, int e_max, int sites);

// String function c^{lambda_i}_{lambda_j}(x^4) as a series in x^2 (exact
// integer coefficients after the leading monomial is factored out).
// For (1,1)-type the extra x^{1/2} monomial is reported separately via
// `half_unit_lead` (true when the series carries the x^{1/2} factor).
struct StringSeries {
    ISeries series;        // step 2 (powers of x^2)
    bool defined = true;   // false for parity-mismatched (i, j)
    bool half_unit_lead = false;
};
StringSeries string_function_series(int i, int j, int e_max);

// Numeric value of c^{lambda_i}_{lambda_j}(x^4) at the parameter point.
double string_function_value(int i, int j, const ModelParams& params);

// Numeric chi^{(i)} products.
double chi_value(int i, const ModelParams& params);

// Height-summed character relation: returns (lhs, rhs, tail_bound) where
//   lhs = sum_{|k-l| <= K_max} [k] c^{..}(x^4) x^{(r/2r'')l^2 - lk + (r''/2r)k^2},
//   rhs = [l]'' chi^{(i)}.
struct SumRuleResult {
    double lhs, rhs, tail;
};
SumRuleResult chi_sum_rule(int i, long long l, int k_max, const ModelParams& params);

// Graded free-field traces: boson tower enumerated as partitions (parts m,
// weight 4m), fermion tower as strict partitions over the sector's mode set
// (weight 4n). Returns the product trace as an exact series in x^2 and the
// string-function assembly it must match.
struct TraceCheck {
    ISeries lhs;   // enumerated boson x fermion tower
    ISeries rhs;   // string-function assembly
};
TraceCheck boson_fermion_trace(int i, int e_max);

} // namespace vf21

#endif
