#ifndef VF21_VERTEX_WEIGHTS_HPP
#define VF21_VERTEX_WEIGHTS_HPP

// R-matrices of the eight-vertex model and its spin-1 fusions, as dense
// weight tensors. Index convention throughout: entry(o1, o2, i1, i2) is
// R(u)^{o1 o2}_{i1 i2} acting as v_{i1} (x) v_{i2} -> sum entry * v_{o1} (x) v_{o2}.
// Spin-1 labels s in {-1,0,+1} are stored at index (1 - s); spin-1/2 labels
// eps = +,- at index 0,1.
//
// The spin-1 R-matrix is provided by two routes:
//   - r21v_table: the explicit 21-entry tabulation (charge conserving mod 4),
//     with the removable zero/pole pair at u = 1 factored out so the fusion
//     point is directly evaluable;
//   - r21v_fused: the 2x2 fusion composite of four spin-1/2 R-matrices,
//     projected on symmetric pairs. This route satisfies the Yang-Baxter
//     equation and the intertwiner exchange relations to machine precision.
// The two agree up to a change of fusion basis; the identity suite measures
// and reports their difference instead of assuming it.

#include <array>
#include <string>
#include <vector>

#include "vf21/params.hpp"

namespace vf21 {

enum class ModelTag { R8, R18, R21, R21Fused, S21, S21Fused, W, W22, W22pp };

// Dense real tensor entry(o1,o2,i1,i2) with per-slot dimensions.
struct WeightTensor {
    ModelTag tag;
    std::array<int, 4> dims;  // {d_o1, d_o2, d_i1, d_i2}
    double u = 0.0;
    std::vector<double> data;

    WeightTensor(ModelTag t, std::array<int, 4> d, double spectral)
        : tag(t), dims(d), u(spectral),
          data(static_cast<size_t>(d[0]) * d[1] * d[2] * d[3], 0.0) {}

    double& at(int o1, int o2, int i1, int i2) {
        return data[((static_cast<size_t>(o1) * dims[1] + o2) * dims[2] + i1) * dims[3] + i2];
    }
    double at(int o1, int o2, int i1, int i2) const {
        return data[((static_cast<size_t>(o1) * dims[1] + o2) * dims[2] + i1) * dims[3] + i2];
    }
    size_t size() const { return data.size(); }
};

// spin-1 label <-> slot index
inline int s1idx(int s) { return 1 - s; }

// kappa-bar normalizations
double kappa_bar(double u, const ModelParams& params);
double kappa_bar_12(double u, const ModelParams& params);
double kappa_bar_22(double u, const ModelParams& params);

// Eight-vertex R-matrix (2,2,2,2); R(0) = P.
WeightTensor r8v(double u, const ModelParams& params);

// Mixed spin-(1/2,1) R-matrix (2,3,2,3).
WeightTensor r18v(double u, const ModelParams& params);

// Spin-1 R-matrix, explicit 21-entry tabulation; valid for 0 <= u <= 1.
WeightTensor r21v_table(double u, const ModelParams& params);

// Spin-1 R-matrix, fusion-composite route; valid for u in (0,1) away from
// the composite's parameter poles (u = 0 returns the exchange limit).
WeightTensor r21v_fused(double u, const ModelParams& params);

// Default spin-1 route used by the identity suite.
inline WeightTensor r21v(double u, const ModelParams& params) {
    return r21v_fused(u, params);
}

// S-matrix: -R^{(1,1)}(u) with r -> r-2, either route.
WeightTensor s21v_table(double u, const ModelParams& params);
WeightTensor s21v_fused(double u, const ModelParams& params);
inline WeightTensor s21v(double u, const ModelParams& params) {
    return s21v_fused(u, params);
}

// Exchange permutation P on d x d.
WeightTensor exchange_tensor(int d);

// max |P R - sigma R| / max|R| for sigma = +1, -1; returns {res_plus, res_minus}.
std::array<double, 2> projector_residuals(const WeightTensor& R);

// Number of entries with |entry| > floor * max|entry|.
int structural_nonzeros(const WeightTensor& T, double floor = 1e-12);

} // namespace vf21

#endif
