#ifndef VF21_PARAMS_HPP
#define VF21_PARAMS_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace vf21 {

// Raised when an argument leaves the validity domain of a formula
// (non-convergent nome, base outside (0,1), bad index, ...).
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// Raised when an evaluation lands too close to a zero of a denominator.
// The identity suite catches this and resamples; it is never silently inverted.
class pole_error : public std::runtime_error {
public:
    explicit pole_error(const std::string& what) : std::runtime_error(what) {}
};

// Global parameter point of the model in the principal regime
// (eps > 0, r > 2, 0 < u < 1), plus truncation and tolerance knobs.
struct ModelParams {
    double epsilon;       // eps > 0
    double x;             // x = exp(-eps), 0 < x < 1
    double r;             // r > 2
    double rel_tol = 1e-10;
    int product_cutoff = 60;   // factors kept per (z;q)_inf
    int series_order = 12;     // default truncation order N / E_max

    static ModelParams from_x(double x, double r) {
        if (!(x > 0.0 && x < 1.0)) throw domain_error("x must lie in (0,1)");
        if (!(r > 2.0)) throw domain_error("r must exceed 2");
        ModelParams p;
        p.x = x;
        p.epsilon = -std::log(x);
        p.r = r;
        return p;
    }

    static ModelParams from_epsilon(double eps, double r) {
        if (!(eps > 0.0)) throw domain_error("epsilon must be positive");
        return from_x(std::exp(-eps), r);
    }

    double r_prime() const { return r - 1.0; }    // r' = r - 1
    double r_dprime() const { return r - 2.0; }   // r'' = r - 2

    // Same point with the modulus shifted r -> r - shift (shift in {0,1,2}).
    ModelParams shifted(int shift) const {
        if (shift == 0) return *this;
        if (r - shift <= 0.0) throw domain_error("r - shift must stay positive");
        ModelParams p = *this;
        p.r = r - shift;
        return p;
    }
};

// Bracket flavors [u], {u}, [[u]], {{u}} with an optional modulus shift
// r -> r - r_shift (r_shift in {0,1,2} selecting r, r', r'').
enum class BracketKind { Square, Curly, DSquare, DCurly };

inline ModelParams default_params() { return ModelParams::from_x(0.3, 4.5); }

} // namespace vf21

#endif
