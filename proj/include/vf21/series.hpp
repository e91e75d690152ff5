#ifndef VF21_SERIES_HPP
#define VF21_SERIES_HPP

// Truncated power series with a declared exponent step. The enumeration side
// of the character checks uses exact 64-bit integer coefficients; the product
// side reuses the same arithmetic over doubles.

#include <cstdint>
#include <vector>

#include "vf21/params.hpp"

namespace vf21 {

template <typename T>
struct TruncatedSeries {
    int step = 1;                 // exponent units (1 = x, 2 = x^2, 4 = x^4)
    std::vector<T> c;             // c[n] multiplies x^{step*n}

    TruncatedSeries() = default;
    TruncatedSeries(int step_, int cutoff) : step(step_), c(cutoff + 1, T(0)) {}

    int cutoff() const { return static_cast<int>(c.size()) - 1; }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        if (o.step != step || o.c.size() != c.size())
            throw domain_error("series: mismatched shapes");
        for (size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
        return *this;
    }

    TruncatedSeries operator*(const TruncatedSeries& o) const {
        if (o.step != step) throw domain_error("series: mismatched steps");
        TruncatedSeries out(step, cutoff());
        const int n = cutoff();
        for (int i = 0; i <= n; ++i) {
            if (c[i] == T(0)) continue;
            for (int j = 0; j + i <= n; ++j) out.c[i + j] += c[i] * o.c[j];
        }
        return out;
    }

    // multiply in place by (1 + s * x^{step*e}), s = +-1
    void mul_one_plus(int e, int sgn) {
        const int n = cutoff();
        for (int k = n; k >= e; --k) c[k] += T(sgn) * c[k - e];
    }

    // multiply in place by 1/(1 - x^{step*e})
    void div_one_minus(int e) {
        const int n = cutoff();
        for (int k = e; k <= n; ++k) c[k] += c[k - e];
    }

    // index of the first nonzero coefficient, or -1
    int leading() const {
        for (int i = 0; i <= cutoff(); ++i)
            if (c[i] != T(0)) return i;
        return -1;
    }
};

using ISeries = TruncatedSeries<long long>;
using DSeries = TruncatedSeries<double>;

} // namespace vf21

#endif
