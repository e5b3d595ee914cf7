#include <cmath>

#include "qwalk/simd/kernels.hpp"

namespace qwalk::simd::scalar {

// Direct evaluation with one sin/cos per term and grid point. This is the
// reference the vector variants are measured against.
void phase_power_grid(std::span<const double> theta, std::span<const double> coef, double t0,
                      double step, std::span<double> out) {
    const std::size_t m = theta.size();
    for (std::size_t k = 0; k < out.size(); ++k) {
        const double t = t0 + double(k) * step;
        double re = 0.0, im = 0.0;
        for (std::size_t r = 0; r < m; ++r) {
            const double phase = theta[r] * t;
            re += coef[r] * std::cos(phase);
            im += coef[r] * std::sin(phase);
        }
        out[k] = re * re + im * im;
    }
}

void complex_axpy(double c, double s, std::span<const double> src, std::span<double> re,
                  std::span<double> im) {
    for (std::size_t i = 0; i < src.size(); ++i) {
        re[i] += c * src[i];
        im[i] += s * src[i];
    }
}

void symmetric_rank1_update(double w, std::span<const double> v, std::span<double> out) {
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double wi = w * v[i];
        double* row = out.data() + i * n;
        for (std::size_t j = 0; j < n; ++j) row[j] += wi * v[j];
    }
}

}  // namespace qwalk::simd::scalar
