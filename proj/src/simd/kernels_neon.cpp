// NEON variants (AArch64, two double lanes). Same blocking scheme as AVX2.

#include "qwalk/simd/kernels.hpp"

#if QWALK_HAVE_NEON_VARIANT

#include <arm_neon.h>

#include <algorithm>
#include <cmath>

namespace qwalk::simd::neon {

namespace {
constexpr std::size_t kBlock = 64;
}

void phase_power_grid(std::span<const double> theta, std::span<const double> coef, double t0,
                      double step, std::span<double> out) {
    const std::size_t m = theta.size();
    const std::size_t count = out.size();
    alignas(16) double acc_re[kBlock];
    alignas(16) double acc_im[kBlock];

    for (std::size_t k0 = 0; k0 < count; k0 += kBlock) {
        const std::size_t len = std::min(kBlock, count - k0);
        const std::size_t vecs = (len + 1) / 2;
        for (std::size_t i = 0; i < vecs * 2; ++i) acc_re[i] = acc_im[i] = 0.0;

        for (std::size_t r = 0; r < m; ++r) {
            double zr[2], zi[2];
            for (int j = 0; j < 2; ++j) {
                const double phase = theta[r] * (t0 + double(k0 + j) * step);
                zr[j] = std::cos(phase);
                zi[j] = std::sin(phase);
            }
            const double rot = theta[r] * 2.0 * step;
            const float64x2_t wr = vdupq_n_f64(std::cos(rot));
            const float64x2_t wi = vdupq_n_f64(std::sin(rot));
            const float64x2_t c = vdupq_n_f64(coef[r]);
            float64x2_t vr = vld1q_f64(zr);
            float64x2_t vi = vld1q_f64(zi);
            for (std::size_t s = 0; s < vecs; ++s) {
                double* pr = acc_re + 2 * s;
                double* pi = acc_im + 2 * s;
                vst1q_f64(pr, vfmaq_f64(vld1q_f64(pr), c, vr));
                vst1q_f64(pi, vfmaq_f64(vld1q_f64(pi), c, vi));
                const float64x2_t nr = vfmsq_f64(vmulq_f64(vr, wr), vi, wi);
                const float64x2_t ni = vfmaq_f64(vmulq_f64(vi, wr), vr, wi);
                vr = nr;
                vi = ni;
            }
        }

        for (std::size_t i = 0; i < len; ++i)
            out[k0 + i] = acc_re[i] * acc_re[i] + acc_im[i] * acc_im[i];
    }
}

void complex_axpy(double c, double s, std::span<const double> src, std::span<double> re,
                  std::span<double> im) {
    const std::size_t n = src.size();
    const float64x2_t vc = vdupq_n_f64(c);
    const float64x2_t vs = vdupq_n_f64(s);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t x = vld1q_f64(src.data() + i);
        vst1q_f64(re.data() + i, vfmaq_f64(vld1q_f64(re.data() + i), vc, x));
        vst1q_f64(im.data() + i, vfmaq_f64(vld1q_f64(im.data() + i), vs, x));
    }
    for (; i < n; ++i) {
        re[i] = std::fma(c, src[i], re[i]);
        im[i] = std::fma(s, src[i], im[i]);
    }
}

void symmetric_rank1_update(double w, std::span<const double> v, std::span<double> out) {
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double wi = w * v[i];
        const float64x2_t vw = vdupq_n_f64(wi);
        double* row = out.data() + i * n;
        std::size_t j = 0;
        for (; j + 2 <= n; j += 2)
            vst1q_f64(row + j, vfmaq_f64(vld1q_f64(row + j), vw, vld1q_f64(v.data() + j)));
        for (; j < n; ++j) row[j] = std::fma(wi, v[j], row[j]);
    }
}

}  // namespace qwalk::simd::neon

#endif
