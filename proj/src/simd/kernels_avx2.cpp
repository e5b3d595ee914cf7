// AVX2 + FMA variants. Functions carry a target attribute instead of the whole
// file being built with -mavx2, so no AVX2 code leaks into inline functions
// shared with the scalar path.

#include "qwalk/simd/kernels.hpp"

#if QWALK_HAVE_AVX2_VARIANT

#include <immintrin.h>

#include <algorithm>
#include <cmath>

#define QWALK_AVX2 __attribute__((target("avx2,fma")))

namespace qwalk::simd::avx2 {

namespace {

// Grid points per block. Phases are reseeded with exact sin/cos at the start
// of every block and advanced by complex rotation inside it, which keeps the
// recurrence error at a few ulps.
constexpr std::size_t kBlock = 64;

}  // namespace

QWALK_AVX2 void phase_power_grid(std::span<const double> theta, std::span<const double> coef,
                                 double t0, double step, std::span<double> out) {
    const std::size_t m = theta.size();
    const std::size_t count = out.size();
    alignas(32) double acc_re[kBlock];
    alignas(32) double acc_im[kBlock];

    for (std::size_t k0 = 0; k0 < count; k0 += kBlock) {
        const std::size_t len = std::min(kBlock, count - k0);
        const std::size_t vecs = (len + 3) / 4;
        for (std::size_t i = 0; i < vecs * 4; ++i) acc_re[i] = acc_im[i] = 0.0;

        for (std::size_t r = 0; r < m; ++r) {
            alignas(32) double zr[4], zi[4];
            for (int j = 0; j < 4; ++j) {
                const double phase = theta[r] * (t0 + double(k0 + j) * step);
                zr[j] = std::cos(phase);
                zi[j] = std::sin(phase);
            }
            const double rot = theta[r] * 4.0 * step;
            const __m256d wr = _mm256_set1_pd(std::cos(rot));
            const __m256d wi = _mm256_set1_pd(std::sin(rot));
            const __m256d c = _mm256_set1_pd(coef[r]);
            __m256d vr = _mm256_load_pd(zr);
            __m256d vi = _mm256_load_pd(zi);
            for (std::size_t s = 0; s < vecs; ++s) {
                double* pr = acc_re + 4 * s;
                double* pi = acc_im + 4 * s;
                _mm256_store_pd(pr, _mm256_fmadd_pd(c, vr, _mm256_load_pd(pr)));
                _mm256_store_pd(pi, _mm256_fmadd_pd(c, vi, _mm256_load_pd(pi)));
                // (vr + i vi) * (wr + i wi)
                const __m256d nr = _mm256_fmsub_pd(vr, wr, _mm256_mul_pd(vi, wi));
                const __m256d ni = _mm256_fmadd_pd(vr, wi, _mm256_mul_pd(vi, wr));
                vr = nr;
                vi = ni;
            }
        }

        std::size_t i = 0;
        for (; i + 4 <= len; i += 4) {
            const __m256d re = _mm256_load_pd(acc_re + i);
            const __m256d im = _mm256_load_pd(acc_im + i);
            _mm256_storeu_pd(out.data() + k0 + i, _mm256_fmadd_pd(re, re, _mm256_mul_pd(im, im)));
        }
        for (; i < len; ++i) out[k0 + i] = acc_re[i] * acc_re[i] + acc_im[i] * acc_im[i];
    }
}

QWALK_AVX2 void complex_axpy(double c, double s, std::span<const double> src,
                             std::span<double> re, std::span<double> im) {
    const std::size_t n = src.size();
    const __m256d vc = _mm256_set1_pd(c);
    const __m256d vs = _mm256_set1_pd(s);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d x = _mm256_loadu_pd(src.data() + i);
        _mm256_storeu_pd(re.data() + i, _mm256_fmadd_pd(vc, x, _mm256_loadu_pd(re.data() + i)));
        _mm256_storeu_pd(im.data() + i, _mm256_fmadd_pd(vs, x, _mm256_loadu_pd(im.data() + i)));
    }
    for (; i < n; ++i) {
        re[i] = std::fma(c, src[i], re[i]);
        im[i] = std::fma(s, src[i], im[i]);
    }
}

QWALK_AVX2 void symmetric_rank1_update(double w, std::span<const double> v,
                                       std::span<double> out) {
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double wi = w * v[i];
        const __m256d vw = _mm256_set1_pd(wi);
        double* row = out.data() + i * n;
        std::size_t j = 0;
        for (; j + 4 <= n; j += 4)
            _mm256_storeu_pd(row + j, _mm256_fmadd_pd(vw, _mm256_loadu_pd(v.data() + j),
                                                      _mm256_loadu_pd(row + j)));
        for (; j < n; ++j) row[j] = std::fma(wi, v[j], row[j]);
    }
}

}  // namespace qwalk::simd::avx2

#endif
