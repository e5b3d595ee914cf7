#pragma once

// Data-parallel inner loops of the spectral engine and the time search.
//
// Each kernel has a scalar reference implementation and vector variants
// (AVX2+FMA on x86-64, NEON on AArch64). The variant is chosen once at
// runtime from CPU features; QWALK_SIMD=scalar|avx2|neon overrides the
// choice. Vector variants agree with the scalar reference to rounding,
// which tests/test_simd.cpp checks.

#include <cstddef>
#include <span>
#include <string_view>

namespace qwalk::simd {

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa) noexcept;

/// True when this binary carries the variant and the CPU can run it.
bool isa_available(Isa isa) noexcept;

/// The variant used by the dispatched entry points below.
Isa active_isa() noexcept;

/// Forces a variant (tests and benchmarking). Falls back to Scalar when the
/// requested one is unavailable; returns what was actually selected.
Isa set_active_isa(Isa isa) noexcept;

/// out[k] = |sum_r coef[r] * exp(i * theta[r] * (t0 + k * step))|^2
/// for k = 0 .. out.size()-1.
void phase_power_grid(std::span<const double> theta, std::span<const double> coef, double t0,
                      double step, std::span<double> out);

/// re[i] += c * src[i]; im[i] += s * src[i]
void complex_axpy(double c, double s, std::span<const double> src, std::span<double> re,
                  std::span<double> im);

/// out (n x n, row-major) += w * v v^T, with n = v.size().
void symmetric_rank1_update(double w, std::span<const double> v, std::span<double> out);

// Per-variant entry points, exposed for equivalence tests.
namespace scalar {
void phase_power_grid(std::span<const double>, std::span<const double>, double, double,
                      std::span<double>);
void complex_axpy(double, double, std::span<const double>, std::span<double>, std::span<double>);
void symmetric_rank1_update(double, std::span<const double>, std::span<double>);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define QWALK_HAVE_AVX2_VARIANT 1
namespace avx2 {
void phase_power_grid(std::span<const double>, std::span<const double>, double, double,
                      std::span<double>);
void complex_axpy(double, double, std::span<const double>, std::span<double>, std::span<double>);
void symmetric_rank1_update(double, std::span<const double>, std::span<double>);
}  // namespace avx2
#else
#define QWALK_HAVE_AVX2_VARIANT 0
#endif

#if defined(__aarch64__) || defined(_M_ARM64)
#define QWALK_HAVE_NEON_VARIANT 1
namespace neon {
void phase_power_grid(std::span<const double>, std::span<const double>, double, double,
                      std::span<double>);
void complex_axpy(double, double, std::span<const double>, std::span<double>, std::span<double>);
void symmetric_rank1_update(double, std::span<const double>, std::span<double>);
}  // namespace neon
#else
#define QWALK_HAVE_NEON_VARIANT 0
#endif

}  // namespace qwalk::simd
