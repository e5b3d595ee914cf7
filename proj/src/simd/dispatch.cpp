#include <atomic>
#include <cstdlib>
#include <string>

#include "qwalk/simd/kernels.hpp"

namespace qwalk::simd {

namespace {

Isa detect() noexcept {
    if (const char* env = std::getenv("QWALK_SIMD")) {
        const std::string want(env);
        if (want == "scalar") return Isa::Scalar;
        if (want == "avx2" && isa_available(Isa::Avx2)) return Isa::Avx2;
        if (want == "neon" && isa_available(Isa::Neon)) return Isa::Neon;
    }
    if (isa_available(Isa::Avx2)) return Isa::Avx2;
    if (isa_available(Isa::Neon)) return Isa::Neon;
    return Isa::Scalar;
}

std::atomic<Isa>& current() noexcept {
    static std::atomic<Isa> isa{detect()};
    return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
        case Isa::Avx2: return "avx2";
        case Isa::Neon: return "neon";
        case Isa::Scalar: break;
    }
    return "scalar";
}

bool isa_available(Isa isa) noexcept {
    switch (isa) {
        case Isa::Scalar: return true;
        case Isa::Avx2:
#if QWALK_HAVE_AVX2_VARIANT
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
        case Isa::Neon: return QWALK_HAVE_NEON_VARIANT != 0;
    }
    return false;
}

Isa active_isa() noexcept { return current().load(std::memory_order_relaxed); }

Isa set_active_isa(Isa isa) noexcept {
    if (!isa_available(isa)) isa = Isa::Scalar;
    current().store(isa, std::memory_order_relaxed);
    return isa;
}

#define QWALK_DISPATCH(fn, ...)                                      \
    switch (active_isa()) {                                          \
        case Isa::Avx2: QWALK_AVX2_CALL(fn, __VA_ARGS__); break;     \
        case Isa::Neon: QWALK_NEON_CALL(fn, __VA_ARGS__); break;     \
        case Isa::Scalar: break;                                     \
    }                                                                \
    return scalar::fn(__VA_ARGS__)

#if QWALK_HAVE_AVX2_VARIANT
#define QWALK_AVX2_CALL(fn, ...) return avx2::fn(__VA_ARGS__)
#else
#define QWALK_AVX2_CALL(fn, ...) (void)0
#endif
#if QWALK_HAVE_NEON_VARIANT
#define QWALK_NEON_CALL(fn, ...) return neon::fn(__VA_ARGS__)
#else
#define QWALK_NEON_CALL(fn, ...) (void)0
#endif

void phase_power_grid(std::span<const double> theta, std::span<const double> coef, double t0,
                      double step, std::span<double> out) {
    QWALK_DISPATCH(phase_power_grid, theta, coef, t0, step, out);
}

void complex_axpy(double c, double s, std::span<const double> src, std::span<double> re,
                  std::span<double> im) {
    QWALK_DISPATCH(complex_axpy, c, s, src, re, im);
}

void symmetric_rank1_update(double w, std::span<const double> v, std::span<double> out) {
    QWALK_DISPATCH(symmetric_rank1_update, w, v, out);
}

}  // namespace qwalk::simd
