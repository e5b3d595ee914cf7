#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "qwalk/simd/kernels.hpp"

using namespace qwalk::simd;

namespace {

using GridFn = void (*)(std::span<const double>, std::span<const double>, double, double,
                        std::span<double>);
using AxpyFn = void (*)(double, double, std::span<const double>, std::span<double>,
                        std::span<double>);
using Rank1Fn = void (*)(double, std::span<const double>, std::span<double>);

struct Variant {
    Isa isa;
    GridFn grid;
    AxpyFn axpy;
    Rank1Fn rank1;
};

std::vector<Variant> vector_variants() {
    std::vector<Variant> out;
#if QWALK_HAVE_AVX2_VARIANT
    if (isa_available(Isa::Avx2))
        out.push_back({Isa::Avx2, avx2::phase_power_grid, avx2::complex_axpy, avx2::symmetric_rank1_update});
#endif
#if QWALK_HAVE_NEON_VARIANT
    if (isa_available(Isa::Neon))
        out.push_back({Isa::Neon, neon::phase_power_grid, neon::complex_axpy, neon::symmetric_rank1_update});
#endif
    return out;
}

std::vector<double> random_vec(std::size_t n, std::mt19937_64& rng, double lo = -1, double hi = 1) {
    std::uniform_real_distribution<double> d(lo, hi);
    std::vector<double> v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

}  // namespace

TEST_CASE("scalar grid kernel matches a direct complex sum") {
    std::mt19937_64 rng(1);
    const auto theta = random_vec(5, rng, -4, 4);
    const auto coef = random_vec(5, rng);
    std::vector<double> out(300);
    scalar::phase_power_grid(theta, coef, 0.25, 0.01, out);
    for (std::size_t k = 0; k < out.size(); ++k) {
        std::complex<double> z = 0;
        const double t = 0.25 + double(k) * 0.01;
        for (std::size_t r = 0; r < theta.size(); ++r) z += coef[r] * std::polar(1.0, theta[r] * t);
        CHECK(out[k] == doctest::Approx(std::norm(z)).epsilon(1e-13));
    }
}

TEST_CASE("vector kernels agree with the scalar reference") {
    const auto variants = vector_variants();
    if (variants.empty()) MESSAGE("no vector variant on this machine; scalar only");
    std::mt19937_64 rng(2);
    for (const auto& v : variants) {
        CAPTURE(isa_name(v.isa));
        // odd lengths exercise the remainder loops; long grids cross reseed blocks
        for (std::size_t len : {1u, 3u, 4u, 7u, 63u, 64u, 65u, 1000u, 5003u}) {
            for (std::size_t terms : {1u, 2u, 5u, 9u}) {
                const auto theta = random_vec(terms, rng, -12, 12);
                const auto coef = random_vec(terms, rng);
                std::vector<double> ref(len), got(len);
                const double t0 = 0.0, step = M_PI / (100.0 * 12.0);
                scalar::phase_power_grid(theta, coef, t0, step, ref);
                v.grid(theta, coef, t0, step, got);
                double scale = 0;
                for (double c : coef) scale += std::abs(c);
                for (std::size_t k = 0; k < len; ++k)
                    CHECK(std::abs(got[k] - ref[k]) <= 1e-12 * scale * scale);
            }
            const auto src = random_vec(len, rng);
            auto re1 = random_vec(len, rng), im1 = random_vec(len, rng);
            auto re2 = re1, im2 = im1;
            scalar::complex_axpy(0.3, -0.7, src, re1, im1);
            v.axpy(0.3, -0.7, src, re2, im2);
            for (std::size_t k = 0; k < len; ++k) {
                CHECK(re2[k] == doctest::Approx(re1[k]).epsilon(1e-15));
                CHECK(im2[k] == doctest::Approx(im1[k]).epsilon(1e-15));
            }
        }
        for (std::size_t n : {1u, 2u, 5u, 8u, 13u}) {
            const auto vec = random_vec(n, rng);
            auto a = random_vec(n * n, rng);
            auto b = a;
            scalar::symmetric_rank1_update(0.9, vec, a);
            v.rank1(0.9, vec, b);
            for (std::size_t k = 0; k < n * n; ++k) CHECK(std::abs(a[k] - b[k]) < 1e-15);
        }
    }
}

TEST_CASE("dispatch selection and fallback") {
    const Isa before = active_isa();
    CHECK(set_active_isa(Isa::Scalar) == Isa::Scalar);
    CHECK(active_isa() == Isa::Scalar);
    // an unavailable variant falls back to scalar
    for (Isa isa : {Isa::Avx2, Isa::Neon}) {
        const Isa got = set_active_isa(isa);
        CHECK((got == isa) == isa_available(isa));
        if (!isa_available(isa)) CHECK(got == Isa::Scalar);
    }
    set_active_isa(before);
    CHECK(isa_available(Isa::Scalar));
    CHECK(isa_name(Isa::Scalar) == "scalar");
}
