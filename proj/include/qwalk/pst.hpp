#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qwalk/exact.hpp"
#include "qwalk/spectral.hpp"

namespace qwalk {

/// Time-search parameters shared by the PST and periodicity searches.
struct SearchOptions {
    double t_max = 50.0;
    double threshold = 1.0 - 1e-9;
    /// Grid local maxima within this margin below the threshold are refined.
    double coarse_margin = 1e-2;
    double time_resolution = 1e-12;
};

/// |H(tau)_{u,v}| reached the declaration threshold. Found numerically.
struct PstEvent {
    Vertex u = 0, v = 0;
    double tau = 0.0;
    std::complex<double> gamma;  ///< H(tau)_{v,u} / |H(tau)_{v,u}|
    double fidelity = 0.0;
};

/// |H(t)_{u,v}|. Exactly symmetric in u and v.
double fidelity(const SpectralDecomposition& sd, Vertex u, Vertex v, double t);

/// Earliest t in (0, t_max] with fidelity >= threshold: a grid scan with step
/// pi / (100 max(rho, 1)), then golden-section refinement around each promising
/// grid maximum and a derivative-root polish of the peak time.
std::optional<PstEvent> search_pst(const SpectralDecomposition& sd, Vertex u, Vertex v,
                                   const SearchOptions& opts = {});

enum class SupportKind { Integer, Quadratic, Neither };

const char* to_string(SupportKind k) noexcept;

/// Classification of an eigenvalue support. Quadratic values are
/// (a + b_i sqrt(delta)) / 2 with integers a, b_i and square-free delta > 1.
struct SupportClass {
    SupportKind kind = SupportKind::Neither;
    BigInt a;
    BigInt delta;
    std::vector<BigInt> b_values;   ///< Quadratic: one per input value, same order
    std::vector<BigInt> integers;   ///< Integer: the rounded values, same order
};

/// Integer and Quadratic fits are confirmed by exact evaluation of `phi`.
/// Throws InvalidArgument when a value is not numerically a root of `phi`.
SupportClass classify_support(std::span<const double> values, const ExactPoly& phi,
                              double fit_tolerance = 1e-8);

struct PeriodResult {
    double tau = 0.0;
    double fidelity = 0.0;
    bool from_candidate = false;  ///< tau is 2 pi or 2 pi / sqrt(delta) from the support class
};

/// Earliest period found for vertex u. When `cls` is Integer the candidate
/// 2 pi is tested first, when Quadratic with a = 0 the candidate
/// 2 pi / sqrt(delta); the grid scan then looks for anything earlier.
std::optional<PeriodResult> check_periodicity(const SpectralDecomposition& sd, Vertex u,
                                              const SearchOptions& opts = {},
                                              const SupportClass* cls = nullptr);

/// Re-verification of a PST event and the block / sign structure it forces.
struct PstVerification {
    double fidelity = 0.0;
    double transfer_residual_uv = 0.0;    ///< max |H(tau) e_u - gamma e_v|
    double transfer_residual_vu = 0.0;    ///< max |H(tau) e_v - gamma e_u|
    double plus_eigvec_residual = 0.0;    ///< H(tau)(e_u + e_v) = gamma (e_u + e_v)
    double minus_eigvec_residual = 0.0;   ///< H(tau)(e_u - e_v) = -gamma (e_u - e_v)
    double period_u = 0.0, period_v = 0.0;  ///< |H(2 tau)_{u,u}|, |H(2 tau)_{v,v}|
    double double_time_phase_error = 0.0;   ///< |H(2 tau)_{u,u} - gamma^2|
    std::vector<std::size_t> support;        ///< support indices of u
    std::vector<int> signs;                  ///< s_r per support index
    double sign_phase_residual = 0.0;        ///< max |exp(i theta_r tau) / gamma - s_r|
    double sign_vector_residual = 0.0;       ///< max |E_r e_v - s_r E_r e_u|
    double f_plus_f_minus = 0.0;             ///< max |(F+ F-)_{ij}|
    bool f_plus_nonzero = false, f_minus_nonzero = false;
    bool passed = false;
};

/// Throws Error when the event no longer meets `threshold` (stale input).
PstVerification verify_pst_event(const SpectralDecomposition& sd, const PstEvent& event,
                                 double threshold = 1.0 - 1e-9, double tolerance = 1e-6,
                                 double support_tolerance = kDefaultSupportTolerance);

struct RationalOptions {
    std::int64_t denominator_bound = 1000;
    double residual = 1e-9;
};

/// p/q with q <= bound and |x - p/q| < residual, from continued-fraction
/// convergents; empty when none exists.
std::optional<std::pair<std::int64_t, std::int64_t>> rational_reconstruct(double x,
                                                                          const RationalOptions& opts);

struct RatioResult {
    bool holds = true;
    /// Failing quadruple (k, l, r, s) as indices into the input values: the
    /// ratio (v_k - v_l) / (v_r - v_s) is not rational.
    std::optional<std::array<std::size_t, 4>> witness;
    double witness_ratio = 0.0;
};

/// All ratios (theta_k - theta_l) / (theta_r - theta_s) rational, with the
/// largest-gap pair as the fixed denominator. Needs >= 2 distinct values.
RatioResult ratio_condition(std::span<const double> values, const RationalOptions& opts = {});

/// rho^2 within 1e-8 of an integer m, confirmed exactly: phi(sqrt m) = 0.
bool rho_squared_integer(const SpectralDecomposition& sd, const ExactPoly& phi);

struct FinitenessBound {
    std::int64_t support_bound = 0;
    std::int64_t eccentricity_bound = 0;
    BigInt vertex_bound;
};

/// Bounds for connected graphs of maximum valency k admitting PST:
/// support size <= ceil((2k+1) sqrt 2), same bound on eccentricity of u, and
/// the Moore-type count 1 + sum_{s=1..B} k (k-1)^{s-1} on the order.
FinitenessBound finiteness_bound(std::int64_t k);

}  // namespace qwalk
