#include "qwalk/pst.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qwalk/error.hpp"
#include "qwalk/simd/kernels.hpp"

namespace qwalk {

namespace {

using cd = std::complex<double>;

// h(t) = sum_r coef_r exp(i theta_r t) for one matrix entry of H(t).
struct PhaseSeries {
    std::vector<double> theta, coef;

    PhaseSeries(const SpectralDecomposition& sd, Vertex u, Vertex v) {
        for (std::size_t r = 0; r < sd.size(); ++r) {
            const double c = sd.idempotents[r](u, v);
            if (c == 0.0) continue;
            theta.push_back(sd.eigenvalues[r]);
            coef.push_back(c);
        }
    }

    double power(double t) const {
        cd acc = 0.0;
        for (std::size_t r = 0; r < theta.size(); ++r)
            acc += coef[r] * cd(std::cos(theta[r] * t), std::sin(theta[r] * t));
        return std::norm(acc);
    }

    // d/dt |h(t)|^2 = 2 Re(conj(h) h').
    double slope(double t) const {
        cd h = 0.0, dh = 0.0;
        for (std::size_t r = 0; r < theta.size(); ++r) {
            const cd e(std::cos(theta[r] * t), std::sin(theta[r] * t));
            h += coef[r] * e;
            dh += cd(0.0, theta[r] * coef[r]) * e;
        }
        return 2.0 * (std::conj(h) * dh).real();
    }
};

struct Peak {
    double t = 0.0;
    double power = 0.0;
};

Peak golden_section_max(const PhaseSeries& s, double a, double b, double width) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
    double f1 = s.power(x1), f2 = s.power(x2);
    for (int it = 0; it < 200 && b - a > width; ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = s.power(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = s.power(x1);
        }
    }
    const double t = f1 >= f2 ? x1 : x2;
    return {t, std::max(f1, f2)};
}

// Locates the zero of the slope near `t` inside [lo, hi] by bisection. The
// power is flat at a peak, so this pins the time far more tightly than
// comparing power values can.
std::optional<Peak> polish_peak(const PhaseSeries& s, double t, double lo, double hi,
                                double resolution) {
    double w = 1e-7;
    double a = std::max(lo, t - w), b = std::min(hi, t + w);
    for (int grow = 0; grow < 20 && !(s.slope(a) > 0.0 && s.slope(b) < 0.0); ++grow) {
        w *= 4.0;
        a = std::max(lo, t - w);
        b = std::min(hi, t + w);
    }
    if (!(s.slope(a) > 0.0 && s.slope(b) < 0.0)) return std::nullopt;
    while (b - a > resolution) {
        const double m = 0.5 * (a + b);
        if (m <= a || m >= b) break;
        (s.slope(m) > 0.0 ? a : b) = m;
    }
    const double tm = 0.5 * (a + b);
    return Peak{tm, s.power(tm)};
}

double grid_step(const SpectralDecomposition& sd) {
    return std::numbers::pi / (100.0 * std::max(std::fabs(sd.spectral_radius), 1.0));
}

// Earliest refined peak in (0, t_end] whose magnitude reaches the threshold.
std::optional<Peak> earliest_peak(const PhaseSeries& s, double step, double t_end,
                                  const SearchOptions& opts) {
    if (!(t_end > 0.0)) return std::nullopt;
    const auto full = std::size_t(std::floor(t_end / step));
    std::vector<double> times, power(full);
    times.reserve(full + 2);
    times.push_back(0.0);
    for (std::size_t k = 1; k <= full; ++k) times.push_back(double(k) * step);
    simd::phase_power_grid(s.theta, s.coef, step, step, power);
    power.insert(power.begin(), s.power(0.0));
    if (times.back() < t_end) {
        times.push_back(t_end);
        power.push_back(s.power(t_end));
    }

    const double coarse = std::max(0.0, opts.threshold - opts.coarse_margin);
    const double coarse_power = coarse * coarse;
    const double want = opts.threshold * opts.threshold;
    for (std::size_t k = 1; k < times.size(); ++k) {
        const bool last = k + 1 == times.size();
        if (power[k] < coarse_power || power[k] < power[k - 1]) continue;
        if (!last && power[k] < power[k + 1]) continue;

        const double lo = times[k - 1];
        const double hi = last ? times[k] : times[k + 1];
        Peak best{times[k], power[k]};
        const Peak golden = golden_section_max(s, lo, hi, 1e-9);
        if (golden.power > best.power) best = golden;
        if (auto polished = polish_peak(s, best.t, lo, hi, opts.time_resolution);
            polished && polished->power >= best.power - 4e-16)
            best = *polished;
        if (best.t > 0.0 && best.power >= want) return best;
    }
    return std::nullopt;
}

}  // namespace

double fidelity(const SpectralDecomposition& sd, Vertex u, Vertex v, double t) {
    if (u >= sd.order || v >= sd.order) throw InvalidArgument("vertex out of range");
    return std::abs(transition_entry(sd, u, v, t));
}

std::optional<PstEvent> search_pst(const SpectralDecomposition& sd, Vertex u, Vertex v,
                                   const SearchOptions& opts) {
    if (u >= sd.order || v >= sd.order) throw InvalidArgument("vertex out of range");
    if (!(opts.t_max > 0.0)) throw InvalidArgument("t_max must be positive");
    if (!(opts.threshold > 0.0 && opts.threshold < 1.0))
        throw InvalidArgument("threshold must lie in (0, 1)");
    const PhaseSeries series(sd, u, v);
    const auto peak = earliest_peak(series, grid_step(sd), opts.t_max, opts);
    if (!peak) return std::nullopt;
    PstEvent ev;
    ev.u = u;
    ev.v = v;
    ev.tau = peak->t;
    const cd h = transition_entry(sd, v, u, ev.tau);
    ev.fidelity = std::abs(h);
    ev.gamma = h / ev.fidelity;
    if (ev.fidelity < opts.threshold) return std::nullopt;
    return ev;
}

std::optional<PeriodResult> check_periodicity(const SpectralDecomposition& sd, Vertex u,
                                              const SearchOptions& opts,
                                              const SupportClass* cls) {
    if (u >= sd.order) throw InvalidArgument("vertex out of range");
    const PhaseSeries series(sd, u, u);
    const double step = grid_step(sd);

    std::optional<PeriodResult> candidate;
    if (cls) {
        double tc = 0.0;
        if (cls->kind == SupportKind::Integer) {
            tc = 2.0 * std::numbers::pi;
        } else if (cls->kind == SupportKind::Quadratic && cls->a == 0) {
            tc = 2.0 * std::numbers::pi / std::sqrt(cls->delta.get_d());
        }
        if (tc > 0.0) {
            const double f = fidelity(sd, u, u, tc);
            if (f >= opts.threshold) candidate = PeriodResult{tc, f, true};
        }
    }

    const double end = candidate ? std::min(opts.t_max, candidate->tau) : opts.t_max;
    if (auto peak = earliest_peak(series, step, end, opts)) {
        // A scan hit that is just the candidate seen from the left is not earlier.
        if (!candidate || peak->t < candidate->tau - 1e-6)
            return PeriodResult{peak->t, fidelity(sd, u, u, peak->t), false};
    }
    return candidate;
}

PstVerification verify_pst_event(const SpectralDecomposition& sd, const PstEvent& event,
                                 double threshold, double tolerance, double support_tolerance) {
    const Vertex u = event.u, v = event.v;
    PstVerification out;
    out.fidelity = fidelity(sd, u, v, event.tau);
    if (out.fidelity < threshold)
        throw Error("PST event at tau = " + std::to_string(event.tau) +
                    " fails re-verification (fidelity " + std::to_string(out.fidelity) + ")");

    const std::size_t n = sd.order;
    const cd gamma = event.gamma;
    const Eigen::MatrixXcd h = transition_matrix(sd, event.tau);
    for (std::size_t w = 0; w < n; ++w) {
        const auto i = Eigen::Index(w);
        const cd want_uv = w == v ? gamma : cd(0.0);
        const cd want_vu = w == u ? gamma : cd(0.0);
        out.transfer_residual_uv = std::max(out.transfer_residual_uv, std::abs(h(i, u) - want_uv));
        out.transfer_residual_vu = std::max(out.transfer_residual_vu, std::abs(h(i, v) - want_vu));
        const double ind = (w == u || w == v) ? 1.0 : 0.0;
        const double sgn = w == u ? 1.0 : (w == v ? -1.0 : 0.0);
        out.plus_eigvec_residual =
            std::max(out.plus_eigvec_residual, std::abs(h(i, u) + h(i, v) - gamma * ind));
        out.minus_eigvec_residual =
            std::max(out.minus_eigvec_residual, std::abs(h(i, u) - h(i, v) + gamma * sgn));
    }

    const cd h2u = transition_entry(sd, u, u, 2.0 * event.tau);
    const cd h2v = transition_entry(sd, v, v, 2.0 * event.tau);
    out.period_u = std::abs(h2u);
    out.period_v = std::abs(h2v);
    out.double_time_phase_error = std::max(std::abs(h2u - gamma * gamma), std::abs(h2v - gamma * gamma));

    out.support = eigenvalue_support(sd, u, support_tolerance);
    Eigen::MatrixXd f_plus = Eigen::MatrixXd::Zero(Eigen::Index(n), Eigen::Index(n));
    Eigen::MatrixXd f_minus = f_plus;
    for (std::size_t r : out.support) {
        const double phase = sd.eigenvalues[r] * event.tau;
        const cd ratio = cd(std::cos(phase), std::sin(phase)) / gamma;
        const int s = ratio.real() >= 0.0 ? 1 : -1;
        out.signs.push_back(s);
        out.sign_phase_residual = std::max(out.sign_phase_residual, std::abs(ratio - double(s)));
        const auto& e = sd.idempotents[r];
        out.sign_vector_residual = std::max(
            out.sign_vector_residual, (e.col(v) - double(s) * e.col(u)).cwiseAbs().maxCoeff());
        (s > 0 ? f_plus : f_minus) += e;
    }
    out.f_plus_f_minus = (f_plus * f_minus).cwiseAbs().maxCoeff();
    out.f_plus_nonzero = f_plus.norm() > tolerance;
    out.f_minus_nonzero = f_minus.norm() > tolerance;

    out.passed = out.transfer_residual_uv <= tolerance && out.transfer_residual_vu <= tolerance &&
                 out.plus_eigvec_residual <= tolerance && out.minus_eigvec_residual <= tolerance &&
                 std::fabs(out.period_u - 1.0) <= tolerance &&
                 std::fabs(out.period_v - 1.0) <= tolerance &&
                 out.double_time_phase_error <= tolerance && out.sign_phase_residual <= tolerance &&
                 out.sign_vector_residual <= tolerance && out.f_plus_f_minus <= tolerance &&
                 out.f_plus_nonzero && out.f_minus_nonzero;
    return out;
}

std::optional<std::pair<std::int64_t, std::int64_t>> rational_reconstruct(
    double x, const RationalOptions& opts) {
    if (!std::isfinite(x)) return std::nullopt;
    // Convergents p_k / q_k of the continued fraction of x.
    std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    long double rest = x;
    for (int it = 0; it < 64; ++it) {
        const long double a = std::floor(rest);
        if (std::fabs(a) > 9e15L) break;
        const auto ai = std::int64_t(a);
        const std::int64_t p2 = ai * p1 + p0, q2 = ai * q1 + q0;
        if (q2 > opts.denominator_bound) break;
        if (std::fabs((long double)x - (long double)p2 / (long double)q2) < opts.residual)
            return std::pair{p2, q2};
        const long double frac = rest - a;
        if (frac == 0.0L) break;
        rest = 1.0L / frac;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
    }
    return std::nullopt;
}

RatioResult ratio_condition(std::span<const double> values, const RationalOptions& opts) {
    if (values.size() < 2) throw InvalidArgument("ratio condition needs two distinct values");
    std::size_t hi = 0, lo = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] > values[hi]) hi = i;
        if (values[i] < values[lo]) lo = i;
    }
    const double denom = values[hi] - values[lo];
    if (!(denom > 0.0)) throw InvalidArgument("ratio condition needs two distinct values");

    RatioResult out;
    for (std::size_t k = 0; k < values.size(); ++k)
        for (std::size_t l = k + 1; l < values.size(); ++l) {
            const double ratio = (values[k] - values[l]) / denom;
            if (!rational_reconstruct(ratio, opts)) {
                out.holds = false;
                out.witness = std::array{k, l, hi, lo};
                out.witness_ratio = ratio;
                return out;
            }
        }
    return out;
}

const char* to_string(SupportKind k) noexcept {
    switch (k) {
        case SupportKind::Integer: return "Integer";
        case SupportKind::Quadratic: return "Quadratic";
        case SupportKind::Neither: break;
    }
    return "Neither";
}

namespace {

bool near_integer(double x, double tol, BigInt& out) {
    const double r = std::round(x);
    if (std::fabs(x - r) >= tol) return false;
    out = BigInt(r);
    return true;
}

}  // namespace

SupportClass classify_support(std::span<const double> values, const ExactPoly& phi,
                              double fit_tolerance) {
    for (double x : values) {
        const long double scale = phi.magnitude(x);
        if (std::fabs(phi.evaluate((long double)x)) > 1e-6L * std::max(scale, 1.0L))
            throw InvalidArgument("value " + std::to_string(x) +
                                  " is not a root of the characteristic polynomial");
    }

    SupportClass out;
    // Integer: round, then confirm each rounded value is an exact root.
    {
        std::vector<BigInt> ints;
        bool ok = !values.empty();
        for (double x : values) {
            BigInt m;
            if (!near_integer(x, fit_tolerance, m) || phi.evaluate(m) != 0) {
                ok = false;
                break;
            }
            ints.push_back(m);
        }
        if (ok) {
            out.kind = SupportKind::Integer;
            out.integers = std::move(ints);
            return out;
        }
    }
    if (values.size() < 2) return out;

    // Quadratic: 4 (max - min)^2 = (b_max - b_min)^2 delta.
    const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
    const double spread = 4.0 * (*mx - *mn) * (*mx - *mn);
    BigInt m;
    if (!near_integer(spread, fit_tolerance * std::max(1.0, spread), m) || m <= 0) return out;
    const BigInt delta = square_free_part(m);
    if (delta == 1) return out;
    const double root = std::sqrt(delta.get_d());

    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = i; j < values.size(); ++j) {
            // Conjugates (a +- b sqrt delta) / 2 sum to a; an integer value a/2 pairs with itself.
            BigInt a;
            if (!near_integer(values[i] + values[j], fit_tolerance, a)) continue;
            std::vector<BigInt> bs;
            bool fits = true;
            for (double x : values) {
                BigInt b;
                if (!near_integer((2.0 * x - a.get_d()) / root, fit_tolerance, b)) {
                    fits = false;
                    break;
                }
                bs.push_back(b);
            }
            if (!fits) continue;
            const bool exact = std::all_of(bs.begin(), bs.end(), [&](const BigInt& b) {
                const auto [p, q] = phi.evaluate_quadratic(a, b, delta);
                return p == 0 && q == 0;
            });
            if (!exact) continue;
            out.kind = SupportKind::Quadratic;
            out.a = a;
            out.delta = delta;
            out.b_values = std::move(bs);
            return out;
        }
    return out;
}

bool rho_squared_integer(const SpectralDecomposition& sd, const ExactPoly& phi) {
    const double rho = sd.spectral_radius;
    BigInt m;
    if (!near_integer(rho * rho, 1e-8, m) || m < 0) return false;
    if (mpz_perfect_square_p(m.get_mpz_t())) {
        BigInt s;
        mpz_sqrt(s.get_mpz_t(), m.get_mpz_t());
        return phi.evaluate(s) == 0;
    }
    // (0 + 2 sqrt m) / 2 = sqrt m.
    const auto [p, q] = phi.evaluate_quadratic(0, 2, m);
    return p == 0 && q == 0;
}

FinitenessBound finiteness_bound(std::int64_t k) {
    if (k < 1) throw InvalidArgument("valency bound must be positive");
    FinitenessBound out;
    // ceil(m sqrt 2) = isqrt(2 m^2) + 1, since 2 m^2 is never a perfect square.
    const BigInt m = 2 * k + 1;
    BigInt two_m2 = 2 * m * m, s;
    mpz_sqrt(s.get_mpz_t(), two_m2.get_mpz_t());
    out.support_bound = BigInt(s + 1).get_si();
    out.eccentricity_bound = out.support_bound;
    out.vertex_bound = 1;
    BigInt layer = k;  // k (k-1)^{s-1}, with 0^0 = 1
    for (std::int64_t d = 1; d <= out.eccentricity_bound; ++d) {
        out.vertex_bound += layer;
        layer *= (k - 1);
    }
    return out;
}

}  // namespace qwalk
