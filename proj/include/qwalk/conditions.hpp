#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qwalk/exact.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/partition.hpp"
#include "qwalk/pst.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

struct AnalysisConfig {
    double t_max = 50.0;
    double threshold = 1.0 - 1e-9;
    double grouping_tolerance = 0.0;  ///< <= 0 selects max(1e-8, n rho 1e-12)
    double support_tolerance = kDefaultSupportTolerance;
    std::int64_t denominator_bound = 1000;
    double ratio_residual = 1e-9;
    std::size_t exact_cap = 64;
    std::size_t brute_force_cap = 10;
    unsigned jobs = 1;

    /// Throws InvalidArgument on non-positive tolerances or a threshold outside (0, 1).
    void validate() const;

    SearchOptions search() const { return {.t_max = t_max, .threshold = threshold}; }
    RationalOptions rational() const {
        return {.denominator_bound = denominator_bound, .residual = ratio_residual};
    }
};

/// Per-graph cache of everything the pair pipeline needs. Not thread-safe;
/// give each worker its own.
class GraphAnalysis {
public:
    GraphAnalysis(Graph g, AnalysisConfig config);

    const Graph& graph() const noexcept { return g_; }
    const AnalysisConfig& config() const noexcept { return cfg_; }
    std::size_t order() const noexcept { return g_.order(); }
    bool exact_allowed() const noexcept { return g_.order() <= cfg_.exact_cap; }

    const SpectralDecomposition& spectral() const noexcept { return sd_; }
    const ExactPoly& char_poly();
    const ExactPoly& deleted_char_poly(Vertex u);
    const WalkMatrix& walk(Vertex u);
    const IntMatrix& gram(Vertex u);
    const Partition& delta(Vertex u);
    const std::vector<std::size_t>& support(Vertex u);
    std::vector<double> support_values(Vertex u);
    const SupportClass& support_class(Vertex u);
    bool controllable(Vertex u);
    std::size_t walk_rank(Vertex u);
    std::size_t pole_count(Vertex u);
    bool rho_squared_integer();
    GapReport gap() const;

    bool cospectral_charpoly(Vertex u, Vertex v) { return deleted_char_poly(u) == deleted_char_poly(v); }
    bool cospectral_gram(Vertex u, Vertex v) { return gram(u) == gram(v); }

private:
    void require_exact() const;

    Graph g_;
    AnalysisConfig cfg_;
    SpectralDecomposition sd_;
    SpectralLimits limits_;
    std::optional<ExactPoly> phi_;
    std::optional<bool> rho_sq_;
    std::vector<std::optional<ExactPoly>> deleted_;
    std::vector<std::optional<WalkMatrix>> walk_;
    std::vector<std::optional<IntMatrix>> gram_;
    std::vector<std::optional<Partition>> delta_;
    std::vector<std::optional<std::vector<std::size_t>>> support_;
    std::vector<std::optional<SupportClass>> class_;
    std::vector<std::optional<bool>> controllable_;
    std::vector<std::optional<std::size_t>> rank_;
};

enum class Verdict { Pass, Fail, NotApplicable };

const char* to_string(Verdict v) noexcept;
inline Verdict verdict(bool ok) { return ok ? Verdict::Pass : Verdict::Fail; }

/// Every necessary condition for PST from u to v, evaluated without
/// short-circuiting, plus the outcome of the numeric time search.
struct TransferReport {
    Vertex u = 0, v = 0;

    bool cospectral_charpoly = false;
    bool cospectral_gram = false;
    Verdict cospectral = Verdict::Fail;

    Verdict equal_supports = Verdict::Fail;

    Verdict sign_condition = Verdict::Fail;
    double sign_residual = 0.0;  ///< max over r of min |E_r e_u -+ E_r e_v|

    Verdict ratio_condition = Verdict::Fail;
    RatioResult ratio;
    std::vector<double> common_support;

    Verdict support_class_ok = Verdict::Fail;
    SupportClass support_class;

    Verdict rho_squared_integer = Verdict::Fail;

    Verdict delta_partition_equal = Verdict::Fail;
    bool v_singleton_in_delta_u = false;

    bool controllable_u = false, controllable_v = false;
    Verdict non_controllability = Verdict::NotApplicable;  ///< only for n >= 4

    Verdict automorphism_stabilizer_equal = Verdict::NotApplicable;  ///< n <= brute-force cap

    GapReport gap;
    std::optional<PstEvent> pst_found;

    /// No verdict is Fail.
    bool all_pass() const;
};

inline constexpr double kSignConditionTolerance = 1e-7;

/// Requires u != v and a connected graph within the exact cap.
TransferReport necessary_conditions(GraphAnalysis& analysis, Vertex u, Vertex v,
                                    bool run_search = true);
TransferReport necessary_conditions(const Graph& g, Vertex u, Vertex v,
                                    const AnalysisConfig& config = {});

}  // namespace qwalk
