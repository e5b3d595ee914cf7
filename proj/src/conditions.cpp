#include "qwalk/conditions.hpp"

#include <algorithm>
#include <cmath>

#include "qwalk/error.hpp"

namespace qwalk {

void AnalysisConfig::validate() const {
    if (!(t_max > 0.0)) throw InvalidArgument("t_max must be positive");
    if (!(threshold > 0.0 && threshold < 1.0)) throw InvalidArgument("threshold must lie in (0, 1)");
    if (grouping_tolerance < 0.0) throw InvalidArgument("grouping tolerance must be positive");
    if (!(support_tolerance > 0.0)) throw InvalidArgument("support tolerance must be positive");
    if (denominator_bound < 1) throw InvalidArgument("denominator bound must be positive");
    if (!(ratio_residual > 0.0)) throw InvalidArgument("ratio residual must be positive");
    if (exact_cap < 1) throw InvalidArgument("exact cap must be positive");
    if (jobs < 1) throw InvalidArgument("worker count must be positive");
}

GraphAnalysis::GraphAnalysis(Graph g, AnalysisConfig config)
    : g_(std::move(g)), cfg_(config) {
    cfg_.validate();
    limits_.exact_cap = cfg_.exact_cap;
    sd_ = decompose(g_, cfg_.grouping_tolerance, limits_);
    const std::size_t n = g_.order();
    deleted_.resize(n);
    walk_.resize(n);
    gram_.resize(n);
    delta_.resize(n);
    support_.resize(n);
    class_.resize(n);
    controllable_.resize(n);
    rank_.resize(n);
}

void GraphAnalysis::require_exact() const {
    if (!exact_allowed())
        throw CapExceeded("order " + std::to_string(order()) + " exceeds exact cap " +
                          std::to_string(cfg_.exact_cap));
}

const ExactPoly& GraphAnalysis::char_poly() {
    if (!phi_) phi_ = char_poly_exact(g_, limits_);
    return *phi_;
}

const ExactPoly& GraphAnalysis::deleted_char_poly(Vertex u) {
    check_vertex(g_, u);
    if (!deleted_[u]) deleted_[u] = char_poly_deleted(g_, u, limits_);
    return *deleted_[u];
}

const WalkMatrix& GraphAnalysis::walk(Vertex u) {
    check_vertex(g_, u);
    if (!walk_[u]) walk_[u] = walk_matrix(g_, u, cfg_.exact_cap);
    return *walk_[u];
}

const IntMatrix& GraphAnalysis::gram(Vertex u) {
    if (!gram_[u]) gram_[u] = walk_gram(walk(u));
    return *gram_[u];
}

const Partition& GraphAnalysis::delta(Vertex u) {
    check_vertex(g_, u);
    if (!delta_[u]) delta_[u] = delta_u(g_, u);
    return *delta_[u];
}

const std::vector<std::size_t>& GraphAnalysis::support(Vertex u) {
    check_vertex(g_, u);
    if (!support_[u]) support_[u] = eigenvalue_support(sd_, u, cfg_.support_tolerance);
    return *support_[u];
}

std::vector<double> GraphAnalysis::support_values(Vertex u) {
    std::vector<double> out;
    for (std::size_t r : support(u)) out.push_back(sd_.eigenvalues[r]);
    return out;
}

const SupportClass& GraphAnalysis::support_class(Vertex u) {
    if (!class_[u]) {
        const auto values = support_values(u);
        class_[u] = classify_support(values, char_poly());
    }
    return *class_[u];
}

bool GraphAnalysis::controllable(Vertex u) {
    if (!controllable_[u]) controllable_[u] = is_controllable(walk(u), char_poly(), deleted_char_poly(u));
    return *controllable_[u];
}

std::size_t GraphAnalysis::walk_rank(Vertex u) {
    if (!rank_[u]) rank_[u] = rank_exact(walk(u).entries);
    return *rank_[u];
}

std::size_t GraphAnalysis::pole_count(Vertex u) {
    return qwalk::pole_count(char_poly(), deleted_char_poly(u));
}

bool GraphAnalysis::rho_squared_integer() {
    if (!rho_sq_) rho_sq_ = qwalk::rho_squared_integer(sd_, char_poly());
    return *rho_sq_;
}

GapReport GraphAnalysis::gap() const { return eigenvalue_gap(sd_); }

const char* to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::NotApplicable: break;
    }
    return "n/a";
}

bool TransferReport::all_pass() const {
    for (Verdict v : {cospectral, equal_supports, sign_condition, ratio_condition,
                      support_class_ok, rho_squared_integer, delta_partition_equal,
                      non_controllability, automorphism_stabilizer_equal})
        if (v == Verdict::Fail) return false;
    return true;
}

TransferReport necessary_conditions(GraphAnalysis& an, Vertex u, Vertex v, bool run_search) {
    const Graph& g = an.graph();
    check_vertex(g, u);
    check_vertex(g, v);
    if (u == v) throw InvalidArgument("pair analysis needs two distinct vertices");
    if (!g.connected()) throw InvalidArgument("pair analysis needs a connected graph");
    if (!an.exact_allowed())
        throw CapExceeded("order " + std::to_string(g.order()) + " exceeds exact cap " +
                          std::to_string(an.config().exact_cap));
    const auto& sd = an.spectral();
    const std::size_t n = g.order();

    TransferReport rep;
    rep.u = u;
    rep.v = v;

    // (1) cospectrality, two exact routes that must agree.
    rep.cospectral_charpoly = an.cospectral_charpoly(u, v);
    rep.cospectral_gram = an.cospectral_gram(u, v);
    if (rep.cospectral_charpoly != rep.cospectral_gram)
        throw InvariantViolation("cospectrality via deleted-vertex polynomials and via walk "
                                 "Gram matrices disagree for pair (" +
                                 std::to_string(u) + ", " + std::to_string(v) + ")");
    rep.cospectral = verdict(rep.cospectral_charpoly);

    // (2) equal eigenvalue supports.
    const auto& su = an.support(u);
    const auto& sv = an.support(v);
    rep.equal_supports = verdict(su == sv);

    // (3) E_r e_u = +- E_r e_v, vector-level.
    std::vector<std::size_t> all = su;
    all.insert(all.end(), sv.begin(), sv.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    for (std::size_t r : all) {
        const auto& e = sd.idempotents[r];
        const double minus = (e.col(u) - e.col(v)).cwiseAbs().maxCoeff();
        const double plus = (e.col(u) + e.col(v)).cwiseAbs().maxCoeff();
        rep.sign_residual = std::max(rep.sign_residual, std::min(minus, plus));
    }
    rep.sign_condition = verdict(rep.sign_residual <= kSignConditionTolerance);

    // (4) ratio condition on the common support.
    for (std::size_t r : su)
        if (std::binary_search(sv.begin(), sv.end(), r)) rep.common_support.push_back(sd.eigenvalues[r]);
    if (rep.common_support.size() >= 2) {
        rep.ratio = ratio_condition(rep.common_support, an.config().rational());
        rep.ratio_condition = verdict(rep.ratio.holds);
    } else {
        rep.ratio_condition = Verdict::NotApplicable;
    }

    // (5) support classification.
    rep.support_class = an.support_class(u);
    rep.support_class_ok = verdict(rep.support_class.kind != SupportKind::Neither);

    // (6) rho^2 integral; rho lies in every support of a connected graph.
    rep.rho_squared_integer = verdict(an.rho_squared_integer());

    // (7) Delta_u = Delta_v.
    rep.delta_partition_equal = verdict(an.delta(u) == an.delta(v));
    rep.v_singleton_in_delta_u = an.delta(u).is_singleton(v);

    // (8) neither end controllable, for n >= 4.
    rep.controllable_u = an.controllable(u);
    rep.controllable_v = an.controllable(v);
    if (n >= 4) rep.non_controllability = verdict(!rep.controllable_u && !rep.controllable_v);

    // (9) Aut(X)_u = Aut(X)_v by brute force on small graphs.
    if (n <= an.config().brute_force_cap)
        rep.automorphism_stabilizer_equal =
            verdict(stabilizers_equal(g, u, v, an.config().brute_force_cap));

    rep.gap = n >= 2 ? an.gap() : GapReport{};
    if (run_search) rep.pst_found = search_pst(sd, u, v, an.config().search());
    return rep;
}

TransferReport necessary_conditions(const Graph& g, Vertex u, Vertex v,
                                    const AnalysisConfig& config) {
    GraphAnalysis an(g, config);
    return necessary_conditions(an, u, v);
}

}  // namespace qwalk
