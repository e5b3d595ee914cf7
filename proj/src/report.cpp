#include "qwalk/report.hpp"

#include <cmath>
#include <cstdio>

#include "qwalk/error.hpp"
#include "qwalk/io.hpp"

namespace qwalk::report {

namespace {

// Gaps within this of 1 count as separation >= 1 (P4 has sigma = 1 exactly).
constexpr double kUnitGapSlack = 1e-9;

void dump_into(const Json& j, std::string& out) {
    switch (j.type()) {
        case Json::value_t::object: {
            out += '{';
            bool first = true;
            for (const auto& [k, v] : j.items()) {
                if (!first) out += ',';
                first = false;
                out += Json(k).dump();
                out += ':';
                dump_into(v, out);
            }
            out += '}';
            return;
        }
        case Json::value_t::array: {
            out += '[';
            bool first = true;
            for (const auto& v : j) {
                if (!first) out += ',';
                first = false;
                dump_into(v, out);
            }
            out += ']';
            return;
        }
        case Json::value_t::number_float: {
            const double x = j.get<double>();
            if (!std::isfinite(x)) {
                out += "null";
                return;
            }
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", x);
            out += buf;
            // keep floats recognisable as floats
            if (std::string_view(buf).find_first_of(".eEn") == std::string_view::npos) out += ".0";
            return;
        }
        default:
            out += j.dump();
    }
}

Json complex_json(std::complex<double> z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json strings(const std::vector<BigInt>& xs) {
    Json a = Json::array();
    for (const auto& x : xs) a.push_back(x.get_str());
    return a;
}

Json graph_json(const Graph& g) {
    Json j;
    j["graph6"] = encode_graph6(g);
    j["n"] = g.order();
    j["edges"] = g.edge_count();
    j["connected"] = g.connected();
    return j;
}

Json header(const char* command) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    return j;
}

Json config_json(const AnalysisConfig& c) {
    Json j;
    j["t_max"] = c.t_max;
    j["threshold"] = c.threshold;
    j["grouping_tolerance"] = c.grouping_tolerance;
    j["support_tolerance"] = c.support_tolerance;
    j["denominator_bound"] = c.denominator_bound;
    j["ratio_residual"] = c.ratio_residual;
    j["exact_cap"] = c.exact_cap;
    j["brute_force_cap"] = c.brute_force_cap;
    return j;
}

Json rho_squared_json(GraphAnalysis& an) {
    const bool integral = an.rho_squared_integer();
    Json j;
    j["integer"] = integral;
    const double rho = an.spectral().spectral_radius;
    j["value"] = integral ? Json(std::to_string(std::llround(rho * rho))) : Json(nullptr);
    return j;
}

Json period_json(const std::optional<PeriodResult>& p) {
    if (!p) return nullptr;
    Json j;
    j["tau"] = p->tau;
    j["fidelity"] = p->fidelity;
    j["from_candidate"] = p->from_candidate;
    j["numeric"] = true;
    return j;
}

}  // namespace

std::string dump(const Json& j) {
    std::string out;
    dump_into(j, out);
    return out;
}

Json partition_json(const Partition& p) {
    Json a = Json::array();
    for (const auto& cell : p.cells()) a.push_back(cell);
    return a;
}

Json gap_json(const GapReport& gap, std::size_t n) {
    Json j;
    j["sigma"] = gap.sigma;
    j["bound"] = gap.bound;
    j["satisfied"] = gap.satisfied;
    j["separation_at_least_one"] = gap.sigma >= 1.0 - kUnitGapSlack;
    j["n"] = n;
    return j;
}

Json support_class_json(const SupportClass& c) {
    Json j;
    j["kind"] = to_string(c.kind);
    switch (c.kind) {
        case SupportKind::Integer:
            j["values"] = strings(c.integers);
            break;
        case SupportKind::Quadratic:
            j["a"] = c.a.get_str();
            j["delta"] = c.delta.get_str();
            j["b"] = strings(c.b_values);
            break;
        case SupportKind::Neither:
            break;
    }
    return j;
}

Json event_json(const PstEvent& ev) {
    Json j;
    j["u"] = ev.u;
    j["v"] = ev.v;
    j["tau"] = ev.tau;
    j["gamma"] = complex_json(ev.gamma);
    j["fidelity"] = ev.fidelity;
    j["numeric"] = true;
    return j;
}

Json verification_json(const PstVerification& v) {
    Json j;
    j["passed"] = v.passed;
    j["fidelity"] = v.fidelity;
    j["transfer_residual_uv"] = v.transfer_residual_uv;
    j["transfer_residual_vu"] = v.transfer_residual_vu;
    j["plus_eigvec_residual"] = v.plus_eigvec_residual;
    j["minus_eigvec_residual"] = v.minus_eigvec_residual;
    j["period_u"] = v.period_u;
    j["period_v"] = v.period_v;
    j["double_time_phase_error"] = v.double_time_phase_error;
    j["support"] = v.support;
    j["signs"] = v.signs;
    j["sign_phase_residual"] = v.sign_phase_residual;
    j["sign_vector_residual"] = v.sign_vector_residual;
    j["f_plus_f_minus"] = v.f_plus_f_minus;
    j["f_plus_nonzero"] = v.f_plus_nonzero;
    j["f_minus_nonzero"] = v.f_minus_nonzero;
    return j;
}

Json transfer_report_json(const TransferReport& rep) {
    Json j;
    j["u"] = rep.u;
    j["v"] = rep.v;

    Json c;
    c["cospectral"] = {{"verdict", to_string(rep.cospectral)},
                       {"via_charpoly", rep.cospectral_charpoly},
                       {"via_gram", rep.cospectral_gram}};
    c["equal_supports"] = {{"verdict", to_string(rep.equal_supports)}};
    c["sign_condition"] = {{"verdict", to_string(rep.sign_condition)},
                           {"residual", rep.sign_residual}};
    Json ratio;
    ratio["verdict"] = to_string(rep.ratio_condition);
    ratio["common_support"] = rep.common_support;
    if (rep.ratio.witness) {
        ratio["witness"] = *rep.ratio.witness;
        ratio["witness_ratio"] = rep.ratio.witness_ratio;
    } else {
        ratio["witness"] = nullptr;
    }
    c["ratio_condition"] = ratio;
    c["support_class"] = {{"verdict", to_string(rep.support_class_ok)},
                          {"class", support_class_json(rep.support_class)}};
    c["rho_squared_integer"] = {{"verdict", to_string(rep.rho_squared_integer)}};
    c["delta_partition_equal"] = {{"verdict", to_string(rep.delta_partition_equal)},
                                  {"v_singleton_in_delta_u", rep.v_singleton_in_delta_u}};
    c["non_controllability"] = {{"verdict", to_string(rep.non_controllability)},
                                {"controllable_u", rep.controllable_u},
                                {"controllable_v", rep.controllable_v}};
    c["automorphism_stabilizer_equal"] = {{"verdict", to_string(rep.automorphism_stabilizer_equal)}};
    j["conditions"] = c;
    j["all_conditions_pass"] = rep.all_pass();
    j["pst_found"] = rep.pst_found ? event_json(*rep.pst_found) : Json(nullptr);
    return j;
}

Json analyze(const Graph& g, const AnalysisConfig& config) {
    GraphAnalysis an(g, config);
    const auto& sd = an.spectral();
    const std::size_t n = g.order();
    const bool exact = an.exact_allowed();

    Json doc = header("analyze");
    doc["graph"] = graph_json(g);
    doc["config"] = config_json(config);

    Json warnings = Json::array();
    if (!g.connected())
        warnings.push_back("disconnected: pair pipeline skipped, spectral facts only");
    if (!exact)
        warnings.push_back("order exceeds exact cap: exact fields omitted");
    doc["warnings"] = warnings;

    Json spec;
    spec["eigenvalues"] = sd.eigenvalues;
    spec["multiplicities"] = sd.multiplicities;
    spec["spectral_radius"] = sd.spectral_radius;
    spec["grouping_tolerance"] = sd.grouping_tolerance;
    spec["char_poly"] = exact ? Json(an.char_poly().to_strings()) : Json(nullptr);
    doc["spectrum"] = spec;
    doc["rho_squared"] = exact ? rho_squared_json(an) : Json(nullptr);
    doc["gap"] = n >= 2 ? gap_json(an.gap(), n) : Json(nullptr);
    const auto trace = trace_identity_check(sd, g.edge_count());
    doc["trace_identity"] = {{"lhs", trace.lhs}, {"rhs", trace.rhs}};

    const SearchOptions search = config.search();
    Json vertices = Json::array();
    std::size_t controllable = 0, periodic = 0;
    for (Vertex u = 0; u < n; ++u) {
        Json vj;
        vj["vertex"] = u;
        vj["support"] = an.support(u);
        const auto values = an.support_values(u);
        vj["support_values"] = values;
        const SupportClass* cls = nullptr;
        if (exact) {
            cls = &an.support_class(u);
            vj["support_class"] = support_class_json(*cls);
        } else {
            vj["support_class"] = nullptr;
        }
        if (values.size() >= 2) {
            const auto r = ratio_condition(values, config.rational());
            vj["ratio_condition"] = r.holds;
        } else {
            vj["ratio_condition"] = nullptr;
        }
        vj["delta_partition"] = partition_json(an.delta(u));
        if (exact) {
            const bool c = an.controllable(u);
            controllable += c;
            vj["controllable"] = c;
            vj["walk_rank"] = an.walk_rank(u);
            vj["pole_count"] = an.pole_count(u);
        } else {
            vj["controllable"] = nullptr;
            vj["walk_rank"] = nullptr;
            vj["pole_count"] = nullptr;
        }
        const auto period = check_periodicity(sd, u, search, cls);
        periodic += period.has_value();
        vj["periodic"] = period_json(period);
        vertices.push_back(std::move(vj));
    }
    doc["vertices"] = vertices;

    Json summary;
    summary["controllable_vertices"] = exact ? Json(controllable) : Json(nullptr);
    summary["periodic_vertices"] = periodic;
    doc["summary"] = summary;
    return doc;
}

Json pair(const Graph& g, Vertex u, Vertex v, const AnalysisConfig& config) {
    GraphAnalysis an(g, config);
    const TransferReport rep = necessary_conditions(an, u, v);

    Json doc = header("pair");
    doc["graph"] = graph_json(g);
    doc["config"] = config_json(config);
    doc["gap"] = gap_json(rep.gap, g.order());
    doc["report"] = transfer_report_json(rep);
    if (rep.pst_found)
        doc["verification"] = verification_json(verify_pst_event(
            an.spectral(), *rep.pst_found, config.threshold, 1e-6, config.support_tolerance));
    else
        doc["verification"] = nullptr;
    return doc;
}

Json scan_record(std::string_view line, std::size_t line_no, const AnalysisConfig& config) {
    Json rec;
    rec["schema_version"] = kSchemaVersion;
    rec["line"] = line_no;
    rec["id"] = std::string(line);
    Graph g = [&] {
        try {
            return parse_graph6(line);
        } catch (const ParseError& e) {
            rec["error"] = e.what();
            rec["offset"] = e.offset();
            return Graph(1);
        }
    }();
    if (rec.contains("error")) return rec;

    GraphAnalysis an(std::move(g), config);
    const Graph& graph = an.graph();
    const std::size_t n = graph.order();
    rec["n"] = n;
    rec["connected"] = graph.connected();
    rec["gap"] = n >= 2 ? gap_json(an.gap(), n) : Json(nullptr);

    Json pairs = Json::array();
    Json hits = Json::array();
    std::string skipped;
    if (!graph.connected()) skipped = "disconnected";
    else if (!an.exact_allowed()) skipped = "exact cap exceeded";

    if (skipped.empty()) {
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) {
                if (!an.cospectral_charpoly(u, v)) continue;
                const TransferReport rep = necessary_conditions(an, u, v);
                Json p;
                p["u"] = u;
                p["v"] = v;
                p["equal_supports"] = to_string(rep.equal_supports);
                p["sign_condition"] = to_string(rep.sign_condition);
                p["ratio_condition"] = to_string(rep.ratio_condition);
                p["support_class"] = to_string(rep.support_class.kind);
                p["rho_squared_integer"] = to_string(rep.rho_squared_integer);
                p["delta_partition_equal"] = to_string(rep.delta_partition_equal);
                p["non_controllability"] = to_string(rep.non_controllability);
                p["automorphism_stabilizer_equal"] = to_string(rep.automorphism_stabilizer_equal);
                p["all_conditions_pass"] = rep.all_pass();
                if (rep.pst_found) {
                    p["pst_found"] = {{"tau", rep.pst_found->tau},
                                      {"fidelity", rep.pst_found->fidelity},
                                      {"numeric", true}};
                    hits.push_back(event_json(*rep.pst_found));
                } else {
                    p["pst_found"] = nullptr;
                }
                pairs.push_back(std::move(p));
            }
    }
    rec["pairs_skipped"] = skipped.empty() ? Json(nullptr) : Json(skipped);
    rec["cospectral_pairs"] = pairs;
    rec["pst_hits"] = hits;
    return rec;
}

}  // namespace qwalk::report
