#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "oracles.hpp"
#include "qwalk/io.hpp"
#include "qwalk/report.hpp"

using namespace qwalk;
using report::Json;

TEST_CASE("number formatting") {
    CHECK(report::dump(Json(0.1)) == "0.10000000000000001");
    CHECK(report::dump(Json(1.0)) == "1.0");
    CHECK(report::dump(Json(-2.5e-20)) == "-2.4999999999999999e-20");
    CHECK(report::dump(Json(std::numeric_limits<double>::quiet_NaN())) == "null");
    CHECK(report::dump(Json(42)) == "42");
    CHECK(report::dump(Json("a\"b")) == "\"a\\\"b\"");
    Json obj;
    obj["z"] = 1;
    obj["a"] = Json::array({true, nullptr});
    CHECK(report::dump(obj) == "{\"z\":1,\"a\":[true,null]}");
    // what we print parses back to the same double
    for (double x : {0.1, 1.0 / 3.0, 2.221441469079183, 1e-300}) {
        const auto back = nlohmann::json::parse(report::dump(Json(x))).get<double>();
        CHECK(back == x);
    }
}

TEST_CASE("analyze P4") {
    const Json doc = report::analyze(path(4), {});
    CHECK(doc["schema_version"] == report::kSchemaVersion);
    CHECK(doc["command"] == "analyze");
    CHECK(doc["summary"]["controllable_vertices"] == 4);
    CHECK(doc["warnings"].empty());
    CHECK(doc["gap"]["sigma"].get<double>() == doctest::Approx(1.0));
    CHECK(doc["gap"]["separation_at_least_one"] == true);
    CHECK(doc["spectrum"]["char_poly"] == Json::array({"1", "0", "-3", "0", "1"}));
    for (const auto& v : doc["vertices"]) {
        CHECK(v["support_class"]["kind"] == "Neither");
        CHECK(v["controllable"] == true);
        CHECK(v["walk_rank"] == 4);
    }
}

TEST_CASE("analyze K1 and a disconnected graph") {
    const Json k1 = report::analyze(Graph(1), {});
    CHECK(k1["gap"].is_null());
    CHECK(k1["vertices"].size() == 1);
    const Json dis = report::analyze(Graph::from_edges(4, {{0, 1}, {2, 3}}), {});
    REQUIRE(dis["warnings"].size() == 1);
    CHECK(dis["graph"]["connected"] == false);
}

TEST_CASE("analyze Q3 flags periodic vertices and an integral rho squared") {
    const Json doc = report::analyze(hypercube(3), {});
    CHECK(doc["rho_squared"]["value"] == "9");
    CHECK(doc["summary"]["periodic_vertices"] == 8);
    for (const auto& v : doc["vertices"]) {
        CHECK(v["support_class"]["kind"] == "Integer");
        CHECK(v["periodic"]["tau"].get<double>() == doctest::Approx(M_PI));
        CHECK(v["delta_partition"].size() == 4);
    }
}

TEST_CASE("analyze above the exact cap omits exact fields") {
    AnalysisConfig cfg;
    cfg.exact_cap = 4;
    const Json doc = report::analyze(path(6), cfg);
    CHECK(doc["warnings"].size() == 1);
    CHECK(doc["spectrum"]["char_poly"].is_null());
    CHECK(doc["vertices"][0]["controllable"].is_null());
}

TEST_CASE("pair report") {
    const Json doc = report::pair(path(3), 0, 2, {});
    CHECK(doc["report"]["all_conditions_pass"] == true);
    CHECK(doc["report"]["pst_found"]["numeric"] == true);
    CHECK(doc["report"]["pst_found"]["tau"].get<double>() == doctest::Approx(2.221441).epsilon(1e-6));
    CHECK(doc["verification"]["passed"] == true);
    const Json none = report::pair(path(4), 0, 3, {});
    CHECK(none["report"]["pst_found"].is_null());
    CHECK(none["verification"].is_null());
    CHECK(none["report"]["conditions"]["support_class"]["class"]["kind"] == "Neither");
}

TEST_CASE("scan records") {
    const Json q3 = report::scan_record(encode_graph6(hypercube(3)), 1, {});
    CHECK(q3["pst_hits"].size() == 4);
    for (const auto& h : q3["pst_hits"]) CHECK((h["u"].get<int>() ^ h["v"].get<int>()) == 7);
    const Json bad = report::scan_record("C\x7f", 3, {});
    CHECK(bad["line"] == 3);
    CHECK(bad["offset"] == 1);
    CHECK(bad.contains("error"));
}

TEST_CASE("scan output is independent of the worker count") {
    const auto lines = oracle::read_lines(oracle::data_path("connected_1_7.g6"));
    std::string input;
    for (std::size_t i = 0; i < lines.size(); i += 5) input += lines[i] + "\n";
    input += "\n   \nnot-graph6\n";
    std::string reference;
    for (unsigned jobs : {1u, 2u, 3u, 8u}) {
        AnalysisConfig cfg;
        cfg.jobs = jobs;
        std::istringstream in(input);
        std::ostringstream out;
        const auto stats = report::scan(in, out, cfg);
        CHECK(stats.errors == 1);
        CHECK(stats.graphs + stats.errors == stats.records);
        if (reference.empty()) reference = out.str();
        else CHECK(out.str() == reference);
    }
    // one line per record, in input order
    std::istringstream rd(reference);
    std::size_t prev = 0, count = 0;
    for (std::string l; std::getline(rd, l); ++count) {
        const auto j = nlohmann::json::parse(l);
        CHECK(j["line"].get<std::size_t>() > prev);
        prev = j["line"].get<std::size_t>();
    }
    CHECK(count == (lines.size() + 4) / 5 + 1);
}

TEST_CASE("empty scan") {
    std::istringstream in("\n\n");
    std::ostringstream out;
    const auto stats = report::scan(in, out, {});
    CHECK(stats.records == 0);
    CHECK(out.str().empty());
}
