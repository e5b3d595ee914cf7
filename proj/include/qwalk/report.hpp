#pragma once

// JSON documents emitted by the command-line front end. The schema is
// described in docs/report-schema.md and docs/report.schema.json.

#include <json.hpp>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

#include "qwalk/conditions.hpp"

namespace qwalk::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "qwalk.report/1";

Json partition_json(const Partition& p);
Json gap_json(const GapReport& gap, std::size_t n);
Json support_class_json(const SupportClass& c);
Json event_json(const PstEvent& ev);
Json verification_json(const PstVerification& v);
Json transfer_report_json(const TransferReport& rep);

/// Whole-graph report: spectrum, per-vertex supports, classes, Delta_u,
/// controllability and periodicity.
Json analyze(const Graph& g, const AnalysisConfig& config);

/// Pair report: necessary conditions, numeric search, event verification.
Json pair(const Graph& g, Vertex u, Vertex v, const AnalysisConfig& config);

/// One scan record for a graph6 line. Parse failures produce an error record.
Json scan_record(std::string_view line, std::size_t line_no, const AnalysisConfig& config);

struct ScanStats {
    std::size_t records = 0;  ///< non-blank input lines
    std::size_t graphs = 0;   ///< records that parsed and were analysed
    std::size_t errors = 0;
};

/// Streams one JSON line per non-blank input line, in input order, using
/// config.jobs workers. Output bytes do not depend on the worker count.
ScanStats scan(std::istream& in, std::ostream& out, const AnalysisConfig& config);

/// Compact single-line rendering used for all output.
std::string dump(const Json& j);

}  // namespace qwalk::report
