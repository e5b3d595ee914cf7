#pragma once

#include <string>
#include <string_view>

#include "qwalk/graph.hpp"

namespace qwalk {

/// Decodes one graph6 record. A leading ">>graph6<<" header and trailing
/// whitespace are accepted. Errors carry the byte offset within `text`.
Graph parse_graph6(std::string_view text, const GraphLimits& limits = {});

/// Canonical graph6 bytes, no header, no newline.
std::string encode_graph6(const Graph& g);

/// {"n": int, "edges": [[i, j], ...]}
Graph parse_edge_list_json(std::string_view text, const GraphLimits& limits = {});

/// Dispatches on the first non-blank byte: '{' means JSON, anything else graph6.
Graph parse_graph(std::string_view text, const GraphLimits& limits = {});

}  // namespace qwalk
