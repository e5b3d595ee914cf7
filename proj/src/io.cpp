#include "qwalk/io.hpp"

#include <json.hpp>

#include "qwalk/error.hpp"

namespace qwalk {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

// Reads `count` 6-bit groups starting at `pos` as a big-endian integer.
std::uint64_t read_groups(std::string_view s, std::size_t pos, std::size_t count,
                          std::size_t base) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < count; ++i) {
        if (pos + i >= s.size()) throw ParseError("truncated length prefix", base + pos + i);
        const int c = static_cast<unsigned char>(s[pos + i]);
        if (c < kBias || c > kBias + 63)
            throw ParseError("byte outside graph6 alphabet", base + pos + i);
        v = (v << 6) | std::uint64_t(c - kBias);
    }
    return v;
}

void append_groups(std::string& out, std::uint64_t v, int count) {
    for (int i = count - 1; i >= 0; --i) out.push_back(char(kBias + ((v >> (6 * i)) & 63)));
}

}  // namespace

Graph parse_graph6(std::string_view text, const GraphLimits& limits) {
    std::size_t base = 0;
    if (text.starts_with(kHeader)) {
        text.remove_prefix(kHeader.size());
        base = kHeader.size();
    }
    while (!text.empty() && is_blank(text.back())) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty input", base);

    std::uint64_t n = 0;
    std::size_t pos = 0;
    const int first = static_cast<unsigned char>(text[0]);
    if (first < kBias || first > kBias + 63) throw ParseError("byte outside graph6 alphabet", base);
    if (first != 126) {
        n = std::uint64_t(first - kBias);
        pos = 1;
    } else if (text.size() > 1 && static_cast<unsigned char>(text[1]) == 126) {
        n = read_groups(text, 2, 6, base);
        pos = 8;
        if (n <= 258047) throw ParseError("non-canonical length prefix", base);
    } else {
        n = read_groups(text, 1, 3, base);
        pos = 4;
        if (n <= 62) throw ParseError("non-canonical length prefix", base);
    }
    if (n == 0) throw ParseError("graph has no vertices", base);
    if (n > limits.max_vertices)
        throw CapExceeded("graph6 order " + std::to_string(n) + " exceeds cap " +
                          std::to_string(limits.max_vertices));

    const std::uint64_t bits = n * (n - 1) / 2;
    const std::size_t groups = std::size_t((bits + 5) / 6);
    if (text.size() - pos < groups)
        throw ParseError("truncated edge bit vector: expected " + std::to_string(groups) +
                             " bytes, found " + std::to_string(text.size() - pos),
                         base + text.size());
    if (text.size() - pos > groups)
        throw ParseError("trailing bytes after edge bit vector", base + pos + groups);

    for (std::size_t at = pos; at < text.size(); ++at) {
        const int c = static_cast<unsigned char>(text[at]);
        if (c < kBias || c > kBias + 63) throw ParseError("byte outside graph6 alphabet", base + at);
    }
    const int tail_bits = int(groups * 6 - bits);
    if (tail_bits > 0 && ((text.back() - kBias) & ((1 << tail_bits) - 1)) != 0)
        throw ParseError("nonzero padding bit", base + text.size() - 1);

    // Column-major upper triangle: bit k enumerates (0,1), (0,2), (1,2), (0,3), ...
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::uint64_t k = 0;
    for (std::uint64_t j = 1; j < n; ++j) {
        for (std::uint64_t i = 0; i < j; ++i, ++k) {
            const int word = text[pos + k / 6] - kBias;
            if ((word >> (5 - k % 6)) & 1) edges.emplace_back(Vertex(i), Vertex(j));
        }
    }
    return Graph::from_edges(std::size_t(n), edges);
}

std::string encode_graph6(const Graph& g) {
    const std::uint64_t n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(char(kBias + n));
    } else if (n <= 258047) {
        out.push_back(char(126));
        append_groups(out, n, 3);
    } else {
        out.push_back(char(126));
        out.push_back(char(126));
        append_groups(out, n, 6);
    }
    int word = 0, filled = 0;
    for (std::uint64_t j = 1; j < n; ++j) {
        for (std::uint64_t i = 0; i < j; ++i) {
            word = (word << 1) | (g.adjacent(Vertex(i), Vertex(j)) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(char(kBias + word));
                word = filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(char(kBias + (word << (6 - filled))));
    return out;
}

Graph parse_edge_list_json(std::string_view text, const GraphLimits& limits) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
        throw ParseError("edge list needs an integer field \"n\"", 0);
    const auto n = doc["n"].get<std::int64_t>();
    if (n <= 0) throw ParseError("\"n\" must be positive", 0);
    if (std::uint64_t(n) > limits.max_vertices)
        throw CapExceeded("edge list order exceeds cap " + std::to_string(limits.max_vertices));
    std::vector<std::pair<Vertex, Vertex>> edges;
    if (doc.contains("edges")) {
        const auto& arr = doc["edges"];
        if (!arr.is_array()) throw ParseError("\"edges\" must be an array", 0);
        for (const auto& e : arr) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer())
                throw ParseError("each edge must be a pair of integers", 0);
            const auto a = e[0].get<std::int64_t>(), b = e[1].get<std::int64_t>();
            if (a < 0 || b < 0 || a >= n || b >= n)
                throw ParseError("edge endpoint out of range", 0);
            edges.emplace_back(Vertex(a), Vertex(b));
        }
    }
    try {
        return Graph::from_edges(std::size_t(n), edges);
    } catch (const InvalidArgument& e) {
        throw ParseError(e.what(), 0);
    }
}

Graph parse_graph(std::string_view text, const GraphLimits& limits) {
    std::size_t i = 0;
    while (i < text.size() && is_blank(text[i])) ++i;
    if (i < text.size() && text[i] == '{') return parse_edge_list_json(text, limits);
    return parse_graph6(text.substr(i), limits);
}

}  // namespace qwalk
