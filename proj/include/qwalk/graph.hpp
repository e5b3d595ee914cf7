#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qwalk {

using Vertex = std::uint32_t;

/// Size caps for graph construction.
struct GraphLimits {
    std::size_t max_vertices = std::size_t{1} << 20;
    unsigned max_hypercube_dim = 20;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Stored as sorted neighbour lists so that large sparse families (hypercubes
/// up to the construction cap) fit in memory; dense views are produced on
/// demand by the spectral and exact modules. Immutable once built.
class Graph {
public:
    /// Edgeless graph on n >= 1 vertices.
    explicit Graph(std::size_t n);

    /// Builds from an edge list. Rejects loops, duplicates and out-of-range ends.
    static Graph from_edges(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges);

    std::size_t order() const noexcept { return adj_.size(); }
    std::size_t edge_count() const noexcept { return edges_; }
    std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
    bool adjacent(Vertex a, Vertex b) const;

    /// Edges (i, j) with i < j in lexicographic order.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    /// Row-major 0/1 adjacency matrix.
    std::vector<std::uint8_t> adjacency_matrix() const;

    bool connected() const;

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    Graph with_labels(std::vector<std::string> labels) const;

    /// Structural equality; labels are ignored.
    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    void add_edge_unchecked(Vertex a, Vertex b);
    void finalize();

    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::string> labels_;
    std::size_t edges_ = 0;

    friend Graph cartesian_product(const Graph&, const Graph&, const GraphLimits&);
    friend Graph hypercube(unsigned, const GraphLimits&);
};

Graph path(std::size_t n, const GraphLimits& limits = {});
Graph cycle(std::size_t n, const GraphLimits& limits = {});
Graph complete(std::size_t n, const GraphLimits& limits = {});
Graph star(std::size_t leaves, const GraphLimits& limits = {});
Graph petersen();

/// d-cube: vertices are bitstrings, adjacent at Hamming distance 1.
Graph hypercube(unsigned d, const GraphLimits& limits = {});

/// Vertex (a, x) of g x h gets index a * |V(h)| + x.
Graph cartesian_product(const Graph& g, const Graph& h, const GraphLimits& limits = {});

/// Removes u; surviving vertices keep their relative order. Requires n >= 2.
Graph delete_vertex(const Graph& g, Vertex u);

/// Applies a vertex relabelling: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);

void check_vertex(const Graph& g, Vertex v);

}  // namespace qwalk
