#include "qwalk/graph.hpp"

#include <algorithm>
#include <numeric>

#include "qwalk/error.hpp"

namespace qwalk {

namespace {

void check_order(std::size_t n, const GraphLimits& limits) {
    if (n == 0) throw InvalidArgument("graph must have at least one vertex");
    if (n > limits.max_vertices)
        throw CapExceeded("graph order " + std::to_string(n) + " exceeds cap " +
                          std::to_string(limits.max_vertices));
}

}  // namespace

Graph::Graph(std::size_t n) : adj_(n) {
    if (n == 0) throw InvalidArgument("graph must have at least one vertex");
}

void Graph::add_edge_unchecked(Vertex a, Vertex b) {
    adj_[a].push_back(b);
    adj_[b].push_back(a);
    ++edges_;
}

void Graph::finalize() {
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

Graph Graph::from_edges(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    Graph g(n);
    for (auto [a, b] : edges) {
        if (a >= n || b >= n)
            throw InvalidArgument("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                                  ") out of range for n = " + std::to_string(n));
        if (a == b) throw InvalidArgument("self-loop at vertex " + std::to_string(a));
        g.add_edge_unchecked(a, b);
    }
    g.finalize();
    for (std::size_t v = 0; v < n; ++v) {
        const auto& nb = g.adj_[v];
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw InvalidArgument("duplicate edge at vertex " + std::to_string(v));
    }
    return g;
}

bool Graph::adjacent(Vertex a, Vertex b) const {
    const auto& nb = adj_.at(a);
    return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edges_);
    for (Vertex a = 0; a < adj_.size(); ++a)
        for (Vertex b : adj_[a])
            if (a < b) out.emplace_back(a, b);
    return out;
}

std::vector<std::uint8_t> Graph::adjacency_matrix() const {
    const std::size_t n = order();
    std::vector<std::uint8_t> m(n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (Vertex b : adj_[a]) m[a * n + b] = 1;
    return m;
}

bool Graph::connected() const {
    std::vector<bool> seen(order(), false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : adj_[v]) {
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == order();
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
    if (labels.size() != order()) throw InvalidArgument("label count does not match order");
    Graph g = *this;
    g.labels_ = std::move(labels);
    return g;
}

void check_vertex(const Graph& g, Vertex v) {
    if (v >= g.order())
        throw InvalidArgument("vertex " + std::to_string(v) + " out of range for n = " +
                              std::to_string(g.order()));
}

Graph path(std::size_t n, const GraphLimits& limits) {
    check_order(n, limits);
    std::vector<std::pair<Vertex, Vertex>> e;
    for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(Vertex(i), Vertex(i + 1));
    return Graph::from_edges(n, e);
}

Graph cycle(std::size_t n, const GraphLimits& limits) {
    check_order(n, limits);
    if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
    std::vector<std::pair<Vertex, Vertex>> e;
    for (std::size_t i = 0; i < n; ++i) e.emplace_back(Vertex(i), Vertex((i + 1) % n));
    return Graph::from_edges(n, e);
}

Graph complete(std::size_t n, const GraphLimits& limits) {
    check_order(n, limits);
    std::vector<std::pair<Vertex, Vertex>> e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(Vertex(i), Vertex(j));
    return Graph::from_edges(n, e);
}

Graph star(std::size_t leaves, const GraphLimits& limits) {
    check_order(leaves + 1, limits);
    std::vector<std::pair<Vertex, Vertex>> e;
    for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, Vertex(i));
    return Graph::from_edges(leaves + 1, e);
}

Graph petersen() {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);          // outer cycle
        e.emplace_back(i, i + 5);                // spokes
        e.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
    }
    return Graph::from_edges(10, e);
}

Graph hypercube(unsigned d, const GraphLimits& limits) {
    if (d > limits.max_hypercube_dim || d >= 31)
        throw CapExceeded("hypercube dimension " + std::to_string(d) + " exceeds cap " +
                          std::to_string(limits.max_hypercube_dim));
    const std::size_t n = std::size_t{1} << d;
    check_order(n, limits);
    Graph g(n);
    for (std::size_t v = 0; v < n; ++v) {
        auto& nb = g.adj_[v];
        nb.reserve(d);
        for (unsigned bit = 0; bit < d; ++bit) nb.push_back(Vertex(v ^ (std::size_t{1} << bit)));
    }
    g.edges_ = n * d / 2;
    g.finalize();
    return g;
}

Graph cartesian_product(const Graph& g, const Graph& h, const GraphLimits& limits) {
    const std::size_t ng = g.order(), nh = h.order();
    if (ng > limits.max_vertices / nh)
        throw CapExceeded("cartesian product order exceeds cap " +
                          std::to_string(limits.max_vertices));
    Graph p(ng * nh);
    for (std::size_t a = 0; a < ng; ++a) {
        for (std::size_t x = 0; x < nh; ++x) {
            auto& nb = p.adj_[a * nh + x];
            for (Vertex y : h.neighbors(Vertex(x))) nb.push_back(Vertex(a * nh + y));
            for (Vertex b : g.neighbors(Vertex(a))) nb.push_back(Vertex(b * nh + x));
        }
    }
    p.edges_ = ng * h.edge_count() + nh * g.edge_count();
    p.finalize();
    return p;
}

Graph delete_vertex(const Graph& g, Vertex u) {
    check_vertex(g, u);
    if (g.order() == 1) throw InvalidArgument("cannot delete the only vertex");
    std::vector<std::pair<Vertex, Vertex>> e;
    auto shift = [u](Vertex v) { return v > u ? v - 1 : v; };
    for (auto [a, b] : g.edges())
        if (a != u && b != u) e.emplace_back(shift(a), shift(b));
    Graph out = Graph::from_edges(g.order() - 1, e);
    if (!g.labels().empty()) {
        auto labels = g.labels();
        labels.erase(labels.begin() + u);
        out = out.with_labels(std::move(labels));
    }
    return out;
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
    const std::size_t n = g.order();
    if (perm.size() != n) throw InvalidArgument("permutation size does not match order");
    std::vector<bool> hit(n, false);
    for (Vertex p : perm) {
        if (p >= n || hit[p]) throw InvalidArgument("not a permutation");
        hit[p] = true;
    }
    std::vector<std::pair<Vertex, Vertex>> e;
    for (auto [a, b] : g.edges()) e.emplace_back(perm[a], perm[b]);
    return Graph::from_edges(n, e);
}

}  // namespace qwalk
