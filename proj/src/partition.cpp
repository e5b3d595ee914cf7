#include "qwalk/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "qwalk/error.hpp"

namespace qwalk {

Partition Partition::from_cells(std::size_t n, std::vector<std::vector<Vertex>> cells) {
    Partition p;
    p.cell_of_.assign(n, std::size_t(-1));
    std::size_t covered = 0;
    for (auto& c : cells) {
        if (c.empty()) throw InvalidArgument("partition has an empty cell");
        std::sort(c.begin(), c.end());
        for (Vertex v : c) {
            if (v >= n) throw InvalidArgument("partition cell holds vertex out of range");
            if (p.cell_of_[v] != std::size_t(-1))
                throw InvalidArgument("vertex " + std::to_string(v) + " is in two cells");
            p.cell_of_[v] = 0;
            ++covered;
        }
    }
    if (covered != n) throw InvalidArgument("partition does not cover every vertex");
    std::sort(cells.begin(), cells.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (Vertex v : cells[i]) p.cell_of_[v] = i;
    p.cells_ = std::move(cells);
    return p;
}

Partition Partition::from_colors(const std::vector<std::size_t>& colors) {
    // First appearance order equals min-vertex order.
    std::map<std::size_t, std::size_t> index;
    std::vector<std::vector<Vertex>> cells;
    for (std::size_t v = 0; v < colors.size(); ++v) {
        auto [it, fresh] = index.try_emplace(colors[v], cells.size());
        if (fresh) cells.emplace_back();
        cells[it->second].push_back(Vertex(v));
    }
    Partition p;
    p.cell_of_.resize(colors.size());
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (Vertex v : cells[i]) p.cell_of_[v] = i;
    p.cells_ = std::move(cells);
    return p;
}

Partition Partition::discrete(std::size_t n) {
    std::vector<std::size_t> c(n);
    std::iota(c.begin(), c.end(), 0);
    return from_colors(c);
}

Partition Partition::trivial(std::size_t n) { return from_colors(std::vector<std::size_t>(n, 0)); }

bool Partition::refines(const Partition& coarser) const {
    if (order() != coarser.order()) return false;
    for (const auto& c : cells_)
        for (Vertex v : c)
            if (coarser.cell_of(v) != coarser.cell_of(c.front())) return false;
    return true;
}

Partition coarsest_equitable_refinement(const Graph& g, const Partition& pi0) {
    if (pi0.order() != g.order()) throw InvalidArgument("partition order does not match graph");
    const std::size_t n = g.order();
    std::vector<std::size_t> color(n);
    for (std::size_t v = 0; v < n; ++v) color[v] = pi0.cell_of(Vertex(v));
    std::size_t cells = pi0.size();

    using Signature = std::pair<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>>;
    for (;;) {
        std::map<Signature, std::size_t> ids;
        std::vector<std::size_t> next(n);
        for (std::size_t v = 0; v < n; ++v) {
            std::map<std::size_t, std::size_t> counts;
            for (Vertex w : g.neighbors(Vertex(v))) ++counts[color[w]];
            Signature sig{color[v], {counts.begin(), counts.end()}};
            next[v] = ids.try_emplace(std::move(sig), ids.size()).first->second;
        }
        // Re-key by first appearance so colours stay small and canonical.
        const Partition p = Partition::from_colors(next);
        for (std::size_t v = 0; v < n; ++v) color[v] = p.cell_of(Vertex(v));
        if (p.size() == cells) return p;
        cells = p.size();
    }
}

Partition delta_u(const Graph& g, Vertex u) {
    check_vertex(g, u);
    std::vector<std::size_t> colors(g.order(), 1);
    colors[u] = 0;
    return coarsest_equitable_refinement(g, Partition::from_colors(colors));
}

bool check_delta_equality(const Graph& g, Vertex u, Vertex v) {
    return delta_u(g, u) == delta_u(g, v);
}

IntMatrix NormalizedCharMatrix::characteristic() const {
    IntMatrix p(pi_.order(), pi_.size());
    for (std::size_t j = 0; j < pi_.size(); ++j)
        for (Vertex v : pi_.cell(j)) p(v, j) = 1;
    return p;
}

bool NormalizedCharMatrix::orthonormal_columns() const {
    const IntMatrix p = characteristic();
    const IntMatrix gram = p.transpose() * p;
    for (std::size_t i = 0; i < pi_.size(); ++i)
        for (std::size_t j = 0; j < pi_.size(); ++j) {
            const BigInt want = i == j ? BigInt(pi_.cell(i).size()) : BigInt(0);
            if (gram(i, j) != want) return false;
        }
    return true;
}

RationalMatrix NormalizedCharMatrix::projection() const {
    const std::size_t n = pi_.order();
    RationalMatrix m(n, n);
    for (const auto& cell : pi_.cells()) {
        const Rational w(1, cell.size());
        for (Vertex a : cell)
            for (Vertex b : cell) m(a, b) = w;
    }
    return m;
}

bool NormalizedCharMatrix::fixes(Vertex u) const {
    const RationalMatrix m = projection();
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (m(r, u) != (r == u ? 1 : 0)) return false;
    return true;
}

Eigen::MatrixXd NormalizedCharMatrix::dense() const {
    Eigen::MatrixXd q = Eigen::MatrixXd::Zero(Eigen::Index(pi_.order()), Eigen::Index(pi_.size()));
    for (std::size_t j = 0; j < pi_.size(); ++j) {
        const double w = 1.0 / std::sqrt(double(pi_.cell(j).size()));
        for (Vertex v : pi_.cell(j)) q(v, Eigen::Index(j)) = w;
    }
    return q;
}

namespace {

IntMatrix adjacency_exact(const Graph& g) {
    IntMatrix a(g.order(), g.order());
    for (auto [i, j] : g.edges()) a(i, j) = a(j, i) = 1;
    return a;
}

}  // namespace

EquitableCheck is_equitable(const Graph& g, const Partition& pi) {
    if (pi.order() != g.order()) throw InvalidArgument("partition order does not match graph");
    const std::size_t k = pi.size();
    EquitableCheck out;

    // (a) neighbour counts, directly.
    IntMatrix b(k, k);
    out.equitable = true;
    for (std::size_t i = 0; i < k && out.equitable; ++i) {
        std::vector<long> first;
        for (Vertex v : pi.cell(i)) {
            std::vector<long> counts(k, 0);
            for (Vertex w : g.neighbors(v)) ++counts[pi.cell_of(w)];
            if (first.empty()) {
                first = counts;
            } else if (counts != first) {
                out.equitable = false;
                break;
            }
        }
        for (std::size_t j = 0; j < k; ++j) b(i, j) = first.empty() ? 0 : first[j];
    }
    if (out.equitable) out.quotient = b;

    const NormalizedCharMatrix q(pi);
    const IntMatrix a = adjacency_exact(g);
    const IntMatrix p = q.characteristic();
    const IntMatrix ap = a * p;

    // (b) column space of P (equivalently Q) is A-invariant.
    IntMatrix stacked(p.rows(), 2 * k);
    for (std::size_t r = 0; r < p.rows(); ++r)
        for (std::size_t c = 0; c < k; ++c) {
            stacked(r, c) = p(r, c);
            stacked(r, k + c) = ap(r, c);
        }
    out.column_space_invariant = rank_exact(stacked) == rank_exact(p);

    // (c) the only candidate is B = (P^T P)^{-1} P^T A P; test AP == PB.
    // AQ = QB' with B' = D^{1/2} B D^{-1/2}, so this is the normalized form too.
    const RationalMatrix ptap = to_rational(p.transpose() * ap);
    RationalMatrix cand(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            cand(i, j) = ptap(i, j) / Rational(pi.cell(i).size());
    out.intertwines = to_rational(ap) == to_rational(p) * cand;

    // (d) A and QQ^T commute.
    const RationalMatrix proj = q.projection();
    const RationalMatrix ar = to_rational(a);
    out.commutes_with_projection = ar * proj == proj * ar;
    return out;
}

namespace {

// Backtracking search for an automorphism that extends `forced` and maps each
// vertex into its own colour class.
class AutomorphismSearch {
public:
    AutomorphismSearch(const Graph& g, std::vector<std::size_t> colors)
        : g_(g), colors_(std::move(colors)), n_(g.order()) {}

    std::optional<std::vector<Vertex>> find(const std::vector<std::pair<Vertex, Vertex>>& forced) {
        image_.assign(n_, kUnset);
        used_.assign(n_, false);
        order_.clear();
        std::vector<bool> queued(n_, false);
        for (auto [x, y] : forced) {
            if (colors_[x] != colors_[y] || g_.degree(x) != g_.degree(y)) return std::nullopt;
            if (image_[x] != kUnset) {
                if (image_[x] != y) return std::nullopt;
                continue;
            }
            if (used_[y] || !consistent(x, y)) return std::nullopt;
            image_[x] = y;
            used_[y] = true;
            queued[x] = true;
            order_.push_back(x);
        }
        // Remaining vertices in BFS order from the forced ones, so that each new
        // vertex tends to have mapped neighbours constraining it.
        std::size_t head = 0;
        std::vector<Vertex> bfs(order_);
        for (;;) {
            while (head < bfs.size()) {
                for (Vertex w : g_.neighbors(bfs[head]))
                    if (!queued[w]) {
                        queued[w] = true;
                        bfs.push_back(w);
                    }
                ++head;
            }
            auto it = std::find(queued.begin(), queued.end(), false);
            if (it == queued.end()) break;
            const auto v = Vertex(it - queued.begin());
            queued[v] = true;
            bfs.push_back(v);
        }
        order_ = std::move(bfs);
        if (extend(forced.size())) return image_;
        return std::nullopt;
    }

private:
    static constexpr Vertex kUnset = Vertex(-1);

    bool consistent(Vertex x, Vertex y) const {
        for (Vertex z = 0; z < n_; ++z) {
            if (image_[z] == kUnset) continue;
            if (g_.adjacent(x, z) != g_.adjacent(y, image_[z])) return false;
        }
        return true;
    }

    bool extend(std::size_t depth) {
        if (depth == order_.size()) return true;
        const Vertex x = order_[depth];
        if (image_[x] != kUnset) return extend(depth + 1);
        for (Vertex y = 0; y < n_; ++y) {
            if (used_[y] || colors_[y] != colors_[x] || g_.degree(y) != g_.degree(x)) continue;
            if (!consistent(x, y)) continue;
            image_[x] = y;
            used_[y] = true;
            if (extend(depth + 1)) return true;
            image_[x] = kUnset;
            used_[y] = false;
        }
        return false;
    }

    const Graph& g_;
    std::vector<std::size_t> colors_;
    std::size_t n_;
    std::vector<Vertex> image_;
    std::vector<bool> used_;
    std::vector<Vertex> order_;
};

void check_cap(const Graph& g, std::size_t n_cap) {
    if (g.order() > n_cap)
        throw CapExceeded("order " + std::to_string(g.order()) +
                          " exceeds brute-force automorphism cap " + std::to_string(n_cap));
}

std::vector<std::size_t> colors_of(const Partition& p) {
    std::vector<std::size_t> c(p.order());
    for (std::size_t v = 0; v < c.size(); ++v) c[v] = p.cell_of(Vertex(v));
    return c;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

}  // namespace

Partition stabilizer_orbits_bruteforce(const Graph& g, Vertex u, std::size_t n_cap,
                                       bool prune_by_refinement) {
    check_vertex(g, u);
    check_cap(g, n_cap);
    const std::size_t n = g.order();
    std::vector<std::size_t> colors =
        prune_by_refinement ? colors_of(delta_u(g, u)) : std::vector<std::size_t>(n, 0);
    if (!prune_by_refinement) colors[u] = 1;
    AutomorphismSearch search(g, colors);

    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = x + 1; y < n; ++y) {
            if (colors[x] != colors[y]) continue;
            if (find_root(parent, x) == find_root(parent, y)) continue;
            if (auto sigma = search.find({{u, u}, {x, y}})) {
                for (Vertex w = 0; w < n; ++w)
                    parent[find_root(parent, w)] = find_root(parent, (*sigma)[w]);
            }
        }
    }
    std::vector<std::size_t> roots(n);
    for (std::size_t v = 0; v < n; ++v) roots[v] = find_root(parent, v);
    return Partition::from_colors(roots);
}

bool stabilizers_equal(const Graph& g, Vertex u, Vertex v, std::size_t n_cap) {
    return stabilizer_orbits_bruteforce(g, u, n_cap).is_singleton(v) &&
           stabilizer_orbits_bruteforce(g, v, n_cap).is_singleton(u);
}

bool automorphic_vertices(const Graph& g, Vertex u, Vertex v, std::size_t n_cap) {
    check_vertex(g, u);
    check_vertex(g, v);
    check_cap(g, n_cap);
    if (u == v) return true;
    const Partition base = coarsest_equitable_refinement(g, Partition::trivial(g.order()));
    AutomorphismSearch search(g, colors_of(base));
    return search.find({{u, v}}).has_value();
}

}  // namespace qwalk
