#pragma once

// Independent reference computations for the tests. None of these call into
// the library's numeric or exact code paths; they are deliberately naive.

#include <gmpxx.h>

#include <algorithm>
#include <complex>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <queue>
#include <random>
#include <string>
#include <vector>

#include "qwalk/graph.hpp"

namespace oracle {

using qwalk::Graph;
using qwalk::Vertex;
using QMat = std::vector<std::vector<mpq_class>>;

inline std::string data_path(const std::string& name) { return std::string(QWALK_TEST_DATA) + "/" + name; }

inline std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream f(path);
    std::vector<std::string> out;
    for (std::string line; std::getline(f, line);)
        if (!line.empty()) out.push_back(line);
    return out;
}

inline QMat adjacency(const Graph& g) {
    const std::size_t n = g.order();
    QMat a(n, std::vector<mpq_class>(n, 0));
    for (auto [i, j] : g.edges()) a[i][j] = a[j][i] = 1;
    return a;
}

/// Plain Gaussian elimination over Q with row swaps.
inline mpq_class determinant(QMat m) {
    const std::size_t n = m.size();
    mpq_class det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            const mpq_class f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

inline std::size_t rank(QMat m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const mpq_class f = m[i][c] / m[r][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        ++r;
    }
    return r;
}

/// Coefficients (lowest first) of det(xI - A), by evaluating the determinant
/// at x = 0..n and Newton interpolation.
inline std::vector<mpz_class> char_poly(const Graph& g) {
    const std::size_t n = g.order();
    const QMat a = adjacency(g);
    std::vector<mpq_class> xs(n + 1), ys(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        xs[k] = mpq_class(static_cast<long>(k));
        QMat m = a;
        for (std::size_t i = 0; i < n; ++i) {
            for (auto& e : m[i]) e = -e;
            m[i][i] += xs[k];
        }
        ys[k] = determinant(m);
    }
    // divided differences
    std::vector<mpq_class> d = ys;
    for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t i = n; i >= j; --i) d[i] = (d[i] - d[i - 1]) / (xs[i] - xs[i - j]);
    // expand Newton form into monomials
    std::vector<mpq_class> poly{d[n]};
    for (std::size_t i = n; i-- > 0;) {
        std::vector<mpq_class> next(poly.size() + 1, 0);
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] += poly[k];
            next[k] -= poly[k] * xs[i];
        }
        next[0] += d[i];
        poly = std::move(next);
    }
    std::vector<mpz_class> out;
    for (auto& c : poly) out.push_back(c.get_num());  // integral by construction
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

/// Number of walks of length k from u to every vertex, by recursion on k.
inline std::vector<mpz_class> walk_counts(const Graph& g, Vertex u, std::size_t k) {
    std::vector<mpz_class> cur(g.order(), 0);
    cur[u] = 1;
    for (std::size_t s = 0; s < k; ++s) {
        std::vector<mpz_class> next(g.order(), 0);
        for (Vertex x = 0; x < g.order(); ++x)
            for (Vertex y : g.neighbors(x)) next[y] += cur[x];
        cur = std::move(next);
    }
    return cur;
}

/// exp(i t A) by Taylor series with scaling and squaring, in long double.
inline std::vector<std::vector<std::complex<long double>>> expm_i(const Graph& g, double t) {
    using C = std::complex<long double>;
    using M = std::vector<std::vector<C>>;
    const std::size_t n = g.order();
    auto mul = [n](const M& a, const M& b) {
        M c(n, std::vector<C>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        return c;
    };
    long double norm = 0;
    for (Vertex v = 0; v < n; ++v) norm = std::max<long double>(norm, g.degree(v));
    norm *= std::abs(t);
    int squarings = 0;
    while (norm > 0.25L) {
        norm /= 2;
        ++squarings;
    }
    const long double scale = static_cast<long double>(t) / std::ldexp(1.0L, squarings);
    M x(n, std::vector<C>(n, 0));
    for (auto [i, j] : g.edges()) x[i][j] = x[j][i] = C(0, scale);
    M result(n, std::vector<C>(n, 0)), term(n, std::vector<C>(n, 0));
    for (std::size_t i = 0; i < n; ++i) result[i][i] = term[i][i] = 1;
    for (int k = 1; k <= 30; ++k) {
        term = mul(term, x);
        for (auto& row : term)
            for (auto& e : row) e /= static_cast<long double>(k);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) result[i][j] += term[i][j];
    }
    for (int s = 0; s < squarings; ++s) result = mul(result, result);
    return result;
}

/// Every automorphism, by trying all n! permutations. Small n only.
inline std::vector<std::vector<Vertex>> automorphisms(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), 0);
    const auto edges = g.edges();
    std::vector<std::vector<Vertex>> out;
    do {
        bool ok = true;
        for (auto [a, b] : edges)
            if (!g.adjacent(p[a], p[b])) {
                ok = false;
                break;
            }
        if (ok) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline std::vector<std::size_t> distances(const Graph& g, Vertex u) {
    std::vector<std::size_t> d(g.order(), SIZE_MAX);
    std::queue<Vertex> q;
    d[u] = 0;
    q.push(u);
    while (!q.empty()) {
        const Vertex x = q.front();
        q.pop();
        for (Vertex y : g.neighbors(x))
            if (d[y] == SIZE_MAX) {
                d[y] = d[x] + 1;
                q.push(y);
            }
    }
    return d;
}

/// Each vertex has the same number of neighbours in cell j as any other
/// vertex of its cell.
inline bool equitable(const Graph& g, const std::vector<std::vector<Vertex>>& cells) {
    std::vector<std::size_t> cell_of(g.order());
    for (std::size_t c = 0; c < cells.size(); ++c)
        for (Vertex v : cells[c]) cell_of[v] = c;
    for (const auto& cell : cells) {
        std::vector<std::size_t> ref;
        for (Vertex v : cell) {
            std::vector<std::size_t> counts(cells.size(), 0);
            for (Vertex w : g.neighbors(v)) ++counts[cell_of[w]];
            if (ref.empty()) ref = counts;
            else if (counts != ref) return false;
        }
    }
    return true;
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (coin(rng)) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

inline Graph random_connected_graph(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> density(0.2, 0.8);
    for (;;) {
        Graph g = random_graph(n, density(rng), rng);
        if (g.connected()) return g;
    }
}

}  // namespace oracle
