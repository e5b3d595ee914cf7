#include "qwalk/walk.hpp"

#include "qwalk/error.hpp"

namespace qwalk {

namespace {

void check_exact_cap(const Graph& g, std::size_t cap) {
    if (g.order() > cap)
        throw CapExceeded("order " + std::to_string(g.order()) + " exceeds exact cap " +
                          std::to_string(cap));
}

IntMatrix adjacency_int(const Graph& g) {
    IntMatrix a(g.order(), g.order());
    for (auto [i, j] : g.edges()) a(i, j) = a(j, i) = 1;
    return a;
}

}  // namespace

WalkMatrix walk_matrix(const Graph& g, Vertex u, std::size_t exact_cap) {
    check_vertex(g, u);
    check_exact_cap(g, exact_cap);
    const std::size_t n = g.order();
    WalkMatrix w{u, IntMatrix(n, n)};
    w.entries(u, 0) = 1;
    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            BigInt s = 0;
            for (Vertex nb : g.neighbors(Vertex(i))) s += w.entries(nb, k - 1);
            w.entries(i, k) = std::move(s);
        }
    return w;
}

IntMatrix walk_gram(const WalkMatrix& w) { return w.entries.transpose() * w.entries; }

std::size_t pole_count(const ExactPoly& phi, const ExactPoly& phi_deleted) {
    return std::size_t(phi.degree() - poly_gcd(phi, phi_deleted).degree());
}

bool is_controllable(const WalkMatrix& w, const ExactPoly& phi, const ExactPoly& phi_deleted) {
    const std::size_t n = w.entries.rows();
    const bool full_rank = rank_exact(w.entries) == n;
    const bool coprime = poly_gcd(phi, phi_deleted).degree() == 0;
    if (full_rank != coprime)
        throw InvariantViolation("walk-matrix rank and characteristic-polynomial coprimality "
                                 "disagree on controllability of vertex " +
                                 std::to_string(w.base_vertex));
    return full_rank;
}

bool is_controllable(const Graph& g, Vertex u, std::size_t exact_cap) {
    const SpectralLimits lim{.exact_cap = exact_cap};
    return is_controllable(walk_matrix(g, u, exact_cap), char_poly_exact(g, lim),
                           char_poly_deleted(g, u, lim));
}

bool cospectral_via_charpoly(const Graph& g, Vertex u, Vertex v, std::size_t exact_cap) {
    check_vertex(g, v);
    const SpectralLimits lim{.exact_cap = exact_cap};
    return char_poly_deleted(g, u, lim) == char_poly_deleted(g, v, lim);
}

bool cospectral_via_gram(const Graph& g, Vertex u, Vertex v, std::size_t exact_cap) {
    return walk_gram(walk_matrix(g, u, exact_cap)) == walk_gram(walk_matrix(g, v, exact_cap));
}

SupportCrosscheck support_size_crosscheck(const Graph& g, const SpectralDecomposition& sd,
                                          Vertex u, std::size_t exact_cap,
                                          double support_tolerance) {
    const SpectralLimits lim{.exact_cap = exact_cap};
    SupportCrosscheck out;
    out.rank = rank_exact(walk_matrix(g, u, exact_cap).entries);
    out.support_size = eigenvalue_support(sd, u, support_tolerance).size();
    out.pole_count = pole_count(char_poly_exact(g, lim), char_poly_deleted(g, u, lim));
    return out;
}

TransferSimilarity transfer_similarity(const Graph& g, Vertex u, Vertex v, std::size_t exact_cap) {
    const std::size_t n = g.order();
    const WalkMatrix wu = walk_matrix(g, u, exact_cap);
    const WalkMatrix wv = walk_matrix(g, v, exact_cap);
    if (rank_exact(wu.entries) != n)
        throw InvalidArgument("vertex " + std::to_string(u) + " is not controllable");
    if (rank_exact(wv.entries) != n)
        throw InvalidArgument("vertex " + std::to_string(v) + " is not controllable");

    TransferSimilarity out;
    const auto inv = inverse_exact(to_rational(wu.entries));
    if (!inv) throw InvariantViolation("full-rank walk matrix has no inverse");
    out.q = to_rational(wv.entries) * *inv;

    const RationalMatrix a = to_rational(adjacency_int(g));
    out.commutes_with_adjacency = out.q * a == a * out.q;
    out.maps_u_to_v = true;
    for (std::size_t r = 0; r < n; ++r)
        if (out.q(r, u) != (r == v ? 1 : 0)) out.maps_u_to_v = false;
    out.orthogonal = out.q.transpose() * out.q == RationalMatrix::identity(n);
    out.cospectral = walk_gram(wu) == walk_gram(wv);

    out.permutation = true;
    for (std::size_t r = 0; r < n && out.permutation; ++r) {
        std::size_t ones = 0;
        for (std::size_t c = 0; c < n; ++c) {
            if (out.q(r, c) == 1) ++ones;
            else if (out.q(r, c) != 0) out.permutation = false;
        }
        if (ones != 1) out.permutation = false;
    }
    if (out.permutation)
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t ones = 0;
            for (std::size_t r = 0; r < n; ++r) ones += out.q(r, c) == 1;
            if (ones != 1) out.permutation = false;
        }
    return out;
}

}  // namespace qwalk
