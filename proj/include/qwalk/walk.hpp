#pragma once

#include <cstddef>

#include "qwalk/exact.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/spectral.hpp"

namespace qwalk {

/// W_u: column k is A^k e_u, k = 0..n-1. Entry (w, k) counts walks of
/// length k from u to w.
struct WalkMatrix {
    Vertex base_vertex = 0;
    IntMatrix entries;
};

WalkMatrix walk_matrix(const Graph& g, Vertex u, std::size_t exact_cap = 64);

/// W_u^T W_u; entry (r, s) equals (A^{r+s})_{u,u} with 0-based r, s.
IntMatrix walk_gram(const WalkMatrix& w);

/// Rank of W_u and coprimality of phi(X \ u) with phi(X); throws
/// InvariantViolation if the two routes disagree.
bool is_controllable(const Graph& g, Vertex u, std::size_t exact_cap = 64);

/// Same, reusing precomputed polynomials and walk matrix.
bool is_controllable(const WalkMatrix& w, const ExactPoly& phi, const ExactPoly& phi_deleted);

bool cospectral_via_charpoly(const Graph& g, Vertex u, Vertex v, std::size_t exact_cap = 64);
bool cospectral_via_gram(const Graph& g, Vertex u, Vertex v, std::size_t exact_cap = 64);

/// deg phi(X) - deg gcd(phi(X), phi(X \ u)).
std::size_t pole_count(const ExactPoly& phi, const ExactPoly& phi_deleted);

struct SupportCrosscheck {
    std::size_t rank = 0;
    std::size_t support_size = 0;
    std::size_t pole_count = 0;

    bool agree() const { return rank == support_size && rank == pole_count; }
};

SupportCrosscheck support_size_crosscheck(const Graph& g, const SpectralDecomposition& sd,
                                          Vertex u, std::size_t exact_cap = 64,
                                          double support_tolerance = kDefaultSupportTolerance);

/// Q = W_v W_u^{-1} with its defining properties checked exactly.
struct TransferSimilarity {
    RationalMatrix q;
    bool commutes_with_adjacency = false;  ///< QA == AQ
    bool maps_u_to_v = false;              ///< Q e_u == e_v
    bool orthogonal = false;               ///< Q^T Q == I
    bool cospectral = false;               ///< Gram route, for the orthogonality equivalence
    bool permutation = false;              ///< 0/1 with one 1 per row and column
};

/// Requires both vertices controllable (u == v is allowed and gives Q = I).
TransferSimilarity transfer_similarity(const Graph& g, Vertex u, Vertex v,
                                       std::size_t exact_cap = 64);

}  // namespace qwalk
