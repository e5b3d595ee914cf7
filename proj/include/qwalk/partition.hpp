#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <vector>

#include "qwalk/exact.hpp"
#include "qwalk/graph.hpp"

namespace qwalk {

/// Partition of 0..n-1 in canonical form: each cell sorted, cells ordered by
/// their minimum vertex. Equal partitions compare equal structurally.
class Partition {
public:
    /// Validates disjointness and coverage.
    static Partition from_cells(std::size_t n, std::vector<std::vector<Vertex>> cells);
    /// Vertices with equal colour share a cell.
    static Partition from_colors(const std::vector<std::size_t>& colors);
    static Partition discrete(std::size_t n);
    static Partition trivial(std::size_t n);

    std::size_t order() const noexcept { return cell_of_.size(); }
    std::size_t size() const noexcept { return cells_.size(); }
    const std::vector<std::vector<Vertex>>& cells() const noexcept { return cells_; }
    const std::vector<Vertex>& cell(std::size_t i) const { return cells_.at(i); }
    std::size_t cell_of(Vertex v) const { return cell_of_.at(v); }
    bool is_singleton(Vertex v) const { return cells_[cell_of(v)].size() == 1; }

    /// Every cell of *this lies inside a cell of `coarser`.
    bool refines(const Partition& coarser) const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.cells_ == b.cells_; }

private:
    std::vector<std::vector<Vertex>> cells_;
    std::vector<std::size_t> cell_of_;
};

/// Splits cells by neighbour-count signatures against the current cells
/// until stable. O(rounds * (n + m) log n); fine for the orders used here.
Partition coarsest_equitable_refinement(const Graph& g, const Partition& pi0);

/// Coarsest equitable refinement of {{u}, V \ {u}}.
Partition delta_u(const Graph& g, Vertex u);

bool check_delta_equality(const Graph& g, Vertex u, Vertex v);

/// Result of the exact equitability test and the equivalent matrix forms.
struct EquitableCheck {
    bool equitable = false;             ///< neighbour counts constant on cells
    std::optional<IntMatrix> quotient;  ///< B[i][j], present when equitable
    bool column_space_invariant = false;  ///< rank [P | AP] == rank P
    bool intertwines = false;             ///< AP = PB for some B
    bool commutes_with_projection = false;  ///< A QQ^T == QQ^T A

    bool all_agree() const {
        return equitable == column_space_invariant && equitable == intertwines &&
               equitable == commutes_with_projection;
    }
};

EquitableCheck is_equitable(const Graph& g, const Partition& pi);

/// Normalized characteristic matrix Q of a partition: column j is the
/// indicator of cell j scaled by 1/sqrt|C_j|. Kept symbolic so that identities
/// can be checked exactly.
class NormalizedCharMatrix {
public:
    explicit NormalizedCharMatrix(Partition pi) : pi_(std::move(pi)) {}

    const Partition& partition() const noexcept { return pi_; }

    /// Unscaled 0/1 characteristic matrix P (n x |pi|).
    IntMatrix characteristic() const;
    /// Q^T Q = I, checked as P^T P == diag(|C_j|).
    bool orthonormal_columns() const;
    /// Q Q^T: block diagonal with blocks (1/r) J_r.
    RationalMatrix projection() const;
    /// Q Q^T e_u == e_u.
    bool fixes(Vertex u) const;
    Eigen::MatrixXd dense() const;

private:
    Partition pi_;
};

/// Orbits of Aut(X)_u by backtracking search. With `prune_by_refinement`
/// the candidate images of a vertex are restricted to its Delta_u cell.
Partition stabilizer_orbits_bruteforce(const Graph& g, Vertex u, std::size_t n_cap = 10,
                                       bool prune_by_refinement = true);

/// Aut(X)_u == Aut(X)_v: v is a fixed point of Aut(X)_u and u of Aut(X)_v.
bool stabilizers_equal(const Graph& g, Vertex u, Vertex v, std::size_t n_cap = 10);

/// Some automorphism maps u to v (brute force, n <= n_cap).
bool automorphic_vertices(const Graph& g, Vertex u, Vertex v, std::size_t n_cap = 10);

}  // namespace qwalk
