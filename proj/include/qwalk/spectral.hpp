#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <vector>

#include "qwalk/exact.hpp"
#include "qwalk/graph.hpp"

namespace qwalk {

/// Exact characteristic polynomial det(tI - A): monic, degree n.
using ExactPoly = IntPoly;

struct SpectralLimits {
    std::size_t max_dense_order = 4096;  ///< cap for the dense eigensolver
    std::size_t exact_cap = 64;          ///< cap for exact polynomial work
};

/// Distinct eigenvalues (descending) with their spectral idempotents.
struct SpectralDecomposition {
    std::size_t order = 0;
    std::vector<double> eigenvalues;          ///< theta_1 > ... > theta_d
    std::vector<std::size_t> multiplicities;  ///< m_r, summing to order
    std::vector<Eigen::MatrixXd> idempotents; ///< E_r, exactly symmetric
    std::vector<double> spectrum;             ///< all n eigenvalues, descending
    double spectral_radius = 0.0;
    double grouping_tolerance = 0.0;

    std::size_t size() const noexcept { return eigenvalues.size(); }
};

/// max(1e-8, n * rho * 1e-12)
double default_grouping_tolerance(std::size_t n, double rho);

inline constexpr double kDefaultSupportTolerance = 1e-10;

/// Dense adjacency as a double matrix.
Eigen::MatrixXd adjacency_dense(const Graph& g);

/// Symmetric eigendecomposition with eigenvalues clustered on sorted gaps.
/// A non-positive tolerance selects default_grouping_tolerance.
SpectralDecomposition decompose(const Graph& g, double grouping_tolerance = 0.0,
                                const SpectralLimits& limits = {});

/// H(t) = sum_r exp(i theta_r t) E_r.
Eigen::MatrixXcd transition_matrix(const SpectralDecomposition& sd, double t);

/// Single entry H(t)_{u,v}.
std::complex<double> transition_entry(const SpectralDecomposition& sd, Vertex u, Vertex v,
                                      double t);

/// Indices r with (E_r)_{u,u} > tol, ascending.
std::vector<std::size_t> eigenvalue_support(const SpectralDecomposition& sd, Vertex u,
                                            double tol = kDefaultSupportTolerance);

/// Faddeev-LeVerrier over big integers.
ExactPoly char_poly_exact(const Graph& g, const SpectralLimits& limits = {});

/// phi(X \ u); the constant polynomial 1 when X has a single vertex.
ExactPoly char_poly_deleted(const Graph& g, Vertex u, const SpectralLimits& limits = {});

struct GapReport {
    double sigma = 0.0;  ///< minimum gap over the eigenvalue multiset
    double bound = 0.0;  ///< 12 / (n + 1)
    bool satisfied = false;
};

/// Repeated eigenvalues (gaps below the grouping tolerance) give sigma = 0.
GapReport eigenvalue_gap(const SpectralDecomposition& sd);
GapReport eigenvalue_gap(const Graph& g);

struct TraceIdentity {
    double lhs = 0.0;  ///< sum over ordered pairs of (theta_i - theta_j)^2
    double rhs = 0.0;  ///< 4 n |E|
};

TraceIdentity trace_identity_check(const SpectralDecomposition& sd, std::size_t edge_count);
TraceIdentity trace_identity_check(const Graph& g);

}  // namespace qwalk
