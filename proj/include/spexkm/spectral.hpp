#pragma once

#include <vector>

#include "spexkm/graph.hpp"

namespace spexkm {

inline constexpr double kDenseTolerance = 1e-10;
inline constexpr double kRootTolerance = 1e-12;
inline constexpr long kDenseIterationCap = 1'000'000;

struct SpectralResult {
  double lambda = 0.0;
  std::vector<double> perron;  // nonnegative, unit 2-norm
  double residual = 0.0;       // ||A x - lambda x||_inf
  long iterations = 0;
};

/// Equitable quotient matrix of a vertex partition. `blocks` is empty when the
/// matrix was written down symbolically rather than taken from a graph.
struct QuotientMatrix {
  std::vector<std::vector<Vertex>> blocks;
  int size = 0;
  std::vector<double> entries;  // row-major size x size

  double at(int i, int j) const { return entries[static_cast<std::size_t>(i) * size + j]; }
};

/// Largest adjacency eigenvalue by power iteration on A + I.
/// Throws NumericalError if the iteration cap is hit.
SpectralResult spectral_radius_dense(const Graph& g, double tol = kDenseTolerance);

/// Spectral radius of K_{n_1,...,n_k}: the root of sum n_i/(x + n_i) = 1 in (0, n-1].
double multipartite_lambda(const PartSizes& parts, double tol = kRootTolerance);

/// x^{n-k} ( prod (x + n_i) - sum n_i prod_{j != i} (x + n_j) ).
double multipartite_charpoly_eval(const PartSizes& parts, double x);

/// Verifies equitability exactly and returns the block row-sum matrix.
/// Throws DomainError naming the offending vertex and block pair.
QuotientMatrix quotient_matrix(const Graph& g, const std::vector<std::vector<Vertex>>& blocks);

/// Perron root of a nonnegative matrix (order <= 64) by power iteration on M + I,
/// stopped by the Collatz–Wielandt bracket.
double perron_root(const QuotientMatrix& q, double tol = kRootTolerance);

/// The quotient matrix of K_{b_1..b_{k-1}} v (K̄_a ∪ K_{a1}) over blocks B_1..B_{k-1}, Ã, A_1.
QuotientMatrix join_family_quotient(const PartSizes& b_parts, int a, int a1);

/// λ(K_{b_1..b_{k-1}} v (K̄_a ∪ K_{a1})) as the Perron root of its quotient. a, a1 >= 1.
double join_family_lambda(const PartSizes& b_parts, int a, int a1, double tol = kRootTolerance);

/// f0(x) = -x(x + 1 - a1)/h(x) + sum b_i/(b_i + x). Throws DomainError at a pole.
double f0_eval(double lambda, const PartSizes& b_parts, int a, int a1);

/// h(x) = x^2 + (a + 1) x + a (1 - a1).
double h_eval(double lambda, int a, int a1);

}  // namespace spexkm
