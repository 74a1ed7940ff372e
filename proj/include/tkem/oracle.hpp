#pragma once

// Brute-force cross-checks. Nothing in here uses a threshold-graph formula:
// every routine works on a plain adjacency structure.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tkem/code.hpp"
#include "tkem/rational.hpp"

namespace tkem {

struct WalkStatistics {
  std::size_t n = 0;
  std::vector<double> transition;  // row-major, D^-1 A
  std::vector<double> rho;         // eigenvalues of T, descending (rho[0] = 1)
  std::vector<double> stationary;  // d_i / 2m
  std::vector<double> mfpt;        // row-major, zero diagonal
  std::vector<double> kappa;       // sum_{j != i} w_j m_{i,j} for each start i
  double kemeny = 0.0;             // from the eigenvalues

  double t(std::size_t i, std::size_t j) const { return transition[i * n + j]; }
  double m(std::size_t i, std::size_t j) const { return mfpt[i * n + j]; }
};

/// sum over the non-unit eigenvalues of T of 1 / (1 - rho).
double kemeny_eigen_oracle(const AdjacencyStructure& graph);

/// Fundamental-matrix mean first passage times.
WalkStatistics mfpt_matrix(const AdjacencyStructure& graph);

/// alpha(j) = sum_{i != j} w_i m_{i,j}.
std::vector<double> accessibility_oracle(const AdjacencyStructure& graph);

/// Row-major effective resistances from a numeric pseudo-inverse.
std::vector<double> resistance_oracle(const AdjacencyStructure& graph);

/// Numeric Laplacian eigenvalues, ascending.
std::vector<double> laplacian_eigenvalues_oracle(const AdjacencyStructure& graph);

/// Matrix-tree determinant by fraction-free elimination.
BigInt spanning_tree_oracle(const AdjacencyStructure& graph);

/// Every spanning 2-forest of a small graph, tallied by vertex bipartition.
class TwoForestCensus {
 public:
  static constexpr std::size_t max_order = 9;

  explicit TwoForestCensus(const AdjacencyStructure& graph);

  std::size_t order() const noexcept { return n_; }
  /// Total number of spanning 2-forests.
  std::uint64_t total() const noexcept;
  /// |F(x; y)|: forests with x and y in different trees.
  std::uint64_t separating(std::size_t x, std::size_t y) const;
  /// |F(z, x; y)|: z and x share a tree, y is in the other one.
  std::uint64_t refined(std::size_t z, std::size_t x, std::size_t y) const;

 private:
  std::size_t n_ = 0;
  // forests_[s]: forests whose tree avoiding vertex 0 has vertex set s
  std::vector<std::uint64_t> forests_;
};

/// |F(i; j)| by exhaustive enumeration (n <= 9).
std::uint64_t two_forest_enumeration(const AdjacencyStructure& graph, std::size_t i, std::size_t j);

}  // namespace tkem
