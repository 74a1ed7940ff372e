#pragma once

// Laplacian spectra of threshold graphs.
//
// Written in construction-code order, every threshold Laplacian of order n
// is diagonalized by one upper-Hessenberg orthonormal matrix U. Column j
// (0-based, j < n-1) is (1,...,1,-(j+1),0,...,0)/sqrt((j+1)(j+2)) with j+1
// leading ones; the last column is the normalized all-ones vector. The
// matching eigenvalue is lambda_j = theta_j + (j+1) c_{j+1}, using the
// 0-based tail-one counts of DegreeProfile.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tkem/code.hpp"
#include "tkem/rational.hpp"

namespace tkem {

/// p / sqrt(q), q > 0.
struct BasisEntry {
  std::int64_t numerator = 0;
  std::int64_t radicand = 1;

  double value() const;
  friend bool operator==(const BasisEntry&, const BasisEntry&) = default;
};

class OrthonormalBasis {
 public:
  explicit OrthonormalBasis(std::size_t n) : n_(n) {}

  std::size_t size() const noexcept { return n_; }

  /// Exact entry U(i, j), 0-based.
  BasisEntry entry(std::size_t i, std::size_t j) const;
  double operator()(std::size_t i, std::size_t j) const { return entry(i, j).value(); }

  /// Column j scaled to integers: (1,...,1,-(j+1),0,...,0), or all ones for
  /// the last column.
  std::vector<std::int64_t> integer_column(std::size_t j) const;
  /// Squared norm of integer_column(j): (j+1)(j+2), or n for the last column.
  std::int64_t column_norm2(std::size_t j) const;

  /// Floating view, row-major.
  std::vector<double> dense() const;

 private:
  std::size_t n_;
};

OrthonormalBasis hessenberg_basis(std::size_t n);

/// Eigenvalues in basis-column order; the last one is 0.
struct LaplacianSpectrum {
  std::vector<std::int64_t> eigenvalues;

  std::vector<std::int64_t> sorted() const;
};

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  explicit IntegerMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  const std::vector<std::int64_t>& data() const noexcept { return data_; }

  IntegerMatrix operator*(const IntegerMatrix& rhs) const;
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> data_;
};

/// L = D - A in code order.
IntegerMatrix laplacian_matrix(const ConstructionCode& code);

LaplacianSpectrum laplacian_spectrum(const ConstructionCode& code);

/// max |(U^T L U - Lambda)_{ij}| in floating point.
double diagonalization_residual(const ConstructionCode& code);

/// Exact check that L_A L_B = L_B L_A.
bool commuting_check(const ConstructionCode& a, const ConstructionCode& b);

/// Number of spanning trees: product of the nonzero eigenvalues over n.
BigInt spanning_tree_count(const ConstructionCode& code);

/// Exact Moore-Penrose inverse, accumulated as
/// sum_j (1/lambda_j) v_j v_j^T / |v_j|^2 over the integer eigenvectors.
RationalMatrix pseudo_inverse(const ConstructionCode& code);

/// Throws Disconnected / OrderTooSmall unless the code is connected with n >= 2.
void require_connected(const ConstructionCode& code);

}  // namespace tkem
