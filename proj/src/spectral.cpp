#include "tkem/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "tkem/errors.hpp"
#include "tkem/kernels.hpp"

namespace tkem {

void require_connected(const ConstructionCode& code) {
  if (code.size() < 2) throw Error(ErrorKind::OrderTooSmall, "random-walk quantities need n >= 2");
  if (!code.connected()) throw Error(ErrorKind::Disconnected, "code " + code.str() + " does not end in 1");
}

double BasisEntry::value() const {
  return static_cast<double>(numerator) / std::sqrt(static_cast<double>(radicand));
}

BasisEntry OrthonormalBasis::entry(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw Error(ErrorKind::IndexOutOfRange, "basis index out of range");
  if (j + 1 == n_) return {1, static_cast<std::int64_t>(n_)};
  const auto col = static_cast<std::int64_t>(j + 1);
  if (i <= j) return {1, col * (col + 1)};
  if (i == j + 1) return {-col, col * (col + 1)};
  return {0, 1};
}

std::vector<std::int64_t> OrthonormalBasis::integer_column(std::size_t j) const {
  if (j >= n_) throw Error(ErrorKind::IndexOutOfRange, "basis column out of range");
  std::vector<std::int64_t> v(n_, 0);
  if (j + 1 == n_) {
    std::fill(v.begin(), v.end(), 1);
    return v;
  }
  std::fill(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(j + 1), 1);
  v[j + 1] = -static_cast<std::int64_t>(j + 1);
  return v;
}

std::int64_t OrthonormalBasis::column_norm2(std::size_t j) const {
  if (j + 1 == n_) return static_cast<std::int64_t>(n_);
  const auto col = static_cast<std::int64_t>(j + 1);
  return col * (col + 1);
}

std::vector<double> OrthonormalBasis::dense() const {
  std::vector<double> u(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) u[i * n_ + j] = (*this)(i, j);
  return u;
}

OrthonormalBasis hessenberg_basis(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::OrderTooSmall, "basis needs n >= 2");
  return OrthonormalBasis(n);
}

std::vector<std::int64_t> LaplacianSpectrum::sorted() const {
  auto s = eigenvalues;
  std::sort(s.begin(), s.end());
  return s;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
  if (n_ != rhs.n_) throw Error(ErrorKind::LengthMismatch, "matrix sizes differ");
  IntegerMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const auto a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

IntegerMatrix laplacian_matrix(const ConstructionCode& code) {
  const std::size_t n = code.size();
  IntegerMatrix l(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (!code[j]) continue;
    for (std::size_t i = 0; i < j; ++i) {
      l(i, j) = l(j, i) = -1;
      ++l(i, i);
      ++l(j, j);
    }
  }
  return l;
}

LaplacianSpectrum laplacian_spectrum(const ConstructionCode& code) {
  const std::size_t n = code.size();
  if (n < 2) throw Error(ErrorKind::OrderTooSmall, "spectrum needs n >= 2");
  const auto profile = degree_profile(code);
  LaplacianSpectrum s;
  s.eigenvalues.assign(n, 0);
  for (std::size_t j = 0; j + 1 < n; ++j)
    s.eigenvalues[j] = profile.tail_ones[j] + static_cast<std::int64_t>(j + 1) * code[j + 1];
  return s;
}

double diagonalization_residual(const ConstructionCode& code) {
  const std::size_t n = code.size();
  const auto spectrum = laplacian_spectrum(code);
  const auto basis = hessenberg_basis(n);
  const auto lap = laplacian_matrix(code);
  const auto& k = kernels::active();

  std::vector<double> l(n * n);
  std::transform(lap.data().begin(), lap.data().end(), l.begin(), [](auto x) { return static_cast<double>(x); });
  // columns of U stored contiguously
  std::vector<double> cols(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) cols[j * n + i] = basis(i, j);

  std::vector<double> lu(n);
  double worst = 0.0;
  const std::span<const double> all(cols);
  for (std::size_t j = 0; j < n; ++j) {
    k.matvec(l, all.subspan(j * n, n), lu);
    for (std::size_t i = 0; i < n; ++i) {
      double v = k.dot(all.subspan(i * n, n), lu);
      if (i == j) v -= static_cast<double>(spectrum.eigenvalues[j]);
      worst = std::max(worst, std::abs(v));
    }
  }
  return worst;
}

bool commuting_check(const ConstructionCode& a, const ConstructionCode& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::LengthMismatch, "codes have different lengths");
  const auto la = laplacian_matrix(a);
  const auto lb = laplacian_matrix(b);
  return la * lb == lb * la;
}

BigInt spanning_tree_count(const ConstructionCode& code) {
  require_connected(code);
  const auto spectrum = laplacian_spectrum(code);
  BigInt product = 1;
  for (std::size_t j = 0; j + 1 < code.size(); ++j) product *= spectrum.eigenvalues[j];
  const BigInt n = static_cast<unsigned long>(code.size());
  if (product % n != 0) throw Error(ErrorKind::NonIntegralEntry, "eigenvalue product not divisible by n");
  return product / n;
}

RationalMatrix pseudo_inverse(const ConstructionCode& code) {
  require_connected(code);
  const std::size_t n = code.size();
  const auto spectrum = laplacian_spectrum(code);
  const auto basis = hessenberg_basis(n);
  RationalMatrix out(n);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const auto v = basis.integer_column(j);
    Rational scale(1, 1);
    scale /= Rational(spectrum.eigenvalues[j] * basis.column_norm2(j));
    // v has support on rows 0 .. j+1
    for (std::size_t a = 0; a <= j + 1; ++a)
      for (std::size_t b = 0; b <= j + 1; ++b) out(a, b) += scale * (v[a] * v[b]);
  }
  return out;
}

}  // namespace tkem
