#include <bit>

#include "tkem/kernels.hpp"

namespace tkem::kernels::scalar {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

void matvec(std::span<const double> a, std::span<const double> x, std::span<double> y) {
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) y[i] = dot(a.subspan(i * n, n), x);
}

void kemeny_batch(std::span<const std::uint64_t> masks, unsigned n, std::span<double> out) {
  for (std::size_t b = 0; b < masks.size(); ++b) {
    const std::uint64_t mask = masks[b];
    double theta = static_cast<double>(std::popcount(mask >> 1));
    double two_m = 0.0;
    for (unsigned q = 1; q < n; ++q) two_m += 2.0 * q * static_cast<double>((mask >> q) & 1u);

    double k = static_cast<double>(n) - 1.0;
    double prefix = 0.0;  // sum_{q<i} 2q c_q, the head of w_i . c
    for (unsigned i = 1; i < n; ++i) {
      const double c = static_cast<double>((mask >> i) & 1u);
      const double di = static_cast<double>(i);
      const double lambda = theta + di * c;
      const double w = prefix - (di * (di - 1.0)) * c;
      const double drop = c / lambda;
      const double gain = (w * (two_m - w)) / ((two_m * (di * (di + 1.0))) * lambda);
      k = (k - drop) + gain;
      theta -= c;
      prefix += 2.0 * di * c;
    }
    out[b] = k;
  }
}

}  // namespace tkem::kernels::scalar
