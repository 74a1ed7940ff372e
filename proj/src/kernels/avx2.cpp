#include <immintrin.h>

#include <bit>

#include "tkem/kernels.hpp"

namespace tkem::kernels::avx2 {

namespace {

double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

}  // namespace

double dot(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size();
  __m256d acc = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4)
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(a.data() + k), _mm256_loadu_pd(b.data() + k)));
  double s = hsum(acc);
  for (; k < n; ++k) s += a[k] * b[k];
  return s;
}

void matvec(std::span<const double> a, std::span<const double> x, std::span<double> y) {
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) y[i] = dot(a.subspan(i * n, n), x);
}

// Four codes per vector, one lane each. The arithmetic mirrors the scalar
// reference operation by operation so both produce identical doubles.
void kemeny_batch(std::span<const std::uint64_t> masks, unsigned n, std::span<double> out) {
  const std::size_t count = masks.size();
  std::size_t b = 0;
  const __m256i one_i = _mm256_set1_epi64x(1);
  const __m256d one_d = _mm256_set1_pd(1.0);
  const __m256d two_d = _mm256_set1_pd(2.0);
  for (; b + 4 <= count; b += 4) {
    alignas(32) double theta0[4];
    alignas(32) double two_m0[4];
    for (int l = 0; l < 4; ++l) {
      const std::uint64_t mask = masks[b + l];
      theta0[l] = static_cast<double>(std::popcount(mask >> 1));
      double tm = 0.0;
      for (unsigned q = 1; q < n; ++q) tm += 2.0 * q * static_cast<double>((mask >> q) & 1u);
      two_m0[l] = tm;
    }
    const __m256i vmask = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(masks.data() + b));
    __m256d theta = _mm256_load_pd(theta0);
    const __m256d two_m = _mm256_load_pd(two_m0);
    __m256d k = _mm256_set1_pd(static_cast<double>(n) - 1.0);
    __m256d prefix = _mm256_setzero_pd();
    for (unsigned i = 1; i < n; ++i) {
      const __m256i bit = _mm256_and_si256(_mm256_srl_epi64(vmask, _mm_cvtsi32_si128(static_cast<int>(i))), one_i);
      const __m256d c = _mm256_and_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(bit, one_i)), one_d);
      const __m256d di = _mm256_set1_pd(static_cast<double>(i));
      const __m256d lambda = _mm256_add_pd(theta, _mm256_mul_pd(di, c));
      const __m256d w = _mm256_sub_pd(prefix, _mm256_mul_pd(_mm256_mul_pd(di, _mm256_sub_pd(di, one_d)), c));
      const __m256d drop = _mm256_div_pd(c, lambda);
      const __m256d den =
          _mm256_mul_pd(_mm256_mul_pd(two_m, _mm256_mul_pd(di, _mm256_add_pd(di, one_d))), lambda);
      const __m256d gain = _mm256_div_pd(_mm256_mul_pd(w, _mm256_sub_pd(two_m, w)), den);
      k = _mm256_add_pd(_mm256_sub_pd(k, drop), gain);
      theta = _mm256_sub_pd(theta, c);
      prefix = _mm256_add_pd(prefix, _mm256_mul_pd(_mm256_mul_pd(two_d, di), c));
    }
    _mm256_storeu_pd(out.data() + b, k);
  }
  if (b < count) scalar::kemeny_batch(masks.subspan(b), n, out.subspan(b));
}

}  // namespace tkem::kernels::avx2
