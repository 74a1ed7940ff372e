#pragma once

// Floating-point inner loops with a portable scalar reference and SIMD
// variants chosen at runtime. Every variant must agree with the scalar
// reference to within rounding (see tests/test_kernels.cpp).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace tkem::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa) noexcept;

/// Sum of a[k] * b[k].
using DotFn = double (*)(std::span<const double> a, std::span<const double> b);

/// y = A x for a row-major n x n matrix A (n = x.size()).
using MatVecFn = void (*)(std::span<const double> a, std::span<const double> x, std::span<double> y);

/// Kemeny's constant in double precision for a batch of connected codes of
/// order n, each given as a vertex mask (bit k = c_{k+1}). Uses the
/// code-vector expression with incremental dot products; O(n) per code.
using KemenyBatchFn = void (*)(std::span<const std::uint64_t> masks, unsigned n, std::span<double> out);

struct KernelTable {
  Isa isa;
  DotFn dot;
  MatVecFn matvec;
  KemenyBatchFn kemeny_batch;
};

/// Whether the variant is compiled in and supported by this CPU.
bool available(Isa isa) noexcept;

/// Table for a specific variant; falls back to scalar when unavailable.
const KernelTable& table(Isa isa) noexcept;

/// Best available variant, unless overridden by force().
const KernelTable& active() noexcept;

/// Pins active() to a variant (tests and benchmarks). Unavailable variants
/// are ignored.
void force(Isa isa) noexcept;
void reset() noexcept;

namespace scalar {
double dot(std::span<const double> a, std::span<const double> b);
void matvec(std::span<const double> a, std::span<const double> x, std::span<double> y);
void kemeny_batch(std::span<const std::uint64_t> masks, unsigned n, std::span<double> out);
}  // namespace scalar

namespace avx2 {
double dot(std::span<const double> a, std::span<const double> b);
void matvec(std::span<const double> a, std::span<const double> x, std::span<double> y);
void kemeny_batch(std::span<const std::uint64_t> masks, unsigned n, std::span<double> out);
}  // namespace avx2

}  // namespace tkem::kernels
