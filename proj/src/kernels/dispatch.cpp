#include <atomic>

#include "tkem/kernels.hpp"

namespace tkem::kernels {

namespace {

constexpr KernelTable kScalar{Isa::Scalar, &scalar::dot, &scalar::matvec, &scalar::kemeny_batch};
#if defined(TKEM_HAVE_AVX2_KERNELS)
constexpr KernelTable kAvx2{Isa::Avx2, &avx2::dot, &avx2::matvec, &avx2::kemeny_batch};
#endif

// -1: automatic selection
std::atomic<int> forced{-1};

bool cpu_has_avx2() noexcept {
#if defined(TKEM_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

bool available(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2: return cpu_has_avx2();
  }
  return false;
}

const KernelTable& table(Isa isa) noexcept {
#if defined(TKEM_HAVE_AVX2_KERNELS)
  if (isa == Isa::Avx2 && available(Isa::Avx2)) return kAvx2;
#endif
  (void)isa;
  return kScalar;
}

const KernelTable& active() noexcept {
  const int f = forced.load(std::memory_order_relaxed);
  if (f >= 0) return table(static_cast<Isa>(f));
  static const KernelTable& best = available(Isa::Avx2) ? table(Isa::Avx2) : kScalar;
  return best;
}

void force(Isa isa) noexcept {
  if (available(isa)) forced.store(static_cast<int>(isa), std::memory_order_relaxed);
}

void reset() noexcept { forced.store(-1, std::memory_order_relaxed); }

}  // namespace tkem::kernels
