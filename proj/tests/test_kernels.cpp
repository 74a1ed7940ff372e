#include <doctest.h>

#include <cmath>
#include <vector>

#include "support/generators.hpp"
#include "tkem/kemeny.hpp"
#include "tkem/kernels.hpp"

using namespace tkem;
namespace k = tkem::kernels;

TEST_CASE("scalar table is always available") {
  CHECK(k::available(k::Isa::Scalar));
  CHECK(k::table(k::Isa::Scalar).isa == k::Isa::Scalar);
  CHECK(k::isa_name(k::Isa::Avx2) == "avx2");
}

TEST_CASE("force and reset") {
  k::force(k::Isa::Scalar);
  CHECK(k::active().isa == k::Isa::Scalar);
  k::reset();
  CHECK(k::active().isa == (k::available(k::Isa::Avx2) ? k::Isa::Avx2 : k::Isa::Scalar));
  k::reset();
}

TEST_CASE("scalar Kemeny batch matches the exact value") {
  for (std::size_t n = 2; n <= 14; ++n) {
    const auto range = enumerate_codes(n);
    std::vector<std::uint64_t> masks;
    for (std::uint64_t i = 0; i < range.size(); ++i) masks.push_back(range.mask_at(i));
    std::vector<double> out(masks.size());
    k::scalar::kemeny_batch(masks, static_cast<unsigned>(n), out);
    for (std::size_t b = 0; b < masks.size(); ++b) {
      const auto exact = kemeny_from_code(ConstructionCode::from_mask(masks[b], n)).value;
      CHECK(std::abs(out[b] - exact) < 1e-10);
    }
  }
}

TEST_CASE("AVX2 variants are equivalent to the scalar reference") {
  if (!k::available(k::Isa::Avx2)) {
    MESSAGE("AVX2 unavailable on this host; equivalence not exercised");
    return;
  }
  gen::Source src(17);

  SUBCASE("dot") {
    for (std::size_t len : {0u, 1u, 3u, 4u, 5u, 8u, 31u, 64u, 257u}) {
      std::vector<double> a(len), b(len);
      for (auto& x : a) x = src.real(-3, 3);
      for (auto& x : b) x = src.real(-3, 3);
      const double s = k::scalar::dot(a, b);
      const double v = k::avx2::dot(a, b);
      double scale = 0;
      for (std::size_t i = 0; i < len; ++i) scale += std::abs(a[i] * b[i]);
      CHECK(std::abs(s - v) <= 1e-14 * (scale + 1));
    }
  }

  SUBCASE("matvec") {
    for (std::size_t n : {1u, 2u, 4u, 7u, 13u, 40u}) {
      std::vector<double> a(n * n), x(n), ys(n), yv(n);
      for (auto& e : a) e = src.real(-2, 2);
      for (auto& e : x) e = src.real(-2, 2);
      k::scalar::matvec(a, x, ys);
      k::avx2::matvec(a, x, yv);
      for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(ys[i] - yv[i]) <= 1e-12);
    }
  }

  SUBCASE("kemeny batch, bitwise") {
    for (std::size_t n = 2; n <= 16; ++n) {
      const auto range = enumerate_codes(n);
      // odd batch length exercises the scalar tail
      std::vector<std::uint64_t> masks;
      for (std::uint64_t i = 0; i < range.size(); ++i) masks.push_back(range.mask_at(i));
      if (masks.size() > 3) masks.pop_back();
      std::vector<double> s(masks.size()), v(masks.size());
      k::scalar::kemeny_batch(masks, static_cast<unsigned>(n), s);
      k::avx2::kemeny_batch(masks, static_cast<unsigned>(n), v);
      for (std::size_t b = 0; b < masks.size(); ++b) CHECK(s[b] == v[b]);
    }
    for (int t = 0; t < 200; ++t) {
      const std::size_t n = src.order(17, 60);
      std::vector<std::uint64_t> masks;
      for (int b = 0; b < 9; ++b) masks.push_back(src.connected(n).mask());
      std::vector<double> s(masks.size()), v(masks.size());
      k::scalar::kemeny_batch(masks, static_cast<unsigned>(n), s);
      k::avx2::kemeny_batch(masks, static_cast<unsigned>(n), v);
      for (std::size_t b = 0; b < masks.size(); ++b) CHECK(s[b] == v[b]);
    }
  }
}
