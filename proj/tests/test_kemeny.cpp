#include <doctest.h>

#include "support/exact.hpp"
#include "support/generators.hpp"
#include "tkem/errors.hpp"
#include "tkem/kemeny.hpp"
#include "tkem/oracle.hpp"
#include "tkem/spectral.hpp"

using namespace tkem;

namespace {

Rational q(long num, long den) { return ratio(num, den); }

Rational code_k(const char* text) { return *kemeny_from_code(parse_code(text)).exact; }

}  // namespace

TEST_CASE("closed values") {
  CHECK(code_k("01") == q(1, 2));
  CHECK(code_k("0101") == q(61, 24));
  CHECK(code_k("0001") == q(5, 2));
  CHECK(code_k("0111") == q(9, 4));
  for (long n = 2; n <= 50; ++n) {
    const auto complete = parse_code("0 1^" + std::to_string(n - 1));
    CHECK(*kemeny_from_code(complete).exact == q((n - 1) * (n - 1), n));
    if (n >= 3) {
      const auto star = parse_code("0^" + std::to_string(n - 1) + " 1");
      CHECK(*kemeny_from_code(star).exact == Rational(n) - q(3, 2));
    }
  }
}

TEST_CASE("0011 against first-step analysis") {
  const auto code = parse_code("0011");
  CHECK(*kemeny_from_code(code).exact == ref::kemeny(build_graph(code)));
}

TEST_CASE("code-vector form agrees with exact first-step analysis") {
  for (std::size_t n = 2; n <= 7; ++n)
    for (const auto& code : enumerate_codes(n))
      CHECK(*kemeny_from_code(code).exact == ref::kemeny(build_graph(code)));
}

TEST_CASE("the three routes agree") {
  gen::Source src(23);
  for (int t = 0; t < 300; ++t) {
    const auto code = t % 2 ? src.connected(src.order(2, 40)) : src.blocky(src.order(2, 40));
    const auto a = kemeny_from_code(code);
    const auto b = kemeny_degree_form(code);
    const auto c = kemeny_from_code_direct(code);
    const auto d = kemeny_spectral_form(code);
    CHECK(*a.exact == *b.exact);
    CHECK(*a.exact == *c.exact);
    CHECK_FALSE(d.exact.has_value());
    CHECK(std::abs(d.value - a.value) < 1e-9);
    CHECK(a.m == degree_profile(code).edges);
    CHECK(a.method == KemenyMethod::CodeVector);
    CHECK(b.method == KemenyMethod::DegreeForm);
  }
}

TEST_CASE("exact values stay exact far beyond double precision") {
  const auto code = parse_code("0 1^30 0^40 1^5 0^50 1");
  const auto a = kemeny_from_code(code);
  CHECK(*a.exact == *kemeny_degree_form(code).exact);
  CHECK(std::abs(kemeny_spectral_form(code).value - a.value) < 1e-8);
}

TEST_CASE("code vectors") {
  const CodeVectors v(5);
  CHECK(v.z(2) == std::vector<std::int64_t>{0, 0, 3, 1, 1});
  CHECK(v.w_hat(2) == std::vector<std::int64_t>{0, 2, 4, 0, 0});
  CHECK(v.w(2) == std::vector<std::int64_t>{0, 2, -2, 0, 0});
  CHECK_THROWS_AS(v.z(0), Error);
  CHECK_THROWS_AS(v.w(5), Error);
  // z_i . c is the i-th eigenvalue in basis-column order
  const auto code = parse_code("01101");
  const auto s = laplacian_spectrum(code);
  for (std::size_t i = 1; i < 5; ++i) {
    std::int64_t dot = 0;
    const auto z = v.z(i);
    for (std::size_t p = 0; p < 5; ++p) dot += z[p] * code[p];
    CHECK(dot == s.eigenvalues[i - 1]);
  }
}

TEST_CASE("input errors") {
  CHECK_THROWS_AS(kemeny_from_code(parse_code("0110")), Error);
  CHECK_THROWS_AS(kemeny_degree_form(parse_code("0")), Error);
  CHECK_THROWS_AS(upper_bounds(parse_code("01")), Error);
}

TEST_CASE("upper bounds hold on every connected code up to n = 11") {
  for (std::size_t n = 3; n <= 11; ++n)
    for (const auto& code : enumerate_codes(n)) {
      const auto b = upper_bounds(code);
      CHECK(b.linear == Rational(2 * static_cast<long>(n) - 3));
      CHECK(b.linear_holds);
      CHECK(b.sparse_holds);
      CHECK(b.both_hold);
    }
}

TEST_CASE("upper bounds report violations") {
  const auto b = upper_bounds(parse_code("0101"), Rational(100));
  CHECK_FALSE(b.linear_holds);
  CHECK_FALSE(b.sparse_holds);
  CHECK_FALSE(b.both_hold);
  // K exactly at n - 1 + 1.5 sqrt(m): the bound is strict
  const auto tight = upper_bounds(parse_code("0101"), Rational(6));
  CHECK_FALSE(tight.sparse_holds);
}

TEST_CASE("pineapple closed form matches the general formula") {
  for (std::size_t n = 3; n <= 30; ++n)
    for (std::size_t r = 0; r + 2 <= n; ++r)
      CHECK(pineapple_kemeny(n, r) == *kemeny_from_code(pineapple_code(n, r)).exact);
}

TEST_CASE("pineapple values") {
  CHECK(pineapple_kemeny(21, 4) == 21);
  CHECK(pineapple_kemeny(21, 5) == 21);
  CHECK(pineapple_kemeny(10, 2) == q(73, 8));
  for (long n = 3; n <= 40; ++n) {
    CHECK(pineapple_kemeny(n, 0) == Rational(n) - q(3, 2));
    CHECK(pineapple_kemeny(n, n - 2) == q((n - 1) * (n - 1), n));
  }
  CHECK_THROWS_AS(pineapple_kemeny(5, 4), Error);
  CHECK_THROWS_AS(pineapple_kemeny(2, 0), Error);
}

TEST_CASE("pineapple argmax") {
  const auto a10 = pineapple_argmax(10);
  CHECK(a10.r_star == 2);
  CHECK(a10.tied_rs == std::vector<std::size_t>{2});
  CHECK(a10.k_star == q(73, 8));
  CHECK(a10.predicted == std::set<std::size_t>{3, 4});

  const auto a21 = pineapple_argmax(21);
  CHECK(a21.tied_rs == std::vector<std::size_t>{4, 5});
  CHECK(a21.k_star == 21);
  CHECK(a21.predicted == std::set<std::size_t>{6, 7});

  // the sweep really is a maximum
  for (std::size_t n = 3; n <= 60; ++n) {
    const auto a = pineapple_argmax(n);
    for (std::size_t r = 0; r + 2 <= n; ++r) {
      const auto k = pineapple_kemeny(n, r);
      CHECK(k <= a.k_star);
      const bool tied = std::find(a.tied_rs.begin(), a.tied_rs.end(), r) != a.tied_rs.end();
      CHECK((k == a.k_star) == tied);
    }
  }
}
