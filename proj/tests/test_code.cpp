#include <doctest.h>

#include <set>

#include "support/generators.hpp"
#include "tkem/code.hpp"
#include "tkem/errors.hpp"

using namespace tkem;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::EmptyInput;
}

}  // namespace

TEST_CASE("parse bit strings and block notation") {
  CHECK(parse_code("0101").str() == "0101");
  CHECK(parse_code("0 1^2 0^3 1^2").str() == "01100011");
  CHECK(parse_code("  01 1 0^2  ").str() == "01100");
  CHECK(parse_code("0^1 1").str() == "01");
  CHECK(parse_code("0").size() == 1);
}

TEST_CASE("parse rejects malformed input") {
  CHECK(kind_of([] { parse_code(""); }) == ErrorKind::EmptyInput);
  CHECK(kind_of([] { parse_code("   "); }) == ErrorKind::EmptyInput);
  CHECK(kind_of([] { parse_code("0102"); }) == ErrorKind::IllegalCharacter);
  CHECK(kind_of([] { parse_code("0 1^0"); }) == ErrorKind::IllegalCharacter);
  CHECK(kind_of([] { parse_code("0 1^"); }) == ErrorKind::IllegalCharacter);
  CHECK(kind_of([] { parse_code("0 2^3"); }) == ErrorKind::IllegalCharacter);
  CHECK(kind_of([] { parse_code("0 11^3"); }) == ErrorKind::IllegalCharacter);
  CHECK(kind_of([] { parse_code("1011"); }) == ErrorKind::LeadingOne);
  CHECK(kind_of([] { parse_code("1^2 0"); }) == ErrorKind::LeadingOne);
}

TEST_CASE("block rendering round-trips") {
  CHECK(render_blocks(parse_code("01100011")) == "0 1^2 0^3 1^2");
  CHECK(render_blocks(parse_code("0101")) == "0 1 0 1");
  gen::Source src(11);
  for (int t = 0; t < 300; ++t) {
    const auto code = src.any(src.order(1, 40));
    CHECK(parse_code(render_blocks(code)) == code);
    CHECK(blocks(code).expand() == code);
  }
}

TEST_CASE("block form of a connected code alternates 0-runs and 1-runs") {
  const auto b = blocks(parse_code("01100011"));
  REQUIRE(b.runs == std::vector<std::size_t>{1, 2, 3, 2});
  CHECK(b.block_count() == 2);
  CHECK(b.zero_run(1) == 3);
  CHECK(b.one_run(0) == 2);
  const auto spans = b.spans();
  CHECK(spans[2].bit == 0);
  CHECK(spans[2].first == 3);
  CHECK(spans[2].length == 3);
}

TEST_CASE("degrees match the constructed adjacency structure") {
  for (std::size_t n = 1; n <= 10; ++n)
    for (const auto& code : gen::all_codes(n)) {
      const auto p = degree_profile(code);
      const auto g = build_graph(code);
      std::int64_t m = 0;
      for (std::size_t k = 0; k < n; ++k) {
        CHECK(p.degrees[k] == static_cast<std::int64_t>(g.degree(k)));
        m += static_cast<std::int64_t>(k) * code[k];
      }
      CHECK(p.edges == m);
      CHECK(p.edges == static_cast<std::int64_t>(g.edges.size()));
    }
}

TEST_CASE("a code is connected exactly when its last bit is 1") {
  for (std::size_t n = 2; n <= 11; ++n)
    for (const auto& code : gen::all_codes(n)) CHECK(is_connected(build_graph(code)) == code.connected());
  CHECK_FALSE(parse_code("0").connected());
}

TEST_CASE("adjacency: each 1-vertex dominates its predecessors, 0-vertices arrive isolated") {
  const auto g = build_graph(parse_code("0101"));
  CHECK(g.adjacent(0, 1));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.adjacent(2, 3));
  CHECK(g.adjacent(3, 0));
  CHECK(g.edges.size() == 4);
}

TEST_CASE("enumeration covers each connected code once in lexicographic order") {
  for (std::size_t n = 2; n <= 12; ++n) {
    const auto range = enumerate_codes(n);
    CHECK(range.size() == (std::uint64_t{1} << (n - 2)));
    std::vector<std::string> seen;
    std::uint64_t i = 0;
    for (const auto& code : range) {
      CHECK(code.connected());
      CHECK(CodeRange::index_of(code) == i);
      CHECK(ConstructionCode::from_mask(range.mask_at(i), n) == code);
      seen.push_back(code.str());
      ++i;
    }
    CHECK(std::is_sorted(seen.begin(), seen.end()));
    CHECK(std::set<std::string>(seen.begin(), seen.end()).size() == seen.size());
  }
}

TEST_CASE("split ranges partition the enumeration") {
  const auto range = enumerate_codes(12);
  for (unsigned bits : {0u, 1u, 3u, 10u, 20u}) {
    const auto parts = range.split(bits);
    std::uint64_t next = 0;
    for (const auto& p : parts) {
      CHECK(p.first_index() == next);
      next += p.size();
    }
    CHECK(next == range.size());
  }
  CHECK(range.split(3).size() == 8);
}

TEST_CASE("enumeration limits") {
  CHECK(kind_of([] { enumerate_codes(1); }) == ErrorKind::OrderTooSmall);
  CHECK(kind_of([] { enumerate_codes(63); }) == ErrorKind::OrderOutOfRange);
  CHECK(enumerate_codes(2).size() == 1);
}

TEST_CASE("pineapple codes") {
  CHECK(pineapple_code(10, 2).str() == "0110000001");
  CHECK(pineapple_code(3, 1).str() == "011");
  CHECK(pineapple_code(5, 0).str() == "00001");
  for (std::size_t n = 3; n <= 15; ++n)
    for (std::size_t r = 0; r + 2 <= n; ++r) CHECK(pineapple_parameter(pineapple_code(n, r)) == static_cast<int>(r));
  CHECK(pineapple_parameter(parse_code("0101")) == 1);
  CHECK(pineapple_parameter(parse_code("010101")) == -1);
  CHECK(pineapple_parameter(parse_code("0110")) == -1);
  CHECK(kind_of([] { pineapple_code(5, 4); }) == ErrorKind::ParameterOutOfRange);
  CHECK(kind_of([] { pineapple_code(2, 0); }) == ErrorKind::ParameterOutOfRange);
}

TEST_CASE("pineapple parameter identifies exactly the pineapple family") {
  for (std::size_t n = 3; n <= 10; ++n) {
    std::size_t hits = 0;
    for (const auto& code : enumerate_codes(n)) {
      const int r = pineapple_parameter(code);
      if (r < 0) continue;
      ++hits;
      CHECK(pineapple_code(n, static_cast<std::size_t>(r)) == code);
    }
    CHECK(hits == n - 1);
  }
}

TEST_CASE("masks") {
  const auto code = parse_code("01100011");
  CHECK(code.mask() == 0b11000110u);
  CHECK(ConstructionCode::from_mask(code.mask(), 8) == code);
  CHECK(kind_of([] { ConstructionCode::from_mask(1, 3); }) == ErrorKind::LeadingOne);
}
