#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "tkem/errors.hpp"
#include "tkem/kemeny.hpp"
#include "tkem/search.hpp"

using namespace tkem;

namespace {

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("tkem-test-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  auto p = dir / name;
  std::filesystem::remove(p);
  return p;
}

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

TEST_CASE("small searches") {
  const auto r4 = max_kemeny_search(4, 1);
  CHECK(r4.argmax.str() == "0101");
  CHECK(r4.max_k == ratio(61, 24));
  CHECK(r4.codes_examined == 4);
  CHECK(r4.ties.size() == 1);
  CHECK(r4.is_pineapple);
  CHECK(r4.r == 1);

  // the path beats the triangle: 3/2 > 4/3
  const auto r3 = max_kemeny_search(3, 2);
  CHECK(r3.argmax.str() == "001");
  CHECK(r3.max_k == ratio(3, 2));
  CHECK(r3.codes_examined == 2);
  CHECK(r3.is_pineapple);
  CHECK(r3.r == 0);

  const auto r10 = max_kemeny_search(10, 3);
  CHECK(r10.argmax == pineapple_code(10, pineapple_argmax(10).r_star));
  CHECK(r10.max_k == ratio(73, 8));
}

TEST_CASE("search agrees with a plain exhaustive loop") {
  for (std::size_t n = 3; n <= 12; ++n) {
    Rational best;
    std::vector<ConstructionCode> ties;
    for (const auto& code : enumerate_codes(n)) {
      const auto k = *kemeny_from_code(code).exact;
      if (ties.empty() || k > best) {
        best = k;
        ties = {code};
      } else if (k == best) {
        ties.push_back(code);
      }
    }
    const auto rep = max_kemeny_search(n, 2);
    CHECK(rep.max_k == best);
    CHECK(rep.ties == ties);
    CHECK(rep.argmax == ties.front());
  }
}

TEST_CASE("report invariants and consistency with the pineapple family") {
  for (const auto& rep : verify_conjecture_range(3, 16, 2)) {
    const auto n = rep.n;
    CHECK(rep.codes_examined == (std::uint64_t{1} << (n - 2)));
    CHECK(rep.complete);
    CHECK(rep.max_k < Rational(2 * static_cast<long>(n) - 3));
    CHECK(rep.remainder == rep.max_k_float - rep.asymptote);
    CHECK(rep.asymptote == doctest::Approx(n + std::sqrt(static_cast<double>(n)) / 2));
    bool some_equal = false;
    for (std::size_t r = 0; r + 2 <= n; ++r) {
      const auto k = pineapple_kemeny(n, r);
      CHECK(rep.max_k >= k);
      some_equal = some_equal || k == rep.max_k;
    }
    CHECK(some_equal == rep.is_pineapple);
    if (rep.is_pineapple) CHECK(pineapple_kemeny(n, static_cast<std::size_t>(rep.r)) == rep.max_k);
  }
}

TEST_CASE("float screening reproduces the all-exact search") {
  for (std::size_t n = 3; n <= 16; ++n) {
    SearchOptions exact;
    exact.exact_only = true;
    exact.threads = 2;
    const auto a = max_kemeny_search(n, exact);
    const auto b = max_kemeny_search(n, 2);
    CHECK(same_result(a, b));
  }
}

TEST_CASE("result is independent of the thread count") {
  for (std::size_t n : {9u, 14u, 19u}) {
    const auto one = max_kemeny_search(n, 1);
    for (unsigned t : {2u, 4u, 8u}) CHECK(same_result(one, max_kemeny_search(n, t)));
  }
}

TEST_CASE("checkpoint resume reaches the identical report") {
  const std::size_t n = 20;  // 2^18 codes, four chunks
  const auto reference = max_kemeny_search(n, 2);
  const auto path = scratch("resume.ckpt");

  SearchOptions partial;
  partial.threads = 2;
  partial.checkpoint = path;
  partial.chunk_limit = 1;
  const auto first = max_kemeny_search(n, partial);
  CHECK_FALSE(first.complete);
  CHECK(first.codes_examined == (std::uint64_t{1} << 16));

  partial.chunk_limit = 2;
  const auto second = max_kemeny_search(n, partial);
  CHECK_FALSE(second.complete);
  CHECK(second.codes_examined == 3 * (std::uint64_t{1} << 16));

  partial.chunk_limit.reset();
  const auto resumed = max_kemeny_search(n, partial);
  CHECK(resumed.complete);
  CHECK(same_result(resumed, reference));

  // a finished checkpoint is reused without recomputation
  const auto again = max_kemeny_search(n, partial);
  CHECK(same_result(again, reference));

  std::ifstream in(path);
  std::size_t lines = 0;
  for (std::string line; std::getline(in, line);) ++lines;
  CHECK(lines >= 4);
}

TEST_CASE("checkpoint from another order is rejected") {
  const auto path = scratch("other.ckpt");
  SearchOptions o;
  o.checkpoint = path;
  max_kemeny_search(8, o);
  CHECK(kind_of([&] { max_kemeny_search(9, o); }) == ErrorKind::CheckpointMismatch);

  const auto junk = scratch("junk.ckpt");
  std::ofstream(junk) << "0 0101 61\n";
  o.checkpoint = junk;
  CHECK(kind_of([&] { max_kemeny_search(4, o); }) == ErrorKind::CheckpointMismatch);
}

TEST_CASE("search limits") {
  CHECK(kind_of([] { max_kemeny_search(2, 1); }) == ErrorKind::OrderOutOfRange);
  CHECK(kind_of([] { max_kemeny_search(27, 1); }) == ErrorKind::OrderOutOfRange);
  CHECK(kind_of([] { max_kemeny_search(5, 0); }) == ErrorKind::ParameterOutOfRange);
  CHECK(kind_of([] { verify_conjecture_range(5, 4, 1); }) == ErrorKind::OrderOutOfRange);
  CHECK(verify_conjecture_range(3, 3, 1).size() == 1);
}
