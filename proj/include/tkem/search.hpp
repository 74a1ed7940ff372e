#pragma once

// Exhaustive maximization of Kemeny's constant over connected threshold
// graphs of a fixed order.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "tkem/code.hpp"
#include "tkem/rational.hpp"

namespace tkem {

struct SearchOptions {
  unsigned threads = 1;
  /// Evaluate every code exactly instead of screening in double precision.
  bool exact_only = false;
  /// Append-only progress file; existing lines are reused on restart.
  std::optional<std::filesystem::path> checkpoint;
  /// Stop after this many freshly evaluated chunks (simulated interruption).
  std::optional<std::uint64_t> chunk_limit;
};

/// Codes are processed in chunks of 2^16 sharing their leading interior bits.
inline constexpr unsigned search_chunk_bits = 16;

struct SearchReport {
  std::size_t n = 0;
  ConstructionCode argmax;  // lexicographically smallest maximizer
  Rational max_k;
  double max_k_float = 0.0;
  bool is_pineapple = false;  // some maximizer has pineapple form
  int r = -1;                 // its parameter, or -1
  std::vector<ConstructionCode> ties;  // every maximizer, ascending
  std::uint64_t codes_examined = 0;
  bool complete = true;
  double seconds = 0.0;
  double asymptote = 0.0;  // n + sqrt(n)/2
  double remainder = 0.0;  // max K - asymptote
};

/// Equal in everything except wall time.
bool same_result(const SearchReport& a, const SearchReport& b);

SearchReport max_kemeny_search(std::size_t n, unsigned threads);
SearchReport max_kemeny_search(std::size_t n, const SearchOptions& options);

/// One report per n in [n_min, n_max].
std::vector<SearchReport> verify_conjecture_range(std::size_t n_min, std::size_t n_max, unsigned threads);

}  // namespace tkem
