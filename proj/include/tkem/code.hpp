#pragma once

// Threshold-graph construction codes.
//
// A code c_1 c_2 ... c_n describes a graph built one vertex at a time:
// c_i = 0 adds vertex i isolated, c_i = 1 adds it adjacent to every earlier
// vertex. The first bit is always 0 and the graph is connected iff the last
// bit is 1. All indices in this library are 0-based: vertex k is the
// (k+1)-th vertex of the construction.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tkem {

class ConstructionCode {
 public:
  /// The empty code; only useful as a placeholder.
  ConstructionCode() = default;

  /// Validates: nonempty, every entry 0/1, first entry 0.
  static ConstructionCode from_bits(std::vector<std::uint8_t> bits);

  /// Bit k of `mask` becomes the bit of vertex k. Requires 1 <= n <= 64.
  static ConstructionCode from_mask(std::uint64_t mask, std::size_t n);

  std::size_t size() const noexcept { return bits_.size(); }
  int operator[](std::size_t k) const noexcept { return bits_[k]; }
  std::span<const std::uint8_t> bits() const noexcept { return bits_; }

  bool connected() const noexcept { return bits_.size() >= 2 && bits_.back() == 1; }
  std::size_t ones() const noexcept;

  /// Inverse of from_mask; only meaningful for n <= 64.
  std::uint64_t mask() const noexcept;

  /// Plain 0/1 string.
  std::string str() const;

  friend bool operator==(const ConstructionCode&, const ConstructionCode&) = default;
  friend auto operator<=>(const ConstructionCode&, const ConstructionCode&) = default;

 private:
  explicit ConstructionCode(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {}
  std::vector<std::uint8_t> bits_;
};

/// Accepts "01100011" or block notation "0 1^2 0^3 1^2". In block notation a
/// token is either a literal run of bits or a single bit with a caret
/// exponent.
ConstructionCode parse_code(std::string_view text);

/// Block notation; runs of length 1 are rendered bare ("0"), longer runs
/// with an explicit exponent ("0^3").
std::string render_blocks(const ConstructionCode& code);

/// Alternating run lengths s_1, t_1, s_2, t_2, ... starting with a zero-run.
/// For a disconnected code the final t is absent.
struct BlockForm {
  std::vector<std::size_t> runs;

  struct Run {
    int bit;
    std::size_t first;  // vertex index of the first vertex in the run
    std::size_t length;
  };

  std::size_t block_count() const noexcept { return (runs.size() + 1) / 2; }
  std::size_t zero_run(std::size_t l) const { return runs.at(2 * l); }
  std::size_t one_run(std::size_t l) const { return runs.at(2 * l + 1); }
  std::vector<Run> spans() const;
  ConstructionCode expand() const;
};

BlockForm blocks(const ConstructionCode& code);

struct DegreeProfile {
  std::vector<std::int64_t> degrees;
  /// tail_ones[k] = number of 1-bits strictly after vertex k.
  std::vector<std::int64_t> tail_ones;
  std::int64_t edges = 0;
};

DegreeProfile degree_profile(const ConstructionCode& code);

struct AdjacencyStructure {
  std::size_t n = 0;
  /// Unordered pairs with first < second, sorted.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::vector<std::vector<std::uint32_t>> neighbours;

  std::size_t degree(std::size_t v) const { return neighbours[v].size(); }
  bool adjacent(std::size_t u, std::size_t v) const;
};

AdjacencyStructure build_graph(const ConstructionCode& code);

bool is_connected(const AdjacencyStructure& graph);

/// Connected codes of order n, in lexicographic order of the interior bits
/// c_2 ... c_{n-1}. Index i maps to the code whose interior bits spell i in
/// binary with c_2 as the most significant bit.
class CodeRange {
 public:
  CodeRange(std::size_t n, std::uint64_t first, std::uint64_t last);

  std::size_t order() const noexcept { return n_; }
  std::uint64_t first_index() const noexcept { return first_; }
  std::uint64_t size() const noexcept { return last_ - first_; }

  /// Code at absolute index i.
  ConstructionCode at(std::uint64_t i) const;
  /// Vertex mask (see ConstructionCode::from_mask) of the code at absolute index i.
  std::uint64_t mask_at(std::uint64_t i) const noexcept;
  /// Absolute enumeration index of a connected code of this order.
  static std::uint64_t index_of(const ConstructionCode& code);

  /// Sub-ranges sharing a fixed prefix of `prefix_bits` interior bits, in
  /// order. Each is consumed independently.
  std::vector<CodeRange> split(unsigned prefix_bits) const;

  class iterator {
   public:
    using value_type = ConstructionCode;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const CodeRange* range, std::uint64_t i) : range_(range), i_(i) {}
    ConstructionCode operator*() const { return range_->at(i_); }
    iterator& operator++() { ++i_; return *this; }
    iterator operator++(int) { auto t = *this; ++i_; return t; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.i_ == b.i_; }

   private:
    const CodeRange* range_ = nullptr;
    std::uint64_t i_ = 0;
  };

  iterator begin() const { return {this, first_}; }
  iterator end() const { return {this, last_}; }

 private:
  std::size_t n_;
  std::uint64_t first_;
  std::uint64_t last_;
};

/// All 2^(n-2) connected codes of order n. Requires 2 <= n <= 62.
CodeRange enumerate_codes(std::size_t n);

/// 0 1^r 0^(n-r-2) 1.
ConstructionCode pineapple_code(std::size_t n, std::size_t r);

/// r such that `code` equals pineapple_code(n, r), or -1.
int pineapple_parameter(const ConstructionCode& code);

}  // namespace tkem
