#pragma once

// Kemeny's constant of the simple random walk on a connected threshold graph.
//
// Three routes are provided and cross-checked against each other:
//   - code-vector form: works on the code alone through the dot products
//     z_i.c (= lambda_i) and w_i.c; exact, O(n) with incremental dot products
//   - degree form: works on degrees and their prefix sums; exact
//   - spectral form: the pairwise sum over the floating Hessenberg basis

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "tkem/code.hpp"
#include "tkem/rational.hpp"

namespace tkem {

enum class KemenyMethod { CodeVector, DegreeForm, SpectralForm };

std::string_view method_name(KemenyMethod method) noexcept;

struct KemenyResult {
  std::optional<Rational> exact;  // empty for the spectral form
  double value = 0.0;
  std::size_t n = 0;
  std::int64_t m = 0;
  KemenyMethod method = KemenyMethod::CodeVector;
};

/// The integer vectors w_i, w_hat_i and z_i (i = 1 .. n-1, 1-based as in the
/// formula) of length n. Explicit materialization; used by the O(n^2)
/// reference path.
class CodeVectors {
 public:
  explicit CodeVectors(std::size_t n) : n_(n) {}

  std::size_t size() const noexcept { return n_; }
  std::vector<std::int64_t> w(std::size_t i) const;
  std::vector<std::int64_t> w_hat(std::size_t i) const;
  std::vector<std::int64_t> z(std::size_t i) const;

 private:
  std::size_t n_;
};

KemenyResult kemeny_from_code(const ConstructionCode& code);

/// Same formula with every dot product formed from CodeVectors explicitly.
KemenyResult kemeny_from_code_direct(const ConstructionCode& code);

KemenyResult kemeny_degree_form(const ConstructionCode& code);

KemenyResult kemeny_spectral_form(const ConstructionCode& code);

struct UpperBounds {
  Rational linear;    // 2n - 3
  double sparse = 0;  // n - 1 + 1.5 sqrt(m)
  bool linear_holds = false;
  bool sparse_holds = false;
  bool both_hold = false;
};

/// Evaluates both bounds against kemeny_from_code. Requires n >= 3.
UpperBounds upper_bounds(const ConstructionCode& code);
UpperBounds upper_bounds(const ConstructionCode& code, const Rational& kemeny);

/// Closed form for 0 1^r 0^(n-r-2) 1.
Rational pineapple_kemeny(std::size_t n, std::size_t r);

struct PineappleArgmax {
  std::size_t r_star = 0;            // smallest maximizing r
  Rational k_star;
  std::vector<std::size_t> tied_rs;  // every maximizing r, ascending
  std::set<std::size_t> predicted;   // set stated by the sqrt(2n) rule
};

/// Exact sweep over r = 0 .. n-2.
PineappleArgmax pineapple_argmax(std::size_t n);

}  // namespace tkem
