#pragma once

// Effective resistances, spanning 2-forest counts, moments and
// accessibility indices of connected threshold graphs, all exact.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tkem/code.hpp"
#include "tkem/rational.hpp"

namespace tkem {

/// r_{j,v} from the code-level closed form. Indices are 0-based and may be
/// given in either order; j == v yields 0.
Rational resistance_closed_form(const ConstructionCode& code, std::size_t j, std::size_t v);

struct ResistanceProfile {
  std::size_t n = 0;
  RationalMatrix resistance;
  BigInt tau;
  BigIntMatrix forest;             // tau * resistance
  std::vector<Rational> moment;
  std::vector<Rational> accessibility;
  Rational kemeny;
};

/// Full R (O(n^2) via suffix sums of 1/(lambda_i i(i+1))) and tau. The
/// forest/moment/accessibility fields are left empty.
ResistanceProfile resistance_matrix(const ConstructionCode& code);

/// Every field filled.
ResistanceProfile resistance_profile(const ConstructionCode& code);

BigIntMatrix forest_matrix(const ConstructionCode& code);

/// mu(v) = sum_{j != v} d_j r_{j,v}.
std::vector<Rational> moment_profile(const ConstructionCode& code);

/// alpha(v) = mu(v) - K.
std::vector<Rational> accessibility_profile(const ConstructionCode& code);

struct OrderingCheck {
  bool passed = true;
  std::size_t comparisons = 0;
  /// First failing (i, v, w) when !passed.
  std::optional<std::array<std::size_t, 3>> witness;

  void record(bool ok, std::size_t i, std::size_t v, std::size_t w);
};

struct OrderingReport {
  OrderingCheck case_i_equal;      // 00 / 11 neighbours: equal F entries
  OrderingCheck case_ii_leq;       // 01 / 10 neighbours: <=, equality only for a leading 01
  OrderingCheck case_iii_strict;   // 0 1..1 0: strict
  OrderingCheck case_iv_leq;       // 1 0..0 1: <=, equality iff v is last and i < w
  OrderingCheck chain_zero_block;  // F-ordering chains for i in a 0-run
  OrderingCheck chain_one_block;   // F-ordering chains for i in a 1-run
  OrderingCheck degree_characterization;
  OrderingCheck block_moment_ordering;
  OrderingCheck s1_equality;       // mu(0-run 1) == mu(1-run 1) iff s_1 == 1
  OrderingCheck moment_degree;     // alpha(v) > alpha(w) iff mu(v) > mu(w) iff d_v < d_w

  bool all_passed() const;
  /// (name, check) pairs in a fixed order.
  std::vector<std::pair<std::string, const OrderingCheck*>> entries() const;
};

OrderingReport verify_orderings(const ConstructionCode& code);
OrderingReport verify_orderings(const ConstructionCode& code, const ResistanceProfile& profile);

}  // namespace tkem
