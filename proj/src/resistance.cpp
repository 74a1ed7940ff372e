#include "tkem/resistance.hpp"

#include "tkem/errors.hpp"
#include "tkem/kemeny.hpp"
#include "tkem/spectral.hpp"

namespace tkem {

namespace {

void check_index(const ConstructionCode& code, std::size_t v) {
  if (v >= code.size()) throw Error(ErrorKind::IndexOutOfRange, "vertex index out of range");
}

// 1 / (lambda_i * i * (i+1)) for the 1-based column index i.
Rational column_weight(const LaplacianSpectrum& s, std::size_t i) {
  return ratio(1, BigInt(s.eigenvalues[i - 1]) * static_cast<long>(i * (i + 1)));
}

}  // namespace

Rational resistance_closed_form(const ConstructionCode& code, std::size_t j, std::size_t v) {
  require_connected(code);
  check_index(code, j);
  check_index(code, v);
  if (j == v) return Rational(0);
  if (j > v) std::swap(j, v);
  const auto s = laplacian_spectrum(code);
  // 1-based positions p = j+1 < q = v+1
  const std::size_t p = j + 1;
  const std::size_t q = v + 1;
  Rational r(0);
  if (p > 1) r += ratio(static_cast<long>(p - 1), BigInt(s.eigenvalues[p - 2]) * static_cast<long>(p));
  r += ratio(static_cast<long>(q), BigInt(s.eigenvalues[q - 2]) * static_cast<long>(q - 1));
  for (std::size_t i = p; i + 2 <= q; ++i) r += column_weight(s, i);
  return r;
}

ResistanceProfile resistance_matrix(const ConstructionCode& code) {
  require_connected(code);
  const std::size_t n = code.size();
  const auto s = laplacian_spectrum(code);

  // prefix[k] = sum_{i=1}^{k} 1/(lambda_i i (i+1))
  std::vector<Rational> prefix(n, Rational(0));
  for (std::size_t i = 1; i < n; ++i) prefix[i] = prefix[i - 1] + column_weight(s, i);

  // head[a]: the term attached to the lower vertex, tail[b]: to the upper one
  std::vector<Rational> head(n, Rational(0)), tail(n, Rational(0));
  for (std::size_t a = 1; a < n; ++a) {
    head[a] = ratio(static_cast<long>(a), BigInt(s.eigenvalues[a - 1]) * static_cast<long>(a + 1));
    tail[a] = ratio(static_cast<long>(a + 1), BigInt(s.eigenvalues[a - 1]) * static_cast<long>(a));
  }

  ResistanceProfile out;
  out.n = n;
  out.resistance = RationalMatrix(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Rational r = head[a] + tail[b] + prefix[b - 1] - prefix[a];
      out.resistance(a, b) = r;
      out.resistance(b, a) = std::move(r);
    }
  out.tau = spanning_tree_count(code);
  return out;
}

namespace {

void fill_forest(ResistanceProfile& p) {
  p.forest = BigIntMatrix(p.n);
  for (std::size_t a = 0; a < p.n; ++a)
    for (std::size_t b = 0; b < p.n; ++b) {
      Rational f = p.resistance(a, b) * p.tau;
      if (f.get_den() != 1)
        throw Error(ErrorKind::NonIntegralEntry, "tau * r is not an integer at (" + std::to_string(a) + ", " +
                                                     std::to_string(b) + ")");
      p.forest(a, b) = f.get_num();
    }
}

void fill_moments(ResistanceProfile& p, const ConstructionCode& code) {
  const auto profile = degree_profile(code);
  p.moment.assign(p.n, Rational(0));
  for (std::size_t v = 0; v < p.n; ++v)
    for (std::size_t j = 0; j < p.n; ++j)
      if (j != v) p.moment[v] += p.resistance(j, v) * profile.degrees[j];
  p.kemeny = *kemeny_from_code(code).exact;
  p.accessibility.resize(p.n);
  for (std::size_t v = 0; v < p.n; ++v) p.accessibility[v] = p.moment[v] - p.kemeny;
}

}  // namespace

ResistanceProfile resistance_profile(const ConstructionCode& code) {
  auto p = resistance_matrix(code);
  fill_forest(p);
  fill_moments(p, code);
  return p;
}

BigIntMatrix forest_matrix(const ConstructionCode& code) {
  auto p = resistance_matrix(code);
  fill_forest(p);
  return p.forest;
}

std::vector<Rational> moment_profile(const ConstructionCode& code) {
  auto p = resistance_matrix(code);
  fill_moments(p, code);
  return p.moment;
}

std::vector<Rational> accessibility_profile(const ConstructionCode& code) {
  auto p = resistance_matrix(code);
  fill_moments(p, code);
  return p.accessibility;
}

void OrderingCheck::record(bool ok, std::size_t i, std::size_t v, std::size_t w) {
  ++comparisons;
  if (!ok && passed) {
    passed = false;
    witness = std::array<std::size_t, 3>{i, v, w};
  }
}

std::vector<std::pair<std::string, const OrderingCheck*>> OrderingReport::entries() const {
  return {
      {"caseI_equal", &case_i_equal},
      {"caseII_leq", &case_ii_leq},
      {"caseIII_strict", &case_iii_strict},
      {"caseIV_leq", &case_iv_leq},
      {"chain_zero_block", &chain_zero_block},
      {"chain_one_block", &chain_one_block},
      {"degree_characterization", &degree_characterization},
      {"block_moment_ordering", &block_moment_ordering},
      {"s1_equality", &s1_equality},
      {"moment_degree", &moment_degree},
  };
}

bool OrderingReport::all_passed() const {
  for (const auto& [name, check] : entries())
    if (!check->passed) return false;
  return true;
}

OrderingReport verify_orderings(const ConstructionCode& code) {
  return verify_orderings(code, resistance_profile(code));
}

namespace {

enum class Link { Leq, Less };

// Corollary chains over run representatives for a fixed vertex i.
void check_chain(OrderingCheck& check, const BigIntMatrix& f, std::size_t i,
                 const std::vector<BlockForm::Run>& zero_runs, const std::vector<BlockForm::Run>& one_runs) {
  const std::size_t k = one_runs.size();
  auto rep = [i](const BlockForm::Run& run) -> std::optional<std::size_t> {
    for (std::size_t x = run.first; x < run.first + run.length; ++x)
      if (x != i) return x;
    return std::nullopt;
  };
  // w_k, ..., w_1, v_1, ..., v_k
  std::vector<std::optional<std::size_t>> items;
  for (std::size_t l = k; l-- > 0;) items.push_back(rep(one_runs[l]));
  for (std::size_t l = 0; l < k; ++l) items.push_back(rep(zero_runs[l]));
  auto link = [k](std::size_t t) { return (t == 0 && k >= 2) || t + 1 == k ? Link::Leq : Link::Less; };

  std::vector<std::size_t> kept;
  std::vector<Link> rel;
  for (std::size_t t = 0; t < items.size(); ++t) {
    if (!items[t]) {
      // a < b <= c and a <= b < c both give a < c
      if (!rel.empty() && t + 1 < items.size() && link(t) == Link::Less) rel.back() = Link::Less;
      continue;
    }
    kept.push_back(*items[t]);
    if (t + 1 < items.size()) rel.push_back(link(t));
  }
  if (kept.empty()) return;
  check.record(sgn(f(i, kept.front())) > 0, i, kept.front(), i);
  for (std::size_t t = 0; t + 1 < kept.size(); ++t) {
    const auto& a = f(i, kept[t]);
    const auto& b = f(i, kept[t + 1]);
    check.record(rel[t] == Link::Less ? a < b : a <= b, i, kept[t], kept[t + 1]);
  }
}

}  // namespace

OrderingReport verify_orderings(const ConstructionCode& code, const ResistanceProfile& profile) {
  require_connected(code);
  const std::size_t n = code.size();
  const auto& f = profile.forest;
  if (f.size() != n || profile.moment.size() != n)
    throw Error(ErrorKind::LengthMismatch, "ordering checks need a fully populated profile");
  const auto degrees = degree_profile(code).degrees;
  const auto runs = blocks(code).spans();

  std::vector<BlockForm::Run> zero_runs, one_runs;
  for (const auto& run : runs) (run.bit ? one_runs : zero_runs).push_back(run);

  OrderingReport rep;

  for (std::size_t p = 0; p + 1 < n; ++p) {
    if (code[p] == code[p + 1]) {
      for (std::size_t i = 0; i < n; ++i)
        if (i != p && i != p + 1) rep.case_i_equal.record(f(i, p) == f(i, p + 1), i, p, p + 1);
    } else {
      const std::size_t v = code[p] ? p : p + 1;  // the 1
      const std::size_t w = code[p] ? p + 1 : p;  // the 0
      for (std::size_t i = 0; i < n; ++i) {
        if (i == v || i == w) continue;
        const bool ok = p == 0 ? f(i, v) == f(i, w) : f(i, v) < f(i, w);
        rep.case_ii_leq.record(ok, i, v, w);
      }
    }
  }

  // v < w, both 0 (case iii) or both 1 (case iv), strictly the other bit in between
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 2; b < n; ++b) {
      if (code[a] != code[b]) continue;
      bool separated = true;
      for (std::size_t q = a + 1; q < b && separated; ++q) separated = code[q] != code[a];
      if (!separated) continue;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == a || i == b) continue;
        if (code[a] == 0) {
          rep.case_iii_strict.record(f(i, a) < f(i, b), i, a, b);
        } else {
          // w = a, v = b
          const bool equal_expected = b == n - 1 && i < a;
          rep.case_iv_leq.record(equal_expected ? f(i, b) == f(i, a) : f(i, b) < f(i, a), i, b, a);
        }
      }
    }

  for (std::size_t i = 0; i < n; ++i)
    check_chain(code[i] ? rep.chain_one_block : rep.chain_zero_block, f, i, zero_runs, one_runs);

  // Twin classes: the vertices of a run, with vertex 0 joining the first
  // 1-run when s_1 = 1. Distinct-degree ties are confined to vertex n-1
  // (alone in the final run) against the class of the 1-run before the final
  // 0-run, with i no later than that run.
  std::vector<std::size_t> run_of(n);
  for (std::size_t r = 0; r < runs.size(); ++r)
    for (std::size_t x = runs[r].first; x < runs[r].first + runs[r].length; ++x) run_of[x] = r;
  if (runs[0].length == 1) run_of[0] = 1;
  const std::size_t rc = runs.size();
  auto tie_allowed = [&](std::size_t i, std::size_t x, std::size_t y) {
    const std::size_t lo = std::min(x, y), hi = std::max(x, y);
    if (hi != n - 1 || runs.back().length != 1 || rc < 3) return false;
    const auto& before = runs[rc - 3];
    return run_of[lo] == rc - 3 && i < before.first + before.length;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t w = 0; w < n; ++w)
      for (std::size_t v = 0; v < n; ++v) {
        if (i == w || i == v || w == v) continue;
        bool ok = degrees[w] > degrees[v] || f(i, w) >= f(i, v);
        if (degrees[w] != degrees[v] && f(i, w) == f(i, v)) ok = ok && tie_allowed(i, w, v);
        rep.degree_characterization.record(ok, i, w, v);
      }

  const auto& mu = profile.moment;
  const auto& alpha = profile.accessibility;
  for (const auto& run : runs)
    for (std::size_t x = run.first + 1; x < run.first + run.length; ++x)
      rep.block_moment_ordering.record(mu[x] == mu[run.first] && alpha[x] == alpha[run.first], x, run.first, x);
  const std::size_t k = one_runs.size();
  for (std::size_t l = 0; l + 1 < k; ++l) {
    const auto z0 = zero_runs[l].first, z1 = zero_runs[l + 1].first;
    const auto o0 = one_runs[l].first, o1 = one_runs[l + 1].first;
    rep.block_moment_ordering.record(mu[z1] > mu[z0] && alpha[z1] > alpha[z0], z1, z1, z0);
    rep.block_moment_ordering.record(mu[o0] > mu[o1] && alpha[o0] > alpha[o1], o0, o0, o1);
  }
  const auto v1 = zero_runs[0].first, w1 = one_runs[0].first;
  rep.block_moment_ordering.record(mu[v1] >= mu[w1] && alpha[v1] >= alpha[w1], v1, v1, w1);
  rep.s1_equality.record((mu[v1] == mu[w1]) == (zero_runs[0].length == 1), v1, v1, w1);

  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w) {
      if (v == w) continue;
      const bool a = alpha[v] > alpha[w];
      const bool m = mu[v] > mu[w];
      const bool d = degrees[v] < degrees[w];
      rep.moment_degree.record(a == m && m == d, v, v, w);
    }

  return rep;
}

}  // namespace tkem
