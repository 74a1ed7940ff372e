#include "tkem/kemeny.hpp"

#include <cmath>

#include "tkem/errors.hpp"
#include "tkem/spectral.hpp"

namespace tkem {

std::string_view method_name(KemenyMethod method) noexcept {
  switch (method) {
    case KemenyMethod::CodeVector: return "code-vector";
    case KemenyMethod::DegreeForm: return "degree-form";
    case KemenyMethod::SpectralForm: return "spectral-form";
  }
  return "unknown";
}

std::vector<std::int64_t> CodeVectors::w(std::size_t i) const {
  auto v = w_hat(i);
  const auto ii = static_cast<std::int64_t>(i);
  v.at(i) = -ii * (ii - 1);
  return v;
}

std::vector<std::int64_t> CodeVectors::w_hat(std::size_t i) const {
  if (i < 1 || i >= n_) throw Error(ErrorKind::IndexOutOfRange, "code vector index out of range");
  std::vector<std::int64_t> v(n_, 0);
  for (std::size_t p = 0; p <= i; ++p) v[p] = 2 * static_cast<std::int64_t>(p);
  return v;
}

std::vector<std::int64_t> CodeVectors::z(std::size_t i) const {
  if (i < 1 || i >= n_) throw Error(ErrorKind::IndexOutOfRange, "code vector index out of range");
  std::vector<std::int64_t> v(n_, 0);
  v[i] = static_cast<std::int64_t>(i) + 1;
  for (std::size_t p = i + 1; p < n_; ++p) v[p] = 1;
  return v;
}

namespace {

std::int64_t edge_count(const ConstructionCode& code) {
  std::int64_t m = 0;
  for (std::size_t k = 0; k < code.size(); ++k) m += static_cast<std::int64_t>(k) * code[k];
  return m;
}

// One summand pair of the code-vector expression for index i (1-based):
// -c_{i+1}/lambda_i + (w.c)(2m - w.c) / (2m i(i+1) lambda_i).
void add_code_vector_term(Rational& k, std::int64_t i, int c_next, std::int64_t lambda, std::int64_t wc,
                          std::int64_t two_m) {
  if (c_next) k -= ratio(1, lambda);
  if (wc == 0) return;
  BigInt num = wc;
  num *= two_m - wc;
  BigInt den = two_m;
  den *= i * (i + 1);
  den *= lambda;
  k += ratio(num, den);
}

KemenyResult finish(Rational value, const ConstructionCode& code, std::int64_t m, KemenyMethod method) {
  KemenyResult r;
  r.value = value.get_d();
  r.exact = std::move(value);
  r.n = code.size();
  r.m = m;
  r.method = method;
  return r;
}

}  // namespace

KemenyResult kemeny_from_code(const ConstructionCode& code) {
  require_connected(code);
  const std::size_t n = code.size();
  const std::int64_t m = edge_count(code);
  std::int64_t theta = static_cast<std::int64_t>(code.ones()) - code[0];
  std::int64_t prefix = 0;
  Rational k(static_cast<long>(n) - 1);
  for (std::size_t idx = 1; idx < n; ++idx) {
    const auto i = static_cast<std::int64_t>(idx);
    const int c = code[idx];
    const std::int64_t lambda = theta + i * c;
    const std::int64_t wc = prefix - i * (i - 1) * c;
    add_code_vector_term(k, i, c, lambda, wc, 2 * m);
    theta -= c;
    prefix += 2 * i * c;
  }
  return finish(std::move(k), code, m, KemenyMethod::CodeVector);
}

KemenyResult kemeny_from_code_direct(const ConstructionCode& code) {
  require_connected(code);
  const std::size_t n = code.size();
  const std::int64_t m = edge_count(code);
  const CodeVectors vectors(n);
  auto dot = [&](const std::vector<std::int64_t>& v) {
    std::int64_t s = 0;
    for (std::size_t p = 0; p < n; ++p) s += v[p] * code[p];
    return s;
  };
  Rational k(static_cast<long>(n) - 1);
  for (std::size_t idx = 1; idx < n; ++idx) {
    add_code_vector_term(k, static_cast<std::int64_t>(idx), code[idx], dot(vectors.z(idx)), dot(vectors.w(idx)),
                         2 * m);
  }
  return finish(std::move(k), code, m, KemenyMethod::CodeVector);
}

KemenyResult kemeny_degree_form(const ConstructionCode& code) {
  require_connected(code);
  const std::size_t n = code.size();
  const auto profile = degree_profile(code);
  const std::int64_t two_m = 2 * profile.edges;
  Rational k(0);
  std::int64_t prefix = profile.degrees[0];
  for (std::size_t q = 1; q < n; ++q) {
    const auto qq = static_cast<std::int64_t>(q);
    const std::int64_t d = profile.degrees[q];
    const std::int64_t gap = prefix - qq * d;
    Rational bracket(prefix + qq * qq * d);
    bracket -= ratio(BigInt(gap) * gap, two_m);
    bracket /= Rational(BigInt(d + code[q]) * (qq * (qq + 1)));
    k += bracket;
    prefix += d;
  }
  return finish(std::move(k), code, profile.edges, KemenyMethod::DegreeForm);
}

KemenyResult kemeny_spectral_form(const ConstructionCode& code) {
  require_connected(code);
  const std::size_t n = code.size();
  const auto profile = degree_profile(code);
  const auto spectrum = laplacian_spectrum(code);
  const auto basis = hessenberg_basis(n);
  const auto u = basis.dense();
  double total = 0.0;
  for (std::size_t col = 0; col + 1 < n; ++col) {
    double pairs = 0.0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        const double diff = u[a * n + col] - u[b * n + col];
        pairs += static_cast<double>(profile.degrees[a] * profile.degrees[b]) * diff * diff;
      }
    total += pairs / static_cast<double>(spectrum.eigenvalues[col]);
  }
  KemenyResult r;
  r.value = total / (2.0 * static_cast<double>(profile.edges));
  r.n = n;
  r.m = profile.edges;
  r.method = KemenyMethod::SpectralForm;
  return r;
}

UpperBounds upper_bounds(const ConstructionCode& code) {
  if (code.size() < 3) throw Error(ErrorKind::OrderTooSmall, "upper bounds need n >= 3");
  return upper_bounds(code, *kemeny_from_code(code).exact);
}

UpperBounds upper_bounds(const ConstructionCode& code, const Rational& kemeny) {
  const std::size_t n = code.size();
  if (n < 3) throw Error(ErrorKind::OrderTooSmall, "upper bounds need n >= 3");
  require_connected(code);
  const std::int64_t m = edge_count(code);
  UpperBounds b;
  b.linear = Rational(2 * static_cast<long>(n) - 3);
  b.linear_holds = kemeny < b.linear;
  b.sparse = static_cast<double>(n) - 1.0 + 1.5 * std::sqrt(static_cast<double>(m));
  const double margin = b.sparse - kemeny.get_d();
  if (std::abs(margin) >= 1e-6) {
    b.sparse_holds = margin > 0;
  } else {
    // K < n - 1 + (3/2) sqrt(m)  <=>  x < 0 or x^2 < (9/4) m, with x = K - (n - 1)
    const Rational x = kemeny - Rational(static_cast<long>(n) - 1);
    b.sparse_holds = sgn(x) < 0 || x * x < ratio(9 * m, 4);
  }
  b.both_hold = b.linear_holds && b.sparse_holds;
  return b;
}

Rational pineapple_kemeny(std::size_t n, std::size_t r) {
  if (n < 3 || r > n - 2)
    throw Error(ErrorKind::ParameterOutOfRange, "pineapple needs n >= 3 and 0 <= r <= n-2");
  const auto nn = static_cast<long>(n);
  const auto rr = static_cast<long>(r);
  Rational k(nn - 4);
  k += ratio(2, rr + 2);
  k += ratio(BigInt(nn - 1) * (2 * rr + 3), 2 * nn + rr * rr + rr - 2);
  return k;
}

PineappleArgmax pineapple_argmax(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::OrderTooSmall, "pineapple sweep needs n >= 3");
  PineappleArgmax out;
  for (std::size_t r = 0; r + 2 <= n; ++r) {
    Rational k = pineapple_kemeny(n, r);
    if (out.tied_rs.empty() || k > out.k_star) {
      out.k_star = k;
      out.tied_rs = {r};
    } else if (k == out.k_star) {
      out.tied_rs.push_back(r);
    }
  }
  out.r_star = out.tied_rs.front();

  BigInt root;
  mpz_sqrt(root.get_mpz_t(), BigInt(2 * static_cast<unsigned long>(n)).get_mpz_t());
  const std::size_t s = root.get_ui();
  if (n <= 20)
    out.predicted = {s - 1, s};
  else
    out.predicted = {s, s + 1};
  return out;
}

}  // namespace tkem
