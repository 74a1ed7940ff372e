#pragma once

// Slow exact reference computations used only by the tests. They work on
// the adjacency structure with textbook linear algebra over the rationals
// and share no code with the library's closed forms.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "tkem/code.hpp"
#include "tkem/rational.hpp"

namespace ref {

using tkem::AdjacencyStructure;
using tkem::BigInt;
using tkem::Rational;

using Matrix = std::vector<std::vector<Rational>>;

inline Matrix zeros(std::size_t r, std::size_t c) { return Matrix(r, std::vector<Rational>(c, Rational(0))); }

/// Gauss-Jordan inverse over Q.
inline Matrix inverse(Matrix a) {
  const std::size_t n = a.size();
  Matrix inv = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::runtime_error("singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Rational p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

/// Solves a x = b over Q.
inline std::vector<Rational> solve(const Matrix& a, const std::vector<Rational>& b) {
  const auto inv = inverse(a);
  std::vector<Rational> x(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) x[i] += inv[i][j] * b[j];
  return x;
}

inline Matrix laplacian(const AdjacencyStructure& g) {
  Matrix l = zeros(g.n, g.n);
  for (auto [u, v] : g.edges) {
    l[u][v] -= 1;
    l[v][u] -= 1;
    l[u][u] += 1;
    l[v][v] += 1;
  }
  return l;
}

/// L^+ = (L + J/n)^-1 - J/n.
inline Matrix pseudo_inverse(const AdjacencyStructure& g) {
  auto l = laplacian(g);
  const Rational j = Rational(1) / static_cast<long>(g.n);
  for (auto& row : l)
    for (auto& x : row) x += j;
  auto inv = inverse(l);
  for (auto& row : inv)
    for (auto& x : row) x -= j;
  return inv;
}

inline Matrix resistance(const AdjacencyStructure& g) {
  const auto p = pseudo_inverse(g);
  Matrix r = zeros(g.n, g.n);
  for (std::size_t a = 0; a < g.n; ++a)
    for (std::size_t b = 0; b < g.n; ++b) r[a][b] = p[a][a] + p[b][b] - 2 * p[a][b];
  return r;
}

/// Mean first passage times by first-step analysis: for each target j,
/// m_ij = 1 + sum_{k != j} t_ik m_kj.
inline Matrix mfpt(const AdjacencyStructure& g) {
  const std::size_t n = g.n;
  Matrix m = zeros(n, n);
  for (std::size_t target = 0; target < n; ++target) {
    std::vector<std::size_t> idx;
    for (std::size_t v = 0; v < n; ++v)
      if (v != target) idx.push_back(v);
    Matrix a = zeros(n - 1, n - 1);
    std::vector<Rational> b(n - 1, Rational(1));
    for (std::size_t r = 0; r < idx.size(); ++r) {
      a[r][r] += 1;
      const Rational t = Rational(1) / static_cast<long>(g.degree(idx[r]));
      for (auto k : g.neighbours[idx[r]]) {
        if (k == target) continue;
        const auto c = static_cast<std::size_t>(std::find(idx.begin(), idx.end(), k) - idx.begin());
        a[r][c] -= t;
      }
    }
    const auto x = solve(a, b);
    for (std::size_t r = 0; r < idx.size(); ++r) m[idx[r]][target] = x[r];
  }
  return m;
}

inline std::vector<Rational> stationary(const AdjacencyStructure& g) {
  std::vector<Rational> w(g.n);
  for (std::size_t v = 0; v < g.n; ++v)
    w[v] = Rational(static_cast<long>(g.degree(v))) / static_cast<long>(2 * g.edges.size());
  return w;
}

/// sum_j w_j m_{0,j}.
inline Rational kemeny(const AdjacencyStructure& g) {
  const auto m = mfpt(g);
  const auto w = stationary(g);
  Rational k(0);
  for (std::size_t j = 1; j < g.n; ++j) k += w[j] * m[0][j];
  return k;
}

/// alpha(j) = sum_i w_i m_{i,j}.
inline std::vector<Rational> accessibility(const AdjacencyStructure& g) {
  const auto m = mfpt(g);
  const auto w = stationary(g);
  std::vector<Rational> a(g.n, Rational(0));
  for (std::size_t j = 0; j < g.n; ++j)
    for (std::size_t i = 0; i < g.n; ++i) a[j] += w[i] * m[i][j];
  return a;
}

/// Shortest-path distances by BFS.
inline std::vector<std::vector<long>> distances(const AdjacencyStructure& g) {
  std::vector<std::vector<long>> d(g.n, std::vector<long>(g.n, -1));
  for (std::size_t s = 0; s < g.n; ++s) {
    std::vector<std::size_t> queue{s};
    d[s][s] = 0;
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (auto v : g.neighbours[queue[q]])
        if (d[s][v] < 0) {
          d[s][v] = d[s][queue[q]] + 1;
          queue.push_back(v);
        }
  }
  return d;
}

}  // namespace ref
