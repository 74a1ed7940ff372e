#include "tkem/oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>

#include "tkem/errors.hpp"

namespace tkem {

namespace {

void require_walk(const AdjacencyStructure& g) {
  if (g.n < 2) throw Error(ErrorKind::OrderTooSmall, "random walk needs n >= 2");
  if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "graph is not connected");
}

Eigen::MatrixXd adjacency(const AdjacencyStructure& g) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(g.n), static_cast<Eigen::Index>(g.n));
  for (auto [u, v] : g.edges) a(u, v) = a(v, u) = 1.0;
  return a;
}

Eigen::MatrixXd laplacian(const AdjacencyStructure& g) {
  Eigen::MatrixXd l = -adjacency(g);
  for (std::size_t v = 0; v < g.n; ++v) l(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(v)) = g.degree(v);
  return l;
}

// Eigenvalues of D^-1 A through the similar matrix D^-1/2 A D^-1/2.
std::vector<double> transition_eigenvalues(const AdjacencyStructure& g) {
  Eigen::MatrixXd s = adjacency(g);
  Eigen::VectorXd inv_sqrt(static_cast<Eigen::Index>(g.n));
  for (std::size_t v = 0; v < g.n; ++v) inv_sqrt(static_cast<Eigen::Index>(v)) = 1.0 / std::sqrt(g.degree(v));
  s = inv_sqrt.asDiagonal() * s * inv_sqrt.asDiagonal();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error(ErrorKind::EigensolveFailure, "symmetric eigensolve failed");
  std::vector<double> rho(solver.eigenvalues().data(), solver.eigenvalues().data() + g.n);
  std::sort(rho.begin(), rho.end(), std::greater<>());
  return rho;
}

double kemeny_from_rho(const std::vector<double>& rho) {
  std::size_t unit = 0;
  for (std::size_t j = 1; j < rho.size(); ++j)
    if (std::abs(rho[j] - 1.0) < std::abs(rho[unit] - 1.0)) unit = j;
  double k = 0.0;
  for (std::size_t j = 0; j < rho.size(); ++j)
    if (j != unit) k += 1.0 / (1.0 - rho[j]);
  return k;
}

}  // namespace

double kemeny_eigen_oracle(const AdjacencyStructure& graph) {
  require_walk(graph);
  return kemeny_from_rho(transition_eigenvalues(graph));
}

WalkStatistics mfpt_matrix(const AdjacencyStructure& graph) {
  require_walk(graph);
  const std::size_t n = graph.n;
  const auto N = static_cast<Eigen::Index>(n);
  const double two_m = 2.0 * static_cast<double>(graph.edges.size());

  Eigen::MatrixXd t = adjacency(graph);
  Eigen::VectorXd w(N);
  for (Eigen::Index v = 0; v < N; ++v) {
    const double d = static_cast<double>(graph.degree(static_cast<std::size_t>(v)));
    t.row(v) /= d;
    w(v) = d / two_m;
  }

  const Eigen::MatrixXd system = Eigen::MatrixXd::Identity(N, N) - t + Eigen::VectorXd::Ones(N) * w.transpose();
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(system);
  const Eigen::MatrixXd z = lu.solve(Eigen::MatrixXd::Identity(N, N));
  const double residual = (system * z - Eigen::MatrixXd::Identity(N, N)).cwiseAbs().rowwise().sum().maxCoeff();
  if (!std::isfinite(residual) || residual >= 1e-9)
    throw Error(ErrorKind::SingularSolve, "fundamental matrix residual " + std::to_string(residual));

  WalkStatistics s;
  s.n = n;
  s.transition.resize(n * n);
  s.mfpt.assign(n * n, 0.0);
  s.stationary.resize(n);
  s.kappa.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto I = static_cast<Eigen::Index>(i);
    s.stationary[i] = w(I);
    for (std::size_t j = 0; j < n; ++j) {
      const auto J = static_cast<Eigen::Index>(j);
      s.transition[i * n + j] = t(I, J);
      if (i != j) s.mfpt[i * n + j] = (z(J, J) - z(I, J)) / w(J);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) s.kappa[i] += s.stationary[j] * s.mfpt[i * n + j];
  s.rho = transition_eigenvalues(graph);
  s.kemeny = kemeny_from_rho(s.rho);
  return s;
}

std::vector<double> accessibility_oracle(const AdjacencyStructure& graph) {
  const auto s = mfpt_matrix(graph);
  std::vector<double> alpha(s.n, 0.0);
  for (std::size_t j = 0; j < s.n; ++j)
    for (std::size_t i = 0; i < s.n; ++i)
      if (i != j) alpha[j] += s.stationary[i] * s.m(i, j);
  return alpha;
}

std::vector<double> resistance_oracle(const AdjacencyStructure& graph) {
  require_walk(graph);
  const std::size_t n = graph.n;
  const auto N = static_cast<Eigen::Index>(n);
  const Eigen::MatrixXd j_over_n = Eigen::MatrixXd::Constant(N, N, 1.0 / static_cast<double>(n));
  const Eigen::LLT<Eigen::MatrixXd> llt(laplacian(graph) + j_over_n);
  if (llt.info() != Eigen::Success) throw Error(ErrorKind::SingularSolve, "L + J/n is not positive definite");
  const Eigen::MatrixXd pinv = llt.solve(Eigen::MatrixXd::Identity(N, N)) - j_over_n;
  std::vector<double> r(n * n, 0.0);
  for (Eigen::Index a = 0; a < N; ++a)
    for (Eigen::Index b = 0; b < N; ++b)
      if (a != b) r[static_cast<std::size_t>(a * N + b)] = pinv(a, a) + pinv(b, b) - 2.0 * pinv(a, b);
  return r;
}

std::vector<double> laplacian_eigenvalues_oracle(const AdjacencyStructure& graph) {
  if (graph.n == 0) throw Error(ErrorKind::EmptyInput, "empty graph");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(laplacian(graph), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error(ErrorKind::EigensolveFailure, "symmetric eigensolve failed");
  std::vector<double> ev(solver.eigenvalues().data(), solver.eigenvalues().data() + graph.n);
  std::sort(ev.begin(), ev.end());
  return ev;
}

BigInt spanning_tree_oracle(const AdjacencyStructure& graph) {
  require_walk(graph);
  const std::size_t k = graph.n - 1;
  std::vector<std::vector<BigInt>> a(k, std::vector<BigInt>(k, 0));
  for (auto [u, v] : graph.edges) {
    if (u < k) a[u][u] += 1;
    if (v < k) a[v][v] += 1;
    if (u < k && v < k) {
      a[u][v] -= 1;
      a[v][u] -= 1;
    }
  }
  // Bareiss: every intermediate division is exact.
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t p = 0; p < k; ++p) {
    if (a[p][p] == 0) {
      std::size_t r = p + 1;
      while (r < k && a[r][p] == 0) ++r;
      if (r == k) return 0;
      std::swap(a[p], a[r]);
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < k; ++i) {
      for (std::size_t j = p + 1; j < k; ++j) {
        a[i][j] = a[i][j] * a[p][p] - a[i][p] * a[p][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][p] = 0;
    }
    prev = a[p][p];
  }
  return sign * a[k - 1][k - 1];
}

TwoForestCensus::TwoForestCensus(const AdjacencyStructure& graph) : n_(graph.n) {
  if (n_ > max_order) throw Error(ErrorKind::TooLarge, "forest enumeration is capped at n = 9");
  if (n_ < 2) throw Error(ErrorKind::OrderTooSmall, "2-forests need n >= 2");
  forests_.assign(std::size_t{1} << n_, 0);

  // union-find without path compression so that unions can be undone
  std::vector<std::size_t> parent(n_), rank(n_, 0);
  for (std::size_t v = 0; v < n_; ++v) parent[v] = v;
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v];
    return v;
  };

  const auto& edges = graph.edges;
  const std::size_t want = n_ - 2;
  std::function<void(std::size_t, std::size_t)> grow = [&](std::size_t start, std::size_t taken) {
    if (taken == want) {
      const std::size_t root0 = find(0);
      std::size_t side = 0;
      for (std::size_t v = 1; v < n_; ++v)
        if (find(v) != root0) side |= std::size_t{1} << v;
      ++forests_[side];
      return;
    }
    for (std::size_t e = start; e + (want - taken) <= edges.size(); ++e) {
      std::size_t a = find(edges[e].first), b = find(edges[e].second);
      if (a == b) continue;
      if (rank[a] < rank[b]) std::swap(a, b);
      parent[b] = a;
      const bool bumped = rank[a] == rank[b];
      if (bumped) ++rank[a];
      grow(e + 1, taken + 1);
      parent[b] = b;
      if (bumped) --rank[a];
    }
  };
  grow(0, 0);
}

std::uint64_t TwoForestCensus::total() const noexcept {
  std::uint64_t t = 0;
  for (auto c : forests_) t += c;
  return t;
}

std::uint64_t TwoForestCensus::separating(std::size_t x, std::size_t y) const {
  if (x >= n_ || y >= n_) throw Error(ErrorKind::IndexOutOfRange, "vertex index out of range");
  if (x == y) throw Error(ErrorKind::SameVertex, "2-forest count needs distinct vertices");
  std::uint64_t t = 0;
  for (std::size_t s = 0; s < forests_.size(); ++s)
    if (((s >> x) & 1) != ((s >> y) & 1)) t += forests_[s];
  return t;
}

std::uint64_t TwoForestCensus::refined(std::size_t z, std::size_t x, std::size_t y) const {
  if (z >= n_ || x >= n_ || y >= n_) throw Error(ErrorKind::IndexOutOfRange, "vertex index out of range");
  if (x == y || z == y) throw Error(ErrorKind::SameVertex, "y must differ from x and z");
  std::uint64_t t = 0;
  for (std::size_t s = 0; s < forests_.size(); ++s) {
    const auto bx = (s >> x) & 1;
    if (((s >> z) & 1) == bx && ((s >> y) & 1) != bx) t += forests_[s];
  }
  return t;
}

std::uint64_t two_forest_enumeration(const AdjacencyStructure& graph, std::size_t i, std::size_t j) {
  if (graph.n > TwoForestCensus::max_order) throw Error(ErrorKind::TooLarge, "forest enumeration is capped at n = 9");
  if (i == j) throw Error(ErrorKind::SameVertex, "2-forest count needs distinct vertices");
  return TwoForestCensus(graph).separating(i, j);
}

}  // namespace tkem
