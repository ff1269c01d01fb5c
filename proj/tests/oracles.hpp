// Independent reference computations used only by the test suites. None of
// these share code paths with the library routines they check.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "distspec/graph.hpp"

namespace oracle {

using distspec::Edge;
using distspec::Graph;
using distspec::IntMatrix;

// All-pairs distances by Floyd-Warshall; -1 marks unreachable pairs.
inline IntMatrix floyd_warshall(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  constexpr std::int64_t inf = 1 << 28;
  IntMatrix d(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d(i, j) = i == j ? 0 : inf;
  for (auto [u, v] : g.edges()) {
    d(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) = 1;
    d(static_cast<std::size_t>(v), static_cast<std::size_t>(u)) = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d(i, j) = std::min(d(i, j), d(i, k) + d(k, j));
  for (auto& x : d.data)
    if (x >= inf) x = -1;
  return d;
}

inline std::int64_t wiener(const Graph& g) {
  auto d = floyd_warshall(g);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < d.n; ++i)
    for (std::size_t j = i + 1; j < d.n; ++j) total += d(i, j);
  return total;
}

// Fraction-free Bareiss determinant.
inline mpz_class bareiss_det(std::vector<std::vector<mpz_class>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  mpz_class sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// det(xI - M) by evaluating det(tI - M) at t = 0..n with Bareiss and
// Lagrange interpolation over Q. Leading coefficient first.
inline std::vector<mpz_class> charpoly_by_interpolation(const IntMatrix& m) {
  const std::size_t n = m.n;
  std::vector<mpq_class> ys;
  for (std::size_t t = 0; t <= n; ++t) {
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        a[i][j] = (i == j ? mpz_class(static_cast<long>(t)) : mpz_class(0)) - mpz_class(static_cast<long>(m(i, j)));
    ys.emplace_back(bareiss_det(a));
  }
  // Accumulate sum_t y_t * prod_{s != t} (x - s) / (t - s), low power first.
  std::vector<mpq_class> coeffs(n + 1, 0);
  for (std::size_t t = 0; t <= n; ++t) {
    std::vector<mpq_class> basis{1};
    mpq_class denom = 1;
    for (std::size_t s = 0; s <= n; ++s) {
      if (s == t) continue;
      std::vector<mpq_class> next(basis.size() + 1, 0);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        next[i + 1] += basis[i];
        next[i] -= basis[i] * static_cast<long>(s);
      }
      basis = std::move(next);
      denom *= static_cast<long>(t) - static_cast<long>(s);
    }
    for (std::size_t i = 0; i < basis.size(); ++i) coeffs[i] += ys[t] * basis[i] / denom;
  }
  std::vector<mpz_class> out;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    coeffs[i].canonicalize();
    out.push_back(coeffs[i].get_num());
  }
  return out;
}

// Kirchhoff: any cofactor of the Laplacian.
inline mpz_class spanning_trees(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<std::vector<mpz_class>> a(n - 1, std::vector<mpz_class>(n - 1, 0));
  for (std::size_t i = 1; i < n; ++i) {
    a[i - 1][i - 1] = g.degree(static_cast<int>(i));
    for (int w : g.neighbors(static_cast<int>(i)))
      if (w > 0) a[i - 1][static_cast<std::size_t>(w) - 1] = -1;
  }
  return bareiss_det(a);
}

// Spanning forests of K_b with two components that separate vertices 0 and 1,
// counted by brute force over edge subsets.
inline long separating_two_forests(int b) {
  std::vector<Edge> edges;
  for (int j = 1; j < b; ++j)
    for (int i = 0; i < j; ++i) edges.emplace_back(i, j);
  long count = 0;
  for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
    if (std::popcount(mask) != b - 2) continue;
    std::vector<int> parent(static_cast<std::size_t>(b));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
      return x;
    };
    bool acyclic = true;
    for (std::size_t e = 0; e < edges.size() && acyclic; ++e) {
      if (!(mask & (1u << e))) continue;
      int a = find(edges[e].first), c = find(edges[e].second);
      if (a == c) acyclic = false;
      parent[static_cast<std::size_t>(a)] = c;
    }
    if (acyclic && find(0) != find(1)) ++count;
  }
  return count;
}

// Counts isomorphism classes of connected graphs on n vertices by walking all
// 2^(n(n-1)/2) edge subsets and marking the full orbit of each new connected
// representative under the n! relabelings.
inline std::size_t connected_classes_by_orbit_marking(int n) {
  const int pairs = n * (n - 1) / 2;
  std::vector<std::vector<int>> pair_index(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<std::pair<int, int>> pair_list;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      pair_index[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<int>(pair_list.size());
      pair_index[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = static_cast<int>(pair_list.size());
      pair_list.emplace_back(i, j);
    }
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    std::vector<int> image(static_cast<std::size_t>(pairs));
    for (int e = 0; e < pairs; ++e) {
      auto [i, j] = pair_list[static_cast<std::size_t>(e)];
      image[static_cast<std::size_t>(e)] = pair_index[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])]
                                                     [static_cast<std::size_t>(p[static_cast<std::size_t>(j)])];
    }
    perms.push_back(std::move(image));
  } while (std::next_permutation(p.begin(), p.end()));

  auto connected = [&](std::uint32_t mask) {
    std::uint32_t reached = 1, frontier = 1;
    while (frontier) {
      std::uint32_t next = 0;
      for (int e = 0; e < pairs; ++e) {
        if (!(mask & (1u << e))) continue;
        auto [i, j] = pair_list[static_cast<std::size_t>(e)];
        if (frontier & (1u << i)) next |= 1u << j;
        if (frontier & (1u << j)) next |= 1u << i;
      }
      frontier = next & ~reached;
      reached |= next;
    }
    return reached == (1u << n) - 1;
  };

  std::vector<bool> visited(std::size_t{1} << pairs, false);
  std::size_t classes = 0;
  for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
    if (visited[mask] || !connected(mask)) continue;
    ++classes;
    for (const auto& image : perms) {
      std::uint32_t mapped = 0;
      for (int e = 0; e < pairs; ++e)
        if (mask & (1u << e)) mapped |= 1u << image[static_cast<std::size_t>(e)];
      visited[mapped] = true;
    }
  }
  return classes;
}

// Random connected graph: a random spanning tree plus each remaining pair
// with probability p.
inline Graph random_connected(int n, double p, std::mt19937_64& rng) {
  std::vector<Edge> es;
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    es.emplace_back(order[static_cast<std::size_t>(pick(rng))], order[static_cast<std::size_t>(i)]);
  }
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) es.emplace_back(i, j);
  return Graph(n, es);
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::vector<Edge> es;
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) es.emplace_back(i, j);
  return Graph(n, es);
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace oracle
