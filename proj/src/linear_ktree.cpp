#include "distspec/linear_ktree.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <set>

namespace distspec {

namespace {

void check_range(std::int64_t n, std::int64_t k) {
  if (k < 1 || k >= n) throw DomainError("linear k-tree parameters need 1 <= k < n");
}

// Deletes vertices one at a time while tracking current degrees. The removal
// order, reversed, is the recursive labeling.
class Peeler {
 public:
  Peeler(const Graph& g, int k)
      : g_(g), k_(k), alive_(static_cast<std::size_t>(g.order()), true), degree_(static_cast<std::size_t>(g.order())) {
    for (Vertex v = 0; v < g.order(); ++v) {
      degree_[static_cast<std::size_t>(v)] = g.degree(v);
      if (g.degree(v) == k) degree_k_.insert(v);
    }
  }

  int remaining() const { return g_.order() - static_cast<int>(order_.size()); }

  std::vector<Vertex> live_neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (Vertex w : g_.neighbors(v))
      if (alive_[static_cast<std::size_t>(w)]) out.push_back(w);
    return out;
  }

  bool peelable(Vertex v) const {
    if (!alive_[static_cast<std::size_t>(v)] || degree_[static_cast<std::size_t>(v)] != k_) return false;
    auto nb = live_neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (!g_.adjacent(nb[i], nb[j])) return false;
    return true;
  }

  // Lowest-indexed peelable vertex over the whole current graph.
  std::optional<Vertex> any_peelable() const {
    for (Vertex v : degree_k_)
      if (peelable(v)) return v;
    return std::nullopt;
  }

  std::vector<Vertex> remove(Vertex v) {
    auto nb = live_neighbors(v);
    alive_[static_cast<std::size_t>(v)] = false;
    degree_k_.erase(v);
    for (Vertex w : nb) {
      int& d = degree_[static_cast<std::size_t>(w)];
      if (d == k_) degree_k_.erase(w);
      if (--d == k_) degree_k_.insert(w);
    }
    order_.push_back(v);
    removed_neighbors_.push_back(nb);
    return nb;
  }

  LinearKTreeCert certificate() const {
    const auto n = static_cast<std::size_t>(g_.order());
    LinearKTreeCert cert;
    cert.k = k_;
    for (Vertex v = 0; v < g_.order(); ++v)
      if (alive_[static_cast<std::size_t>(v)]) cert.labeling.push_back(v);
    for (std::size_t i = order_.size(); i-- > 0;) cert.labeling.push_back(order_[i]);
    std::vector<int> position(n);
    for (std::size_t p = 0; p < n; ++p) position[static_cast<std::size_t>(cert.labeling[p])] = static_cast<int>(p);
    cert.back_neighbors.assign(n, {});
    for (std::size_t i = 0; i < order_.size(); ++i) {
      auto& back = cert.back_neighbors[static_cast<std::size_t>(position[static_cast<std::size_t>(order_[i])])];
      for (Vertex w : removed_neighbors_[i]) back.push_back(position[static_cast<std::size_t>(w)]);
      std::sort(back.begin(), back.end());
    }
    return cert;
  }

 private:
  const Graph& g_;
  int k_;
  std::vector<bool> alive_;
  std::vector<int> degree_;
  std::set<Vertex> degree_k_;
  std::vector<Vertex> order_;
  std::vector<std::vector<Vertex>> removed_neighbors_;
};

// Candidates restricted to the back neighborhood of the previously removed
// vertex, as in the preprocessing loop of the Wiener algorithm. Only valid
// for genuine linear k-trees; the caller validates the result.
std::optional<LinearKTreeCert> peel_along_end(const Graph& g, int k) {
  Peeler peeler(g, k);
  std::vector<Vertex> candidates(static_cast<std::size_t>(g.order()));
  std::iota(candidates.begin(), candidates.end(), 0);
  while (peeler.remaining() > k + 1) {
    auto it = std::find_if(candidates.begin(), candidates.end(), [&](Vertex v) { return peeler.peelable(v); });
    if (it == candidates.end()) return std::nullopt;
    candidates = peeler.remove(*it);
  }
  return peeler.certificate();
}

LinearKTreeCert peel_whole_graph(const Graph& g, int k) {
  Peeler peeler(g, k);
  while (peeler.remaining() > k + 1) {
    auto v = peeler.any_peelable();
    if (!v)
      throw NotLinearKTree("no vertex of degree " + std::to_string(k) + " with a clique neighborhood remains (" +
                           std::to_string(peeler.remaining()) + " vertices left)");
    peeler.remove(*v);
  }
  return peeler.certificate();
}

// Position-indexed distances, row-major n x n. Row l needs d(l, j) for j < l,
// which earlier rows produced; rows are processed in blocks that first copy
// that strip over tile by tile, keeping every write near the current rows.
std::vector<int> fill_distances(const LinearKTreeCert& cert) {
  constexpr std::size_t kBlock = 64;
  const std::size_t n = cert.labeling.size();
  const auto k = static_cast<std::size_t>(cert.k);
  std::vector<int> d(n * n, 0);
  for (std::size_t first = 0; first < n; first += kBlock) {
    const std::size_t last = std::min(n, first + kBlock);
    for (std::size_t j = 0; j < first; ++j) {
      const int* src = d.data() + j * n;
      for (std::size_t l = first; l < last; ++l) d[l * n + j] = src[l];
    }
    for (std::size_t l = first; l < last; ++l) {
      int* row = d.data() + l * n;
      for (std::size_t i = l + 1; i <= k && i < n; ++i) row[i] = 1;
      for (std::size_t i = std::max(l, k) + 1; i < n; ++i) {
        int best = row[static_cast<std::size_t>(cert.back_neighbors[i].front())];
        for (int j : cert.back_neighbors[i]) best = std::min(best, row[static_cast<std::size_t>(j)]);
        row[i] = best + 1;
      }
      for (std::size_t m = l + 1; m < last; ++m) d[m * n + l] = row[m];
    }
  }
  return d;
}

}  // namespace

std::string validate_certificate(const Graph& g, const LinearKTreeCert& cert) {
  const int n = g.order();
  const int k = cert.k;
  if (k < 1 || k >= n) return "k out of range";
  if (static_cast<int>(cert.labeling.size()) != n || static_cast<int>(cert.back_neighbors.size()) != n)
    return "labeling has wrong length";
  std::vector<int> position(static_cast<std::size_t>(n), -1);
  for (int p = 0; p < n; ++p) {
    Vertex v = cert.labeling[static_cast<std::size_t>(p)];
    if (v < 0 || v >= n || position[static_cast<std::size_t>(v)] >= 0) return "labeling is not a permutation";
    position[static_cast<std::size_t>(v)] = p;
  }
  for (int p = 0; p <= k; ++p)
    for (int q = p + 1; q <= k; ++q)
      if (!g.adjacent(cert.labeling[static_cast<std::size_t>(p)], cert.labeling[static_cast<std::size_t>(q)]))
        return "first k+1 positions do not form a clique";
  for (int p = 0; p < n; ++p) {
    const auto& back = cert.back_neighbors[static_cast<std::size_t>(p)];
    Vertex v = cert.labeling[static_cast<std::size_t>(p)];
    if (p <= k) {
      if (!back.empty()) return "initial clique position has back neighbors";
      continue;
    }
    if (static_cast<int>(back.size()) != k) return "position " + std::to_string(p) + " does not have k back neighbors";
    int earlier = 0;
    for (Vertex w : g.neighbors(v))
      if (position[static_cast<std::size_t>(w)] < p) ++earlier;
    if (earlier != k) return "position " + std::to_string(p) + " has " + std::to_string(earlier) + " earlier neighbors";
    for (std::size_t i = 0; i < back.size(); ++i) {
      if (back[i] < 0 || back[i] >= p || (i > 0 && back[i] <= back[i - 1]))
        return "back neighbors of position " + std::to_string(p) + " malformed";
      Vertex a = cert.labeling[static_cast<std::size_t>(back[i])];
      if (!g.adjacent(v, a)) return "back neighbor not adjacent at position " + std::to_string(p);
      for (std::size_t j = i + 1; j < back.size(); ++j)
        if (!g.adjacent(a, cert.labeling[static_cast<std::size_t>(back[j])]))
          return "back neighborhood of position " + std::to_string(p) + " is not a clique";
    }
  }
  if (n > k + 1) {
    int degree_k = 0;
    for (Vertex v = 0; v < n; ++v) degree_k += g.degree(v) == k ? 1 : 0;
    if (degree_k != 2) return "expected exactly two vertices of degree k, found " + std::to_string(degree_k);
  }
  return {};
}

LinearKTreeCert recursive_labeling(const Graph& g, int k) {
  check_range(g.order(), k);
  if (!is_connected(g)) throw DomainError("graph not connected");
  const auto n = static_cast<std::int64_t>(g.order());
  const std::int64_t expected_edges = k * (k + 1) / 2 + (n - k - 1) * k;
  if (static_cast<std::int64_t>(g.edge_count()) != expected_edges)
    throw NotLinearKTree("edge count " + std::to_string(g.edge_count()) + " differs from " +
                         std::to_string(expected_edges));
  if (n > k + 1) {
    int degree_k = 0;
    for (Vertex v = 0; v < g.order(); ++v) degree_k += g.degree(v) == k ? 1 : 0;
    if (degree_k != 2)
      throw NotLinearKTree("expected exactly two vertices of degree k, found " + std::to_string(degree_k));
  }
  if (auto fast = peel_along_end(g, k); fast && validate_certificate(g, *fast).empty()) return *fast;
  auto cert = peel_whole_graph(g, k);
  if (auto why = validate_certificate(g, cert); !why.empty()) throw NotLinearKTree(why);
  return cert;
}

DistanceMatrix linear_ktree_distances(const LinearKTreeCert& cert) {
  const std::size_t n = cert.labeling.size();
  auto d = fill_distances(cert);
  IntMatrix out(n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      out(static_cast<std::size_t>(cert.labeling[p]), static_cast<std::size_t>(cert.labeling[q])) = d[p * n + q];
  return DistanceMatrix(std::move(out));
}

std::int64_t wiener_linear_ktree(const Graph& g, int k) {
  const std::int64_t n = g.order();
  if (is_complete(g)) {
    check_range(n, k);
    if (k != n - 1) throw NotLinearKTree("complete graph is a linear k-tree only for k = n - 1");
    return n * (n - 1) / 2;
  }
  auto cert = recursive_labeling(g, k);
  auto d = fill_distances(cert);
  std::int64_t total = 0;
  const auto un = static_cast<std::size_t>(n);
  for (std::size_t p = 0; p < un; ++p)
    for (std::size_t q = p + 1; q < un; ++q) total += d[p * un + q];
  return total;
}

KTreeWienerBounds ktree_wiener_bounds(std::int64_t n, std::int64_t k) {
  check_range(n, k);
  const std::int64_t j = (n - 1) / k;
  KTreeWienerBounds b;
  b.lower = (k * k + k) / 2 + n * n - k * n - n;
  const std::int64_t numerator = (j + 1) * (2 * j * j * k * k + j * k * (3 + k - 6 * n) + 6 * n * n - 6 * n);
  if (numerator % 12 != 0) throw std::logic_error("upper bound numerator not divisible by 12");
  b.upper = numerator / 12;
  return b;
}

ExtremalKTree parse_extremal_kind(const std::string& name) {
  if (name == "dominating") return ExtremalKTree::dominating;
  if (name == "pathlike") return ExtremalKTree::pathlike;
  throw DomainError("unknown extremal family: " + name);
}

Graph generate_extremal_ktree(int n, int k, ExtremalKTree which) {
  check_range(n, k);
  std::vector<Edge> es;
  if (which == ExtremalKTree::pathlike) {
    for (int i = 1; i < n; ++i)
      for (int j = std::max(0, i - k); j < i; ++j) es.emplace_back(j, i);
    return Graph(n, es);
  }
  if (k == 1 && n > 3) throw DomainError("no linear 1-tree on more than 3 vertices has a dominating vertex");
  for (int i = 0; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) es.emplace_back(i, j);
  for (int i = k + 1; i < n; ++i) {
    es.emplace_back(0, i);
    for (int t = 1; t < k; ++t) es.emplace_back(i - t, i);
  }
  return Graph(n, es);
}

Graph random_linear_ktree(int n, int k, std::uint64_t seed) {
  check_range(n, k);
  std::mt19937_64 rng(seed);
  std::vector<Edge> es;
  for (int i = 0; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) es.emplace_back(i, j);

  // The two growing ends, each a k-clique holding a degree-k vertex.
  std::vector<int> base(static_cast<std::size_t>(k + 1));
  std::iota(base.begin(), base.end(), 0);
  std::shuffle(base.begin(), base.end(), rng);
  std::vector<int> end_a(base.begin() + 1, base.end());
  std::vector<int> end_b(base.begin(), base.end() - 1);

  for (int v = k + 1; v < n; ++v) {
    auto& end = std::bernoulli_distribution(0.5)(rng) ? end_a : end_b;
    for (int w : end) es.emplace_back(w, v);
    std::uniform_int_distribution<std::size_t> drop(0, end.size() - 1);
    end[drop(rng)] = v;
  }

  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return Graph(n, es).relabeled(perm);
}

}  // namespace distspec
