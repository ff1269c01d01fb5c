#include <algorithm>
#include <numeric>
#include <set>

#include "distspec/search.hpp"

namespace distspec {

namespace {

struct CanonicalResult {
  std::uint64_t code = 0;
  std::vector<int> order;  // order[new] = old vertex
};

CanonicalResult canonicalize(const Graph& g) {
  const int n = g.order();
  if (n > kMaxCanonicalOrder) throw DomainError("canonical form supports at most 8 vertices");
  std::uint16_t adj[kMaxCanonicalOrder] = {};
  for (auto [u, v] : g.edges()) {
    adj[u] |= static_cast<std::uint16_t>(1u << v);
    adj[v] |= static_cast<std::uint16_t>(1u << u);
  }
  const int bits = n * (n - 1) / 2;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  CanonicalResult best{~std::uint64_t{0}, perm};
  bool first = true;
  do {
    // Build the code MSB first, abandoning the permutation as soon as its
    // prefix exceeds the best prefix.
    std::uint64_t code = 0;
    int pos = bits;
    bool smaller = first;
    bool abandoned = false;
    for (int j = 1; j < n && !abandoned; ++j) {
      const std::uint16_t row = adj[perm[static_cast<std::size_t>(j)]];
      for (int i = 0; i < j; ++i) {
        --pos;
        std::uint64_t bit = (row >> perm[static_cast<std::size_t>(i)]) & 1u;
        code |= bit << pos;
        if (!smaller) {
          std::uint64_t best_bit = (best.code >> pos) & 1u;
          if (bit > best_bit) {
            abandoned = true;
            break;
          }
          if (bit < best_bit) smaller = true;
        }
      }
    }
    if (!abandoned && smaller) {
      best.code = code;
      best.order = perm;
    }
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (bits == 0) best.code = 0;
  return best;
}

Graph relabel_to(const Graph& g, const std::vector<int>& order) {
  std::vector<int> relabel(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) relabel[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  return g.relabeled(relabel);
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) { return canonicalize(g).code; }

Graph canonical_form(const Graph& g) { return relabel_to(g, canonicalize(g).order); }

bool isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  return canonical_code(g) == canonical_code(h);
}

std::vector<Graph> enumerate_connected(int n) {
  if (n < 1 || n > 7) throw DomainError("enumeration supports 1 <= n <= 7; use an external graph6 stream");
  std::vector<std::pair<std::uint64_t, Graph>> level{{0, Graph(1)}};
  for (int m = 1; m < n; ++m) {
    std::set<std::uint64_t> seen;
    std::vector<std::pair<std::uint64_t, Graph>> next;
    for (const auto& [code, g] : level) {
      auto base = g.edges();
      for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        auto es = base;
        for (int v = 0; v < m; ++v)
          if (mask & (1u << v)) es.emplace_back(v, m);
        Graph candidate(m + 1, es);
        auto canon = canonicalize(candidate);
        if (seen.insert(canon.code).second) next.emplace_back(canon.code, relabel_to(candidate, canon.order));
      }
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  for (auto& [code, g] : level)
    if (is_connected(g)) out.push_back(std::move(g));
  return out;
}

}  // namespace distspec
