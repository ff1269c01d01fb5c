#include "distspec/extensions.hpp"

#include <algorithm>

namespace distspec {

ExtensionKind parse_extension_kind(const std::string& name) {
  if (name == "coclique") return ExtensionKind::coclique;
  if (name == "clique") return ExtensionKind::clique;
  throw DomainError("unknown extension kind: " + name);
}

const char* to_string(ExtensionKind kind) { return kind == ExtensionKind::coclique ? "coclique" : "clique"; }

Graph extend(const Graph& g, int q, ExtensionKind kind) {
  if (q < 1) throw DomainError("extension factor q must be >= 1");
  if (g.order() < 1) throw DomainError("extension needs at least one vertex");
  std::vector<Edge> es;
  for (auto [x, y] : g.edges())
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < q; ++j) es.emplace_back(fiber_index(x, i, q), fiber_index(y, j, q));
  if (kind == ExtensionKind::clique)
    for (int x = 0; x < g.order(); ++x)
      for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j) es.emplace_back(fiber_index(x, i, q), fiber_index(x, j, q));
  return Graph(g.order() * q, es);
}

DistanceMatrix extension_distance_matrix(const DistanceMatrix& d, int q, ExtensionKind kind) {
  if (q < 1) throw DomainError("extension factor q must be >= 1");
  const std::size_t n = d.size();
  if (n == 1 && q >= 2 && kind == ExtensionKind::coclique)
    throw DomainError("coclique extension of a single vertex is not connected");
  const auto qs = static_cast<std::size_t>(q);
  IntMatrix out(n * qs);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t i = 0; i < qs; ++i)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t j = 0; j < qs; ++j) {
          std::int64_t value = d(x, y);
          if (x == y && i != j) value += shift(kind);
          out(x * qs + i, y * qs + j) = value;
        }
  return DistanceMatrix(std::move(out));
}

std::int64_t extension_wiener(std::int64_t wiener, std::int64_t n, std::int64_t q, ExtensionKind kind) {
  if (q < 1) throw DomainError("extension factor q must be >= 1");
  const std::int64_t same_fiber_pairs = n * q * (q - 1) / 2;
  return q * q * wiener + shift(kind) * same_fiber_pairs;
}

std::int64_t extension_diameter(std::int64_t diam, int q, ExtensionKind kind) {
  if (q < 1) throw DomainError("extension factor q must be >= 1");
  return kind == ExtensionKind::coclique && q > 1 ? std::max<std::int64_t>(diam, 2) : diam;
}

}  // namespace distspec
