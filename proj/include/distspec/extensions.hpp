#pragma once

#include <cstdint>
#include <string>

#include "distspec/graph.hpp"

namespace distspec {

/// q-coclique extension: each vertex becomes q pairwise non-adjacent copies.
/// q-clique extension: the copies of a vertex form a clique.
/// Copies of adjacent vertices are always completely joined.
enum class ExtensionKind { coclique, clique };

/// Distance between two distinct copies of the same vertex.
constexpr int shift(ExtensionKind kind) { return kind == ExtensionKind::coclique ? 2 : 1; }

ExtensionKind parse_extension_kind(const std::string& name);
const char* to_string(ExtensionKind kind);

/// Vertex (x, i), 0 <= i < q, of the extension has index x * q + i.
inline int fiber_index(int x, int copy, int q) { return x * q + copy; }

Graph extend(const Graph& g, int q, ExtensionKind kind);

/// J_q (x) D + (J - I)_q (x) shift*I assembled in fiber-major order.
DistanceMatrix extension_distance_matrix(const DistanceMatrix& d, int q, ExtensionKind kind);

/// Wiener index of the extension from W(G) and |V(G)|:
/// q^2 W + n q (q - 1) for cocliques, q^2 W + n q (q - 1) / 2 for cliques.
std::int64_t extension_wiener(std::int64_t wiener, std::int64_t n, std::int64_t q, ExtensionKind kind);

/// Diameter of the extension of a connected graph with at least two vertices.
std::int64_t extension_diameter(std::int64_t diam, int q, ExtensionKind kind);

}  // namespace distspec
