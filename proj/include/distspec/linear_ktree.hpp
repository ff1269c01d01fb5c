#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "distspec/graph.hpp"

namespace distspec {

/// Raised when a graph fails linear k-tree recognition. The message names the
/// failing condition.
class NotLinearKTree : public DomainError {
 public:
  explicit NotLinearKTree(const std::string& why) : DomainError("not a linear k-tree: " + why) {}
};

/// Recursive labeling of a linear k-tree.
///
/// `labeling[p]` is the vertex at position p (0-based). Positions 0..k form a
/// clique. Every later position p has exactly k neighbors at smaller
/// positions; `back_neighbors[p]` lists those positions ascending (empty for
/// p <= k).
struct LinearKTreeCert {
  int k = 0;
  std::vector<Vertex> labeling;
  std::vector<std::vector<int>> back_neighbors;
};

/// Peels degree-k simplicial vertices and validates the resulting
/// certificate. Throws NotLinearKTree on failure.
LinearKTreeCert recursive_labeling(const Graph& g, int k);

/// Checks every certificate invariant against g. Returns an empty string when
/// valid, otherwise a description of the first violation.
std::string validate_certificate(const Graph& g, const LinearKTreeCert& cert);

/// Distance matrix (original vertex indexing) filled by the min over the back
/// neighborhood recurrence in O(k n^2).
DistanceMatrix linear_ktree_distances(const LinearKTreeCert& cert);

/// Wiener index of a linear k-tree; n(n-1)/2 shortcut for complete graphs.
std::int64_t wiener_linear_ktree(const Graph& g, int k);

struct KTreeWienerBounds {
  std::int64_t lower = 0;
  std::int64_t upper = 0;
};

/// Tight bounds on W over linear k-trees with n vertices.
KTreeWienerBounds ktree_wiener_bounds(std::int64_t n, std::int64_t k);

enum class ExtremalKTree { dominating, pathlike };

ExtremalKTree parse_extremal_kind(const std::string& name);

/// pathlike: vertex i adjacent to i-1..i-k (maximum Wiener).
/// dominating: vertex 0 adjacent to everything, vertex i > k adjacent to 0 and
/// i-1..i-k+1 (minimum Wiener). No linear 1-tree on more than 3 vertices has a
/// dominating vertex, so that case throws.
Graph generate_extremal_ktree(int n, int k, ExtremalKTree which);

/// Random linear k-tree: each new vertex joins the current end k-clique, and
/// the vertex left out of the next end clique is chosen at random. Vertex
/// indices are shuffled afterwards. Deterministic per seed.
Graph random_linear_ktree(int n, int k, std::uint64_t seed);

}  // namespace distspec
