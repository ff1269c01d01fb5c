#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace distspec {

/// Raised when a module precondition on its input fails (disconnected graph,
/// parameter out of range, wrong graph class). The message is user-facing.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the text parsers. `offset` is the byte offset (graph6) or the
/// 1-based line number (edge lists) where the problem was detected.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected loopless graph on vertices 0..n-1.
///
/// Neighbor lists are kept sorted and duplicate free; the object is immutable
/// after construction, so it can be shared between worker threads.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Builds a graph from an edge list. Duplicate edges (in either orientation)
  /// are collapsed; loops and out-of-range endpoints throw DomainError.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Image of the graph under `perm`: vertex v becomes perm[v].
  Graph relabeled(std::span<const int> perm) const;

  /// Subgraph induced on `vertices`, reindexed by their position in the span.
  Graph induced(std::span<const Vertex> vertices) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edges_ = 0;
};

/// Row-major square matrix of 64-bit integers.
struct IntMatrix {
  std::size_t n = 0;
  std::vector<std::int64_t> data;

  IntMatrix() = default;
  explicit IntMatrix(std::size_t size) : n(size), data(size * size, 0) {}

  std::int64_t& operator()(std::size_t i, std::size_t j) { return data[i * n + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data[i * n + j]; }
  std::span<const std::int64_t> row(std::size_t i) const { return {data.data() + i * n, n}; }
  bool symmetric() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

/// Pairwise shortest-path lengths of a connected graph.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  /// Wraps an already computed matrix. Used by the closed-form builders; no
  /// validation beyond squareness.
  explicit DistanceMatrix(IntMatrix m) : m_(std::move(m)) {}

  std::size_t size() const noexcept { return m_.n; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  std::span<const std::int64_t> row(std::size_t i) const { return m_.row(i); }
  const IntMatrix& matrix() const noexcept { return m_; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  IntMatrix m_;
};

enum class Family { complete, path, cycle };

Family parse_family(const std::string& name);

/// Named generator with canonical edge order.
Graph generate(Family family, int n);

bool is_connected(const Graph& g);

/// BFS distances from `source`; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// All-pairs distances by n BFS passes. Throws DomainError("graph not
/// connected") if some vertex is unreachable.
DistanceMatrix distance_matrix(const Graph& g);

std::int64_t diameter(const DistanceMatrix& d);

/// Half the sum of all entries.
std::int64_t wiener_index(const DistanceMatrix& d);

/// Degree matrix minus adjacency matrix.
IntMatrix laplacian_matrix(const Graph& g);
IntMatrix adjacency_matrix(const Graph& g);

bool is_complete(const Graph& g);
bool is_cycle(const Graph& g);
bool is_path(const Graph& g);

/// Standard graph6 encoding. Lengths up to 258 are accepted on input; output
/// always uses the shortest length form.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

/// "n <count>" header followed by one "u v" pair per line.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

// Biconnected structure computed by a single iterative lowpoint DFS.
struct BiconnectedComponents {
  std::vector<std::vector<Vertex>> blocks;  // vertex sets, each sorted
  std::vector<Vertex> cut_vertices;         // sorted
};

BiconnectedComponents biconnected_components(const Graph& g);
std::vector<Vertex> articulation_points(const Graph& g);

}  // namespace distspec
