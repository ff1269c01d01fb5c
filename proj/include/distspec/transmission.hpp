#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "distspec/graph.hpp"

namespace distspec {

/// Row sums T(v) of the distance matrix, the Wiener index and, when every row
/// sum agrees, the common value k.
struct TransmissionProfile {
  std::vector<std::int64_t> per_vertex;
  std::int64_t wiener = 0;
  std::optional<std::int64_t> regular_k;
};

TransmissionProfile transmission_profile(const DistanceMatrix& d);

struct VertexBound {
  Vertex v = 0;
  std::int64_t transmission = 0;
  std::int64_t lower = 0;  // n - 1
  std::int64_t upper = 0;  // n (n - 1) / 2
  bool lower_equal = false;
  bool upper_equal = false;
  bool dominating = false;       // adjacent to every other vertex
  bool path_end_vertex = false;  // g is P_n and v is one of its ends
  bool within_bounds = false;
  // Equality holds exactly when the structural witness is present.
  bool witnesses_match = false;

  bool ok() const { return within_bounds && witnesses_match; }
};

struct VertexBoundsReport {
  std::vector<VertexBound> vertices;
  bool ok() const;
  std::vector<std::string> failures() const;
};

VertexBoundsReport check_vertex_bounds(const TransmissionProfile& profile, const Graph& g);

/// Bounds on the common row sum k of a transmission-regular graph:
/// n - 1 <= k <= floor(n^2 / 4), lower equality iff complete, upper equality
/// iff cycle (n > 2), and no cut vertex (n > 2).
struct RegularBoundsReport {
  bool applicable = false;  // false when g is not transmission-regular
  int n = 0;
  std::int64_t k = 0;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  bool lower_equal = false;
  bool upper_equal = false;
  bool is_complete = false;
  bool is_cycle = false;
  std::vector<Vertex> cut_vertices;

  bool within_bounds() const { return lower <= k && k <= upper; }
  bool equality_classified() const;
  bool ok() const;
  std::vector<std::string> failures() const;
};

RegularBoundsReport check_transmission_regular_bounds(const Graph& g);

/// diam (diam - 1) / 2 + (n - diam) diam: the largest possible T(v) in a
/// connected n-vertex graph of the given diameter.
std::int64_t corollary_diameter_bound(std::int64_t n, std::int64_t diam);

/// Path on `diam` vertices whose first end is joined to every vertex of `h`.
/// The far end of the path attains corollary_diameter_bound(n, diam).
Graph corollary_witness(int diam, const Graph& h);

struct Proposition4Report {
  int n = 0;
  std::int64_t k = 0;
  std::int64_t wiener = 0;
  std::int64_t expected_wiener = 0;  // n k / 2
  double lambda1 = 0;
  double tolerance = 0;  // 1e-8 * n * k

  bool wiener_matches() const { return wiener == expected_wiener; }
  bool lambda_matches() const;
  bool ok() const { return wiener_matches() && lambda_matches(); }
};

/// Throws DomainError("not transmission-regular") otherwise.
Proposition4Report proposition4_check(const Graph& g);

}  // namespace distspec
