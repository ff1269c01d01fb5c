#include "distspec/transmission.hpp"

#include <cmath>

#include "distspec/spectra.hpp"

namespace distspec {

TransmissionProfile transmission_profile(const DistanceMatrix& d) {
  TransmissionProfile p;
  std::int64_t total = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    std::int64_t t = 0;
    for (auto x : d.row(i)) t += x;
    p.per_vertex.push_back(t);
    total += t;
  }
  p.wiener = total / 2;
  if (!p.per_vertex.empty() &&
      std::all_of(p.per_vertex.begin(), p.per_vertex.end(), [&](auto t) { return t == p.per_vertex.front(); }))
    p.regular_k = p.per_vertex.front();
  return p;
}

bool VertexBoundsReport::ok() const {
  return std::all_of(vertices.begin(), vertices.end(), [](const VertexBound& b) { return b.ok(); });
}

std::vector<std::string> VertexBoundsReport::failures() const {
  std::vector<std::string> out;
  for (const auto& b : vertices) {
    if (!b.within_bounds)
      out.push_back("vertex " + std::to_string(b.v) + ": T=" + std::to_string(b.transmission) + " outside [" +
                    std::to_string(b.lower) + "," + std::to_string(b.upper) + "]");
    if (!b.witnesses_match) out.push_back("vertex " + std::to_string(b.v) + ": equality case without witness");
  }
  return out;
}

VertexBoundsReport check_vertex_bounds(const TransmissionProfile& profile, const Graph& g) {
  const std::int64_t n = g.order();
  const bool path = is_path(g);
  VertexBoundsReport report;
  for (Vertex v = 0; v < g.order(); ++v) {
    VertexBound b;
    b.v = v;
    b.transmission = profile.per_vertex[static_cast<std::size_t>(v)];
    b.lower = n - 1;
    b.upper = n * (n - 1) / 2;
    b.lower_equal = b.transmission == b.lower;
    b.upper_equal = b.transmission == b.upper;
    b.dominating = g.degree(v) == n - 1;
    b.path_end_vertex = path && g.degree(v) <= 1;
    b.within_bounds = b.lower <= b.transmission && b.transmission <= b.upper;
    b.witnesses_match = b.lower_equal == b.dominating && b.upper_equal == b.path_end_vertex;
    report.vertices.push_back(b);
  }
  return report;
}

bool RegularBoundsReport::equality_classified() const {
  if (n <= 2) return true;
  return lower_equal == is_complete && upper_equal == is_cycle;
}

bool RegularBoundsReport::ok() const {
  if (!applicable) return true;
  return within_bounds() && equality_classified() && (n <= 2 || cut_vertices.empty());
}

std::vector<std::string> RegularBoundsReport::failures() const {
  std::vector<std::string> out;
  if (!applicable) return out;
  if (!within_bounds())
    out.push_back("k=" + std::to_string(k) + " outside [" + std::to_string(lower) + "," + std::to_string(upper) + "]");
  if (!equality_classified()) out.push_back("equality case does not match complete/cycle recognition");
  if (n > 2 && !cut_vertices.empty()) out.push_back("transmission-regular graph has a cut vertex");
  return out;
}

RegularBoundsReport check_transmission_regular_bounds(const Graph& g) {
  RegularBoundsReport r;
  r.n = g.order();
  if (!is_connected(g)) return r;
  auto profile = transmission_profile(distance_matrix(g));
  if (!profile.regular_k) return r;
  const std::int64_t n = r.n;
  r.applicable = true;
  r.k = *profile.regular_k;
  r.lower = n - 1;
  r.upper = n * n / 4;
  r.lower_equal = r.k == r.lower;
  r.upper_equal = r.k == r.upper;
  r.is_complete = is_complete(g);
  r.is_cycle = is_cycle(g);
  r.cut_vertices = articulation_points(g);
  return r;
}

std::int64_t corollary_diameter_bound(std::int64_t n, std::int64_t diam) {
  if (diam < 1 || diam > n - 1) throw DomainError("diameter must lie in [1, n-1]");
  return diam * (diam - 1) / 2 + (n - diam) * diam;
}

Graph corollary_witness(int diam, const Graph& h) {
  if (diam < 1) throw DomainError("diameter must be >= 1");
  const int m = h.order();
  // Path vertices 0..diam-1, H shifted to diam..diam+m-1, vertex 0 joined to H.
  std::vector<Edge> es;
  for (int i = 0; i + 1 < diam; ++i) es.emplace_back(i, i + 1);
  for (auto [u, v] : h.edges()) es.emplace_back(diam + u, diam + v);
  for (int x = 0; x < m; ++x) es.emplace_back(0, diam + x);
  return Graph(diam + m, es);
}

bool Proposition4Report::lambda_matches() const { return std::fabs(lambda1 - static_cast<double>(k)) <= tolerance; }

Proposition4Report proposition4_check(const Graph& g) {
  auto d = distance_matrix(g);
  auto profile = transmission_profile(d);
  if (!profile.regular_k) throw DomainError("not transmission-regular");
  Proposition4Report r;
  r.n = g.order();
  r.k = *profile.regular_k;
  r.wiener = profile.wiener;
  r.expected_wiener = static_cast<std::int64_t>(r.n) * r.k / 2;
  r.lambda1 = sym_eigenvalues(d.matrix(), MatrixKind::distance).eigenvalues.front();
  r.tolerance = 1e-8 * r.n * static_cast<double>(r.k);
  return r;
}

}  // namespace distspec
