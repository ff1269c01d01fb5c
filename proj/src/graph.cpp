#include "distspec/graph.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <sstream>

namespace distspec {

Graph::Graph(int n) : adj_(static_cast<std::size_t>(n < 0 ? 0 : n)) {
  if (n < 0) throw DomainError("negative vertex count");
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw DomainError("vertex index out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw DomainError("loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    edges_ += nb.size();
  }
  edges_ /= 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (int u = 0; u < order(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  std::vector<Edge> es = edges();
  for (auto& [u, v] : es) {
    u = perm[static_cast<std::size_t>(u)];
    v = perm[static_cast<std::size_t>(v)];
  }
  return Graph(order(), es);
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<int> pos(adj_.size(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) pos[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
  std::vector<Edge> es;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (Vertex w : neighbors(vertices[i])) {
      int j = pos[static_cast<std::size_t>(w)];
      if (j > static_cast<int>(i)) es.emplace_back(static_cast<int>(i), j);
    }
  return Graph(static_cast<int>(vertices.size()), es);
}

bool IntMatrix::symmetric() const {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

Family parse_family(const std::string& name) {
  if (name == "complete") return Family::complete;
  if (name == "path") return Family::path;
  if (name == "cycle") return Family::cycle;
  throw DomainError("unknown family: " + name);
}

Graph generate(Family family, int n) {
  std::vector<Edge> es;
  switch (family) {
    case Family::complete:
      if (n < 1) throw DomainError("complete graph needs n >= 1");
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
      break;
    case Family::path:
      if (n < 1) throw DomainError("path needs n >= 1");
      for (int u = 0; u + 1 < n; ++u) es.emplace_back(u, u + 1);
      break;
    case Family::cycle:
      if (n < 3) throw DomainError("cycle needs n >= 3");
      for (int u = 0; u + 1 < n; ++u) es.emplace_back(u, u + 1);
      es.emplace_back(0, n - 1);
      break;
  }
  return Graph(n, es);
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::vector<Vertex> queue;
  queue.reserve(dist.size());
  dist[static_cast<std::size_t>(source)] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

DistanceMatrix distance_matrix(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  IntMatrix m(n);
  for (std::size_t s = 0; s < n; ++s) {
    auto dist = bfs_distances(g, static_cast<Vertex>(s));
    for (std::size_t t = 0; t < n; ++t) {
      if (dist[t] < 0) throw DomainError("graph not connected");
      m(s, t) = dist[t];
    }
  }
  return DistanceMatrix(std::move(m));
}

std::int64_t diameter(const DistanceMatrix& d) {
  const auto& data = d.matrix().data;
  return data.empty() ? 0 : *std::max_element(data.begin(), data.end());
}

std::int64_t wiener_index(const DistanceMatrix& d) {
  std::int64_t total = 0;
  for (auto x : d.matrix().data) total += x;
  return total / 2;
}

IntMatrix adjacency_matrix(const Graph& g) {
  IntMatrix a(static_cast<std::size_t>(g.order()));
  for (auto [u, v] : g.edges()) {
    a(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) = 1;
    a(static_cast<std::size_t>(v), static_cast<std::size_t>(u)) = 1;
  }
  return a;
}

IntMatrix laplacian_matrix(const Graph& g) {
  IntMatrix l(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    auto vi = static_cast<std::size_t>(v);
    l(vi, vi) = g.degree(v);
    for (Vertex w : g.neighbors(v)) l(vi, static_cast<std::size_t>(w)) = -1;
  }
  return l;
}

bool is_complete(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  return g.edge_count() == n * (n - (n ? 1 : 0)) / 2;
}

bool is_cycle(const Graph& g) {
  if (g.order() < 3) return false;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) return false;
  return is_connected(g);
}

bool is_path(const Graph& g) {
  if (g.order() == 0) return false;
  if (g.edge_count() + 1 != static_cast<std::size_t>(g.order())) return false;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) > 2) return false;
  return is_connected(g);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

long long parse_int(std::string_view tok, std::size_t line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("non-integer token '" + std::string(tok) + "'", line);
  return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::size_t line_no = 0;
  long long n = -1;
  std::vector<Edge> edges;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    auto toks = split_ws(line);
    if (n < 0) {
      if (toks.size() != 2 || toks[0] != "n") throw ParseError("expected header 'n <count>'", line_no);
      n = parse_int(toks[1], line_no);
      if (n < 0 || n > (1 << 20)) throw ParseError("vertex count out of range", line_no);
      continue;
    }
    if (toks.size() != 2) throw ParseError("expected 'u v'", line_no);
    long long u = parse_int(toks[0], line_no);
    long long v = parse_int(toks[1], line_no);
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("vertex index out of range", line_no);
    if (u == v) throw ParseError("loop at vertex " + std::to_string(u), line_no);
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (n < 0) throw ParseError("missing header 'n <count>'", line_no);
  return Graph(static_cast<int>(n), edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace distspec
