#include <algorithm>

#include "distspec/graph.hpp"

namespace distspec {

// Hopcroft-Tarjan lowpoint DFS, iterative so long paths do not exhaust the
// call stack. Edges are pushed on a stack and popped into a block whenever a
// child's lowpoint does not climb above its parent.
BiconnectedComponents biconnected_components(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  BiconnectedComponents out;
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<std::size_t> next_edge(n, 0);
  std::vector<bool> is_cut(n, false);
  std::vector<Edge> edge_stack;
  int timer = 0;

  auto pop_block = [&](Vertex u, Vertex v) {
    std::vector<Vertex> block;
    while (!edge_stack.empty()) {
      Edge e = edge_stack.back();
      edge_stack.pop_back();
      block.push_back(e.first);
      block.push_back(e.second);
      if (e == Edge{u, v}) break;
    }
    std::sort(block.begin(), block.end());
    block.erase(std::unique(block.begin(), block.end()), block.end());
    out.blocks.push_back(std::move(block));
  };

  for (std::size_t root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    if (g.degree(static_cast<Vertex>(root)) == 0) {
      disc[root] = timer++;
      out.blocks.push_back({static_cast<Vertex>(root)});
      continue;
    }
    int root_children = 0;
    std::vector<Vertex> stack{static_cast<Vertex>(root)};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Vertex u = stack.back();
      auto ui = static_cast<std::size_t>(u);
      auto nb = g.neighbors(u);
      if (next_edge[ui] < nb.size()) {
        Vertex w = nb[next_edge[ui]++];
        auto wi = static_cast<std::size_t>(w);
        if (disc[wi] < 0) {
          parent[wi] = u;
          disc[wi] = low[wi] = timer++;
          edge_stack.emplace_back(u, w);
          if (ui == root) ++root_children;
          stack.push_back(w);
        } else if (w != parent[ui] && disc[wi] < disc[ui]) {
          edge_stack.emplace_back(u, w);
          low[ui] = std::min(low[ui], disc[wi]);
        }
        continue;
      }
      stack.pop_back();
      if (parent[ui] < 0) continue;
      auto pi = static_cast<std::size_t>(parent[ui]);
      low[pi] = std::min(low[pi], low[ui]);
      if (low[ui] >= disc[pi]) {
        if (pi != root) is_cut[pi] = true;
        pop_block(parent[ui], u);
      }
    }
    if (root_children > 1) is_cut[root] = true;
  }
  for (std::size_t v = 0; v < n; ++v)
    if (is_cut[v]) out.cut_vertices.push_back(static_cast<Vertex>(v));
  return out;
}

std::vector<Vertex> articulation_points(const Graph& g) { return biconnected_components(g).cut_vertices; }

}  // namespace distspec
