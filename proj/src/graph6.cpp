#include "distspec/graph.hpp"

namespace distspec {

namespace {

constexpr int kMaxOrder = 258;
constexpr char kBias = 63;

int sextet(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw ParseError("graph6 string too short for declared order", pos);
  int c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) throw ParseError("byte outside graph6 range", pos);
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw ParseError("empty graph6 string", 0);

  std::size_t pos = 0;
  int n = 0;
  if (text[0] == '~') {
    if (text.size() > 1 && text[1] == '~') throw ParseError("graph6 order exceeds supported range", 1);
    n = (sextet(text, 1) << 12) | (sextet(text, 2) << 6) | sextet(text, 3);
    if (n < 63) throw ParseError("malformed length header: long form used for order " + std::to_string(n), 0);
    if (n > kMaxOrder) throw ParseError("graph6 order exceeds supported range", 0);
    pos = 4;
  } else {
    n = sextet(text, 0);
    if (n > 62) throw ParseError("malformed length header", 0);
    pos = 1;
  }

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() < pos + bytes) throw ParseError("graph6 string too short for declared order", text.size());
  if (text.size() > pos + bytes) throw ParseError("trailing bytes after graph6 body", pos + bytes);

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = sextet(text, pos + k / 6);
      if (byte & (1 << (5 - static_cast<int>(k % 6)))) edges.emplace_back(i, j);
    }
  }
  if (bytes > 0) {
    std::size_t last = pos + bytes - 1;
    int pad = static_cast<int>(bytes * 6 - bits);
    if (sextet(text, last) & ((1 << pad) - 1)) throw ParseError("nonzero padding bits", last);
  }
  return Graph(n, edges);
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxOrder) throw DomainError("graph6 output supports at most 258 vertices");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

}  // namespace distspec
