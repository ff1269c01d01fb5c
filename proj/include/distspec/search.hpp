#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "distspec/graph.hpp"

namespace distspec {

// Brute-force canonical labeling for small graphs.
constexpr int kMaxCanonicalOrder = 8;

/// Minimum graph6-order adjacency bit string over all n! relabelings
/// (n <= 8). The pair (0,1) is the most significant bit.
std::uint64_t canonical_code(const Graph& g);

/// The relabeled graph whose adjacency bit string is canonical_code(g).
Graph canonical_form(const Graph& g);

bool isomorphic(const Graph& g, const Graph& h);

/// One representative (in canonical form) per isomorphism class of connected
/// graphs on n vertices, 1 <= n <= 7, ordered by canonical code. Built by
/// adding a vertex with every neighbor set to every graph on n-1 vertices.
std::vector<Graph> enumerate_connected(int n);

struct ClassMember {
  std::string graph6;
  std::int64_t diameter = 0;
  std::int64_t wiener = 0;

  friend bool operator==(const ClassMember&, const ClassMember&) = default;
};

/// Graphs sharing one exact distance characteristic polynomial.
struct CospectralClass {
  std::string fingerprint_hex;
  std::vector<ClassMember> members;  // sorted by graph6
};

struct SearchStats {
  std::size_t graphs = 0;        // accepted and fingerprinted
  std::size_t disconnected = 0;  // skipped
  std::size_t malformed = 0;     // skipped, unparseable graph6
  std::size_t duplicates = 0;    // isomorphic copies collapsed (n <= 8 only)

  bool has_warnings() const { return disconnected + malformed + duplicates > 0; }
};

struct SearchResult {
  std::vector<CospectralClass> classes;  // sorted by fingerprint
  SearchStats stats;
};

/// Fingerprint -> members map. Partial maps built by independent workers are
/// combined with merge(), which is associative and commutative.
class CospectralBuckets {
 public:
  void add(const Graph& g);
  /// Parses and adds one graph6 line; blank lines are ignored.
  void add_graph6(std::string_view line);
  void merge(CospectralBuckets&& other);
  /// Drops singletons, collapses isomorphic duplicates for small orders and
  /// sorts everything.
  SearchResult finish() &&;

  const SearchStats& stats() const { return stats_; }

 private:
  void insert(const Graph& g, std::string graph6);

  std::unordered_map<std::string, std::vector<ClassMember>> buckets_;
  SearchStats stats_;
};

SearchResult cospectral_classes(const std::vector<Graph>& graphs, unsigned threads = 1);

struct ScanOptions {
  unsigned threads = 1;
  std::size_t chunk_lines = 4096;
};

/// Streams newline-delimited graph6 through a worker pool. At most
/// 2 * threads chunks are buffered at any time.
SearchResult scan_graph6_streams(const std::vector<std::istream*>& inputs, const ScanOptions& options);

enum class MateFilter { any, diff_diameter, diff_wiener, diff_both };

MateFilter parse_mate_filter(const std::string& name);

struct MatePair {
  std::string fingerprint_hex;
  ClassMember first;
  ClassMember second;
};

/// Pairs inside one class that differ in the filtered invariant(s).
std::vector<MatePair> mate_report(const std::vector<CospectralClass>& classes, MateFilter filter);

/// Pairs of non-cospectral graphs of the same order with equal Wiener index.
struct WienerCollision {
  std::int64_t wiener = 0;
  std::string first;
  std::string second;
};

std::vector<WienerCollision> wiener_collisions(const std::vector<Graph>& graphs);

/// One stanza per class: fingerprint hex, then "graph6 TAB diameter TAB
/// wiener" per member; stanzas separated by a blank line.
std::string format_classes(const std::vector<CospectralClass>& classes);
std::string format_mates(const std::vector<MatePair>& mates);

}  // namespace distspec
