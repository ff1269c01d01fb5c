#include "distspec/search.hpp"

#include <algorithm>
#include <condition_variable>
#include <deque>
#include <istream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "distspec/spectra.hpp"

namespace distspec {

void CospectralBuckets::insert(const Graph& g, std::string graph6) {
  if (!is_connected(g)) {
    ++stats_.disconnected;
    return;
  }
  auto d = distance_matrix(g);
  auto fingerprint = charpoly_int(d.matrix()).fingerprint();
  buckets_[std::move(fingerprint)].push_back({std::move(graph6), diameter(d), wiener_index(d)});
  ++stats_.graphs;
}

void CospectralBuckets::add(const Graph& g) { insert(g, write_graph6(g)); }

void CospectralBuckets::add_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
  if (line.empty()) return;
  try {
    insert(parse_graph6(line), std::string(line));
  } catch (const ParseError&) {
    ++stats_.malformed;
  }
}

void CospectralBuckets::merge(CospectralBuckets&& other) {
  for (auto& [key, members] : other.buckets_) {
    auto& dst = buckets_[key];
    dst.insert(dst.end(), std::make_move_iterator(members.begin()), std::make_move_iterator(members.end()));
  }
  stats_.graphs += other.stats_.graphs;
  stats_.disconnected += other.stats_.disconnected;
  stats_.malformed += other.stats_.malformed;
  stats_.duplicates += other.stats_.duplicates;
  other.buckets_.clear();
}

SearchResult CospectralBuckets::finish() && {
  SearchResult result;
  result.stats = stats_;
  for (auto& [key, members] : buckets_) {
    if (members.size() < 2) continue;
    std::sort(members.begin(), members.end(), [](const auto& a, const auto& b) { return a.graph6 < b.graph6; });
    const auto listed = members.size();
    members.erase(std::unique(members.begin(), members.end(), [](const auto& a, const auto& b) { return a.graph6 == b.graph6; }),
                  members.end());
    result.stats.duplicates += listed - members.size();
    const int order = parse_graph6(members.front().graph6).order();
    if (order <= kMaxCanonicalOrder) {
      std::vector<ClassMember> kept;
      std::vector<std::uint64_t> codes;
      for (auto& m : members) {
        auto code = canonical_code(parse_graph6(m.graph6));
        if (std::find(codes.begin(), codes.end(), code) != codes.end()) {
          ++result.stats.duplicates;
          continue;
        }
        codes.push_back(code);
        kept.push_back(std::move(m));
      }
      members = std::move(kept);
    }
    if (members.size() < 2) continue;
    result.classes.push_back({to_hex(key), std::move(members)});
  }
  std::sort(result.classes.begin(), result.classes.end(),
            [](const auto& a, const auto& b) { return a.fingerprint_hex < b.fingerprint_hex; });
  buckets_.clear();
  return result;
}

namespace {

// Bounded multi-producer/multi-consumer queue of line chunks.
class ChunkQueue {
 public:
  explicit ChunkQueue(std::size_t capacity) : capacity_(capacity) {}

  void push(std::vector<std::string> chunk) {
    std::unique_lock lock(mutex_);
    not_full_.wait(lock, [&] { return chunks_.size() < capacity_; });
    chunks_.push_back(std::move(chunk));
    not_empty_.notify_one();
  }

  std::optional<std::vector<std::string>> pop() {
    std::unique_lock lock(mutex_);
    not_empty_.wait(lock, [&] { return !chunks_.empty() || closed_; });
    if (chunks_.empty()) return std::nullopt;
    auto chunk = std::move(chunks_.front());
    chunks_.pop_front();
    not_full_.notify_one();
    return chunk;
  }

  void close() {
    std::lock_guard lock(mutex_);
    closed_ = true;
    not_empty_.notify_all();
  }

 private:
  std::size_t capacity_;
  std::deque<std::vector<std::string>> chunks_;
  bool closed_ = false;
  std::mutex mutex_;
  std::condition_variable not_full_, not_empty_;
};

unsigned effective_threads(unsigned requested) { return std::max(1u, requested); }

}  // namespace

SearchResult cospectral_classes(const std::vector<Graph>& graphs, unsigned threads) {
  threads = effective_threads(threads);
  std::vector<CospectralBuckets> partial(threads);
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < threads; ++t)
    workers.emplace_back([&, t] {
      for (std::size_t i = t; i < graphs.size(); i += threads) partial[t].add(graphs[i]);
    });
  for (auto& w : workers) w.join();
  for (unsigned t = 1; t < threads; ++t) partial[0].merge(std::move(partial[t]));
  return std::move(partial[0]).finish();
}

SearchResult scan_graph6_streams(const std::vector<std::istream*>& inputs, const ScanOptions& options) {
  const unsigned threads = effective_threads(options.threads);
  const std::size_t chunk_lines = std::max<std::size_t>(1, options.chunk_lines);
  ChunkQueue queue(2 * threads);
  std::vector<CospectralBuckets> partial(threads);
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < threads; ++t)
    workers.emplace_back([&, t] {
      while (auto chunk = queue.pop())
        for (const auto& line : *chunk) partial[t].add_graph6(line);
    });

  std::vector<std::string> chunk;
  chunk.reserve(chunk_lines);
  std::string line;
  for (std::istream* in : inputs) {
    while (std::getline(*in, line)) {
      chunk.push_back(std::move(line));
      if (chunk.size() == chunk_lines) {
        queue.push(std::move(chunk));
        chunk = {};
        chunk.reserve(chunk_lines);
      }
    }
  }
  if (!chunk.empty()) queue.push(std::move(chunk));
  queue.close();
  for (auto& w : workers) w.join();
  for (unsigned t = 1; t < threads; ++t) partial[0].merge(std::move(partial[t]));
  return std::move(partial[0]).finish();
}

MateFilter parse_mate_filter(const std::string& name) {
  if (name == "any") return MateFilter::any;
  if (name == "diff_diameter") return MateFilter::diff_diameter;
  if (name == "diff_wiener") return MateFilter::diff_wiener;
  if (name == "diff_both") return MateFilter::diff_both;
  throw DomainError("unknown mate filter: " + name);
}

std::vector<MatePair> mate_report(const std::vector<CospectralClass>& classes, MateFilter filter) {
  std::vector<MatePair> out;
  for (const auto& cls : classes) {
    for (std::size_t i = 0; i < cls.members.size(); ++i)
      for (std::size_t j = i + 1; j < cls.members.size(); ++j) {
        const auto& a = cls.members[i];
        const auto& b = cls.members[j];
        const bool diam = a.diameter != b.diameter;
        const bool wiener = a.wiener != b.wiener;
        bool keep = false;
        switch (filter) {
          case MateFilter::any: keep = true; break;
          case MateFilter::diff_diameter: keep = diam; break;
          case MateFilter::diff_wiener: keep = wiener; break;
          case MateFilter::diff_both: keep = diam && wiener; break;
        }
        if (keep) out.push_back({cls.fingerprint_hex, a, b});
      }
  }
  return out;
}

std::vector<WienerCollision> wiener_collisions(const std::vector<Graph>& graphs) {
  struct Annotated {
    std::string graph6;
    std::string fingerprint;
  };
  std::map<std::pair<int, std::int64_t>, std::vector<Annotated>> groups;
  for (const auto& g : graphs) {
    auto d = distance_matrix(g);
    groups[{g.order(), wiener_index(d)}].push_back({write_graph6(g), charpoly_int(d.matrix()).fingerprint()});
  }
  std::vector<WienerCollision> out;
  for (auto& [key, members] : groups) {
    std::sort(members.begin(), members.end(), [](const auto& a, const auto& b) { return a.graph6 < b.graph6; });
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        if (members[i].fingerprint != members[j].fingerprint)
          out.push_back({key.second, members[i].graph6, members[j].graph6});
  }
  return out;
}

std::string format_classes(const std::vector<CospectralClass>& classes) {
  std::ostringstream out;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (c) out << '\n';
    out << classes[c].fingerprint_hex << '\n';
    for (const auto& m : classes[c].members) out << m.graph6 << '\t' << m.diameter << '\t' << m.wiener << '\n';
  }
  return out.str();
}

std::string format_mates(const std::vector<MatePair>& mates) {
  std::ostringstream out;
  for (std::size_t i = 0; i < mates.size(); ++i) {
    if (i) out << '\n';
    out << mates[i].fingerprint_hex << '\n';
    for (const auto* m : {&mates[i].first, &mates[i].second})
      out << m->graph6 << '\t' << m->diameter << '\t' << m->wiener << '\n';
  }
  return out.str();
}

}  // namespace distspec
