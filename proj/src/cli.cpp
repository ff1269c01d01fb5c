#include "distspec/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>

#include "distspec/blockclique.hpp"
#include "distspec/extensions.hpp"
#include "distspec/linear_ktree.hpp"
#include "distspec/search.hpp"
#include "distspec/spectra.hpp"
#include "distspec/transmission.hpp"

namespace distspec::cli {

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Option combinations CLI11 cannot express.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GraphInputs {
  std::vector<std::string> g6;
  std::vector<std::string> g6_files;
  std::vector<std::string> edge_files;

  void attach(CLI::App& app) {
    app.add_option("--g6", g6, "graph6 string (repeatable)");
    app.add_option("--g6-file", g6_files, "file of graph6 lines (repeatable)");
    app.add_option("--edges", edge_files, "edge-list file (repeatable)");
  }

  std::vector<Graph> load() const;
  Graph single() const {
    auto gs = load();
    if (gs.size() != 1) throw DomainError("expected exactly one input graph, got " + std::to_string(gs.size()));
    return gs.front();
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<Graph> GraphInputs::load() const {
  std::vector<Graph> out;
  for (const auto& s : g6) out.push_back(parse_graph6(s));
  for (const auto& path : g6_files) {
    std::istringstream lines(read_file(path));
    std::string line;
    while (std::getline(lines, line))
      if (!line.empty() && line != "\r") out.push_back(parse_graph6(line));
  }
  for (const auto& path : edge_files) out.push_back(parse_edge_list(read_file(path)));
  return out;
}

std::string format_rational(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string format_double(double x) {
  if (std::fabs(x) < 1e-10) x = 0.0;
  std::ostringstream out;
  out << std::setprecision(12) << x;
  return out.str();
}

void print_matrix(std::ostream& out, const DistanceMatrix& d) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d.size(); ++j) out << (j ? " " : "") << d(i, j);
    out << '\n';
  }
}

template <typename Seq>
void print_list(std::ostream& out, const Seq& seq) {
  bool first = true;
  for (const auto& x : seq) {
    out << (first ? "" : " ") << x;
    first = false;
  }
  out << '\n';
}

struct Context {
  std::ostream& out;
  std::ostream& err;
};

// A command owns its parsed options; `configure` registers them and the
// returned callable runs after a successful parse.
using Runner = std::function<int(Context&)>;
using Command = std::function<Runner(CLI::App&)>;

Runner cmd_distances(CLI::App& app) {
  auto in = std::make_shared<GraphInputs>();
  in->attach(app);
  return [in](Context& ctx) {
    print_matrix(ctx.out, distance_matrix(in->single()));
    return kOk;
  };
}

Runner cmd_spectrum(CLI::App& app) {
  auto in = std::make_shared<GraphInputs>();
  auto laplacian = std::make_shared<bool>(false);
  in->attach(app);
  app.add_flag("--laplacian", *laplacian, "Laplacian instead of distance matrix");
  return [in, laplacian](Context& ctx) {
    Graph g = in->single();
    auto report = *laplacian ? sym_eigenvalues(laplacian_matrix(g), MatrixKind::laplacian)
                             : sym_eigenvalues(distance_matrix(g).matrix(), MatrixKind::distance);
    std::vector<std::string> shown;
    for (double x : report.eigenvalues) shown.push_back(format_double(x));
    print_list(ctx.out, shown);
    return kOk;
  };
}

Runner cmd_charpoly(CLI::App& app) {
  auto in = std::make_shared<GraphInputs>();
  auto laplacian = std::make_shared<bool>(false);
  auto fingerprint = std::make_shared<bool>(false);
  in->attach(app);
  app.add_flag("--laplacian", *laplacian, "Laplacian instead of distance matrix");
  app.add_flag("--fingerprint", *fingerprint, "also print the canonical fingerprint (hex)");
  return [=](Context& ctx) {
    Graph g = in->single();
    CharPoly p = *laplacian ? laplacian_charpoly(g) : distance_charpoly(g);
    ctx.out << p.to_string() << '\n';
    if (*fingerprint) ctx.out << p.fingerprint_hex() << '\n';
    return kOk;
  };
}

Runner cmd_wiener(CLI::App& app) {
  auto in = std::make_shared<GraphInputs>();
  auto method = std::make_shared<std::string>("bfs");
  auto k = std::make_shared<int>(0);
  in->attach(app);
  app.add_option("--method", *method, "bfs | blockclique | ktree")
      ->check(CLI::IsMember({"bfs", "blockclique", "ktree"}));
  app.add_option("--k", *k, "k for --method ktree");
  return [=](Context& ctx) {
    Graph g = in->single();
    if (*method == "blockclique")
      ctx.out << format_rational(wiener_blockclique_spectral(g)) << '\n';
    else if (*method == "ktree")
      ctx.out << wiener_linear_ktree(g, *k) << '\n';
    else
      ctx.out << wiener_index(distance_matrix(g)) << '\n';
    return kOk;
  };
}

Runner cmd_transmission(CLI::App& app) {
  auto in = std::make_shared<GraphInputs>();
  auto check = std::make_shared<std::string>();
  in->attach(app);
  app.add_option("--check", *check, "vertex | regular | prop4")
      ->check(CLI::IsMember({"vertex", "regular", "prop4"}));
  return [=](Context& ctx) {
    Graph g = in->single();
    auto profile = transmission_profile(distance_matrix(g));
    if (check->empty()) {
      ctx.out << "transmission";
      for (auto t : profile.per_vertex) ctx.out << ' ' << t;
      ctx.out << "\nwiener " << profile.wiener << "\nregular "
              << (profile.regular_k ? std::to_string(*profile.regular_k) : std::string("no")) << '\n';
      return kOk;
    }
    std::vector<std::string> failures;
    if (*check == "vertex") {
      auto report = check_vertex_bounds(profile, g);
      for (const auto& b : report.vertices)
        ctx.out << "vertex " << b.v << " T=" << b.transmission << " bounds [" << b.lower << "," << b.upper << "]"
                << (b.lower_equal ? " lower-equal" : "") << (b.upper_equal ? " upper-equal" : "")
                << (b.dominating ? " dominating" : "") << (b.path_end_vertex ? " path-end" : "") << '\n';
      failures = report.failures();
    } else if (*check == "regular") {
      auto r = check_transmission_regular_bounds(g);
      if (!r.applicable) {
        ctx.out << "not applicable: not transmission-regular\n";
        return kOk;
      }
      ctx.out << "k " << r.k << " bounds [" << r.lower << "," << r.upper << "]"
              << (r.lower_equal ? " lower-equal" : "") << (r.upper_equal ? " upper-equal" : "")
              << (r.is_complete ? " complete" : "") << (r.is_cycle ? " cycle" : "")
              << " cut-vertices " << r.cut_vertices.size() << '\n';
      failures = r.failures();
    } else {
      auto r = proposition4_check(g);
      ctx.out << "wiener " << r.wiener << " nk/2 " << r.expected_wiener << " lambda1 " << format_double(r.lambda1)
              << " k " << r.k << '\n';
      if (!r.wiener_matches()) failures.push_back("W != nk/2");
      if (!r.lambda_matches()) failures.push_back("lambda1 != k");
    }
    for (const auto& f : failures) ctx.err << "violation: " << f << '\n';
    ctx.out << (failures.empty() ? "ok" : "FAILED") << '\n';
    return failures.empty() ? kOk : kDomainError;
  };
}

Runner cmd_cospectral(CLI::App& app) {
  auto in = std::make_shared<GraphInputs>();
  in->attach(app);
  return [in](Context& ctx) {
    auto gs = in->load();
    if (gs.size() != 2) throw DomainError("cospectral needs exactly two graphs, got " + std::to_string(gs.size()));
    ctx.out << (d_cospectral(gs[0], gs[1]) ? "true" : "false") << '\n';
    return kOk;
  };
}

Runner cmd_extend(CLI::App& app) {
  auto in = std::make_shared<GraphInputs>();
  auto q = std::make_shared<int>(2);
  auto kind = std::make_shared<std::string>("coclique");
  auto show = std::make_shared<std::string>("graph6");
  in->attach(app);
  app.add_option("--q", *q, "number of copies per vertex");
  app.add_option("--kind", *kind, "coclique | clique")->check(CLI::IsMember({"coclique", "clique"}));
  app.add_option("--show", *show, "graph6 | distances | wiener | diameter")
      ->check(CLI::IsMember({"graph6", "distances", "wiener", "diameter"}));
  return [=](Context& ctx) {
    Graph g = in->single();
    auto k = parse_extension_kind(*kind);
    if (*show == "graph6") {
      ctx.out << write_graph6(extend(g, *q, k)) << '\n';
      return kOk;
    }
    auto d = distance_matrix(g);
    if (*show == "distances")
      print_matrix(ctx.out, extension_distance_matrix(d, *q, k));
    else if (*show == "wiener")
      ctx.out << extension_wiener(wiener_index(d), g.order(), *q, k) << '\n';
    else
      ctx.out << extension_diameter(diameter(d), *q, k) << '\n';
    return kOk;
  };
}

Runner cmd_blockclique(CLI::App& app) {
  auto in = std::make_shared<GraphInputs>();
  auto forest_b = std::make_shared<int>(0);
  in->attach(app);
  app.add_option("--forest-identity", *forest_b, "print both sides of the forest split identity for block order b");
  return [=](Context& ctx) {
    if (*forest_b != 0) {
      auto split = forest_split_identity(*forest_b);
      ctx.out << split.lhs.get_str() << ' ' << split.rhs.get_str() << '\n';
      return kOk;
    }
    Graph g = in->single();
    auto dec = block_decomposition(g);
    for (const auto& block : dec.blocks) {
      ctx.out << "block";
      for (auto v : block) ctx.out << ' ' << v;
      ctx.out << '\n';
    }
    ctx.out << "cut";
    for (auto v : dec.cut_vertices) ctx.out << ' ' << v;
    ctx.out << '\n';
    auto params = uniform_block_clique_params(g);
    ctx.out << "b " << params.b << " r " << params.r << '\n';
    ctx.out << "reciprocal-sum " << format_rational(laplacian_reciprocal_sum(g)) << '\n';
    ctx.out << "spanning-trees " << spanning_tree_count_blockclique(params).get_str() << '\n';
    ctx.out << "wiener " << format_rational(wiener_blockclique_spectral(g)) << '\n';
    return kOk;
  };
}

Runner cmd_ktree(CLI::App& app) {
  auto in = std::make_shared<GraphInputs>();
  auto k = std::make_shared<int>(0);
  auto wiener = std::make_shared<bool>(false);
  auto distances = std::make_shared<bool>(false);
  in->attach(app);
  app.add_option("--k", *k, "clique parameter k")->required();
  app.add_flag("--wiener", *wiener, "print the Wiener index");
  app.add_flag("--distances", *distances, "print the distance matrix from the recurrence");
  return [=](Context& ctx) {
    Graph g = in->single();
    if (*wiener) {
      ctx.out << wiener_linear_ktree(g, *k) << '\n';
      return kOk;
    }
    auto cert = recursive_labeling(g, *k);
    if (*distances) {
      print_matrix(ctx.out, linear_ktree_distances(cert));
      return kOk;
    }
    ctx.out << "labeling";
    for (auto v : cert.labeling) ctx.out << ' ' << v;
    ctx.out << '\n';
    for (std::size_t p = static_cast<std::size_t>(cert.k) + 1; p < cert.labeling.size(); ++p) {
      ctx.out << "back " << p;
      for (int j : cert.back_neighbors[p]) ctx.out << ' ' << j;
      ctx.out << '\n';
    }
    return kOk;
  };
}

Runner cmd_bounds(CLI::App& app) {
  auto n = std::make_shared<std::int64_t>(0);
  auto k = std::make_shared<std::int64_t>(0);
  auto diam = std::make_shared<std::int64_t>(0);
  app.add_option("--n", *n, "vertex count")->required();
  auto* k_opt = app.add_option("--k", *k, "linear k-tree Wiener bounds");
  auto* d_opt = app.add_option("--diam", *diam, "largest transmission for this diameter");
  k_opt->excludes(d_opt);
  return [=](Context& ctx) {
    if (*k != 0) {
      auto b = ktree_wiener_bounds(*n, *k);
      ctx.out << b.lower << ' ' << b.upper << '\n';
    } else if (*diam != 0) {
      ctx.out << corollary_diameter_bound(*n, *diam) << '\n';
    } else {
      throw UsageError("needs --k or --diam");
    }
    return kOk;
  };
}

Runner cmd_search(CLI::App& app) {
  auto n = std::make_shared<int>(0);
  auto files = std::make_shared<std::vector<std::string>>();
  auto filter = std::make_shared<std::string>("any");
  auto threads = std::make_shared<unsigned>(1);
  auto chunk = std::make_shared<std::size_t>(4096);
  auto collisions = std::make_shared<bool>(false);
  auto* n_opt = app.add_option("--n", *n, "enumerate all connected graphs on n <= 7 vertices");
  auto* f_opt = app.add_option("--g6-file", *files, "graph6 stream (repeatable)");
  n_opt->excludes(f_opt);
  app.add_option("--filter", *filter, "any | diff_diameter | diff_wiener | diff_both")
      ->check(CLI::IsMember({"any", "diff_diameter", "diff_wiener", "diff_both"}));
  app.add_option("--threads", *threads, "worker threads");
  app.add_option("--chunk", *chunk, "lines per work chunk");
  app.add_flag("--collisions", *collisions, "report equal-Wiener pairs that are not cospectral (with --n)");
  return [=](Context& ctx) {
    SearchResult result;
    if (*n != 0) {
      auto graphs = enumerate_connected(*n);
      if (*collisions) {
        for (const auto& c : wiener_collisions(graphs)) ctx.out << c.wiener << '\t' << c.first << '\t' << c.second << '\n';
        return kOk;
      }
      result = cospectral_classes(graphs, *threads);
    } else if (!files->empty()) {
      std::vector<std::unique_ptr<std::ifstream>> streams;
      std::vector<std::istream*> inputs;
      for (const auto& path : *files) {
        streams.push_back(std::make_unique<std::ifstream>(path));
        if (!*streams.back()) throw InputError("cannot read file: " + path);
        inputs.push_back(streams.back().get());
      }
      result = scan_graph6_streams(inputs, {*threads, *chunk});
    } else {
      throw UsageError("needs --n or --g6-file");
    }
    auto f = parse_mate_filter(*filter);
    if (f == MateFilter::any)
      ctx.out << format_classes(result.classes);
    else
      ctx.out << format_mates(mate_report(result.classes, f));
    const auto& s = result.stats;
    ctx.err << "graphs " << s.graphs << " classes " << result.classes.size() << " disconnected " << s.disconnected
            << " malformed " << s.malformed << " duplicates " << s.duplicates << '\n';
    return s.has_warnings() ? kSkippedInput : kOk;
  };
}

Runner cmd_generate(CLI::App& app) {
  auto family = std::make_shared<std::string>();
  auto n = std::make_shared<int>(0);
  auto k = std::make_shared<int>(1);
  auto b = std::make_shared<int>(2);
  auto r = std::make_shared<int>(1);
  auto seed = std::make_shared<std::uint64_t>(1);
  auto format = std::make_shared<std::string>("graph6");
  app.add_option("--family", *family,
                 "complete | path | cycle | ktree-dominating | ktree-pathlike | ktree-random | block-clique")
      ->required()
      ->check(CLI::IsMember(
          {"complete", "path", "cycle", "ktree-dominating", "ktree-pathlike", "ktree-random", "block-clique"}));
  app.add_option("--n", *n, "vertex count");
  app.add_option("--k", *k, "k for linear k-trees");
  app.add_option("--b", *b, "block order");
  app.add_option("--r", *r, "number of blocks");
  app.add_option("--seed", *seed, "generator seed");
  app.add_option("--format", *format, "graph6 | edges")->check(CLI::IsMember({"graph6", "edges"}));
  return [=](Context& ctx) {
    Graph g;
    if (*family == "ktree-dominating")
      g = generate_extremal_ktree(*n, *k, ExtremalKTree::dominating);
    else if (*family == "ktree-pathlike")
      g = generate_extremal_ktree(*n, *k, ExtremalKTree::pathlike);
    else if (*family == "ktree-random")
      g = random_linear_ktree(*n, *k, *seed);
    else if (*family == "block-clique")
      g = random_block_clique(*b, *r, *seed);
    else
      g = generate(parse_family(*family), *n);
    if (*format == "edges")
      ctx.out << write_edge_list(g);
    else
      ctx.out << write_graph6(g) << '\n';
    return kOk;
  };
}

const std::map<std::string, Command>& commands() {
  static const std::map<std::string, Command> table{
      {"distances", cmd_distances}, {"spectrum", cmd_spectrum},   {"charpoly", cmd_charpoly},
      {"wiener", cmd_wiener},       {"transmission", cmd_transmission}, {"cospectral", cmd_cospectral},
      {"extend", cmd_extend},       {"blockclique", cmd_blockclique},   {"ktree", cmd_ktree},
      {"bounds", cmd_bounds},       {"search", cmd_search},       {"generate", cmd_generate},
  };
  return table;
}

}  // namespace

std::string usage() {
  return "usage: distspec <command> [options]\n"
         "\n"
         "graph input (where a command reads graphs):\n"
         "  --g6 <string>      graph6 string, repeatable\n"
         "  --g6-file <path>   file with one graph6 string per line\n"
         "  --edges <path>     edge list: 'n <count>' then 'u v' lines\n"
         "\n"
         "commands:\n"
         "  distances     print the distance matrix\n"
         "  spectrum      eigenvalues, descending [--laplacian]\n"
         "  charpoly      exact characteristic polynomial [--laplacian] [--fingerprint]\n"
         "  wiener        Wiener index [--method bfs|blockclique|ktree] [--k K]\n"
         "  transmission  row sums and Wiener index [--check vertex|regular|prop4]\n"
         "  cospectral    decide D-cospectrality of two graphs\n"
         "  extend        q-(co)clique extension --q Q --kind coclique|clique\n"
         "                [--show graph6|distances|wiener|diameter]\n"
         "  blockclique   blocks, (b, r) and the Laplacian-spectral Wiener index\n"
         "                [--forest-identity B]\n"
         "  ktree         recursive labeling --k K [--wiener] [--distances]\n"
         "  bounds        --n N (--k K | --diam D)\n"
         "  search        cospectral classes (--n N | --g6-file PATH...)\n"
         "                [--filter any|diff_diameter|diff_wiener|diff_both]\n"
         "                [--threads T] [--chunk LINES] [--collisions]\n"
         "  generate      --family F [--n N] [--k K] [--b B] [--r R] [--seed S]\n"
         "                [--format graph6|edges]\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.empty()) {
    err << usage();
    return kUsage;
  }
  if (args[0] == "help" || args[0] == "--help" || args[0] == "-h") {
    out << usage();
    return kOk;
  }
  auto it = commands().find(args[0]);
  if (it == commands().end()) {
    err << "unknown command: " << args[0] << '\n' << usage();
    return kUsage;
  }
  CLI::App app("distspec " + args[0]);
  app.set_help_flag();
  Runner runner = it->second(app);
  std::vector<std::string> rest(args.rbegin(), args.rend() - 1);
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    err << "distspec " << args[0] << ": " << e.what() << '\n';
    return kUsage;
  }
  Context ctx{out, err};
  try {
    return runner(ctx);
  } catch (const UsageError& e) {
    err << "distspec " << args[0] << ": " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    err << e.what() << '\n';
    return kNoInput;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace distspec::cli
