#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "distspec/extensions.hpp"
#include "distspec/search.hpp"
#include "distspec/spectra.hpp"
#include "oracles.hpp"
#include "test_graphs.hpp"

using namespace distspec;

namespace {

constexpr ExtensionKind kKinds[] = {ExtensionKind::coclique, ExtensionKind::clique};

// Non-isomorphic D-cospectral pairs among connected graphs on at most 7 vertices.
std::vector<std::pair<Graph, Graph>> sweep_pairs() {
  std::vector<std::pair<Graph, Graph>> pairs;
  for (int n = 1; n <= 7; ++n) {
    auto result = cospectral_classes(enumerate_connected(n));
    for (const auto& cls : result.classes)
      for (std::size_t i = 0; i < cls.members.size(); ++i)
        for (std::size_t j = i + 1; j < cls.members.size(); ++j)
          pairs.emplace_back(parse_graph6(cls.members[i].graph6), parse_graph6(cls.members[j].graph6));
  }
  return pairs;
}

}  // namespace

TEST_SUITE("extensions") {
  TEST_CASE("extension graph examples") {
    Graph k22 = extend(fixtures::k2(), 2, ExtensionKind::coclique);
    CHECK(k22 == Graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
    CHECK(isomorphic(k22, generate(Family::cycle, 4)));
    Graph c4 = generate(Family::cycle, 4);
    Graph c4plus = extend(c4, 2, ExtensionKind::clique);
    CHECK(c4plus.order() == 8);
    CHECK(c4plus.edge_count() == 4 * 4 + 4);
    for (int v = 0; v < 8; ++v) CHECK(c4plus.degree(v) == 5);
    CHECK(extend(fixtures::paw(), 1, ExtensionKind::clique) == fixtures::paw());
    CHECK(extend(fixtures::paw(), 1, ExtensionKind::coclique) == fixtures::paw());
    CHECK_THROWS_AS(extend(fixtures::k2(), 0, ExtensionKind::clique), DomainError);
    CHECK(fiber_index(3, 1, 2) == 7);
  }

  TEST_CASE("kind names") {
    CHECK(parse_extension_kind("coclique") == ExtensionKind::coclique);
    CHECK(parse_extension_kind("clique") == ExtensionKind::clique);
    CHECK(std::string(to_string(ExtensionKind::clique)) == "clique");
    CHECK_THROWS_AS(parse_extension_kind("bogus"), DomainError);
    static_assert(shift(ExtensionKind::coclique) == 2 && shift(ExtensionKind::clique) == 1);
  }

  TEST_CASE("extension distance matrix examples") {
    auto d = extension_distance_matrix(distance_matrix(fixtures::k2()), 2, ExtensionKind::coclique);
    CHECK(d.matrix().data == std::vector<std::int64_t>{0, 2, 1, 1, 2, 0, 1, 1, 1, 1, 0, 2, 1, 1, 2, 0});
    Graph c4 = generate(Family::cycle, 4);
    auto dc = distance_matrix(c4);
    auto e = extension_distance_matrix(dc, 2, ExtensionKind::clique);
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y)
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) {
            auto a = static_cast<std::size_t>(fiber_index(x, i, 2));
            auto b = static_cast<std::size_t>(fiber_index(y, j, 2));
            std::int64_t want = x == y ? (i == j ? 0 : 1) : dc(static_cast<std::size_t>(x), static_cast<std::size_t>(y));
            CHECK(e(a, b) == want);
          }
    for (auto kind : kKinds) CHECK(extension_distance_matrix(dc, 1, kind).matrix() == dc.matrix());
    CHECK_THROWS_AS(extension_distance_matrix(distance_matrix(Graph(1)), 2, ExtensionKind::coclique), DomainError);
  }

  TEST_CASE("Wiener closed form examples") {
    CHECK(extension_wiener(8, 4, 2, ExtensionKind::clique) == 36);
    CHECK(extension_wiener(1, 2, 2, ExtensionKind::coclique) == 8);
    CHECK(wiener_index(distance_matrix(extend(generate(Family::cycle, 4), 2, ExtensionKind::clique))) == 36);
    for (auto kind : kKinds) CHECK(extension_wiener(123, 9, 1, kind) == 123);
  }

  TEST_CASE("Kronecker form equals BFS on the constructed extension") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 2 + trial % 11;
      Graph g = oracle::random_connected(n, 0.25, rng);
      auto d = distance_matrix(g);
      for (int q : {2, 3})
        for (auto kind : kKinds) {
          Graph gq = extend(g, q, kind);
          auto bfs = distance_matrix(gq);
          REQUIRE(extension_distance_matrix(d, q, kind).matrix() == bfs.matrix());
          REQUIRE(extension_wiener(wiener_index(d), n, q, kind) == oracle::wiener(gq));
          REQUIRE(extension_diameter(diameter(d), q, kind) == diameter(bfs));
        }
    }
  }

  TEST_CASE("extensions preserve D-cospectrality of sweep pairs") {
    auto pairs = sweep_pairs();
    REQUIRE(!pairs.empty());
    for (const auto& [g, h] : pairs) {
      REQUIRE(d_cospectral(g, h));
      REQUIRE_FALSE(isomorphic(g, h));
      for (int q : {2, 3})
        for (auto kind : kKinds) REQUIRE(d_cospectral(extend(g, q, kind), extend(h, q, kind)));
    }
  }

  TEST_CASE("spectrum of an extension is determined by the base spectrum") {
    // D(G_q) + s I = J_q (x) (D + s I): eigenvalues q (lambda + s) - s once per
    // base eigenvalue and -s with multiplicity n (q - 1).
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 2 + trial % 8;
      Graph g = oracle::random_connected(n, 0.3, rng);
      auto base = sym_eigenvalues(distance_matrix(g).matrix()).eigenvalues;
      for (int q : {2, 3})
        for (auto kind : kKinds) {
          const double s = shift(kind);
          std::vector<double> expected;
          for (double l : base) expected.push_back(q * (l + s) - s);
          for (int i = 0; i < n * (q - 1); ++i) expected.push_back(-s);
          std::sort(expected.rbegin(), expected.rend());
          auto got = sym_eigenvalues(distance_matrix(extend(g, q, kind)).matrix()).eigenvalues;
          REQUIRE(got.size() == expected.size());
          for (std::size_t i = 0; i < got.size(); ++i) REQUIRE(std::fabs(got[i] - expected[i]) <= 1e-6);
        }
    }
  }

  TEST_CASE("diameter rule") {
    CHECK(extension_diameter(1, 2, ExtensionKind::coclique) == 2);
    CHECK(extension_diameter(1, 2, ExtensionKind::clique) == 1);
    CHECK(extension_diameter(1, 1, ExtensionKind::coclique) == 1);
    CHECK(extension_diameter(4, 3, ExtensionKind::coclique) == 4);
    for (int n = 2; n <= 7; ++n)
      for (const Graph& g : enumerate_connected(n))
        for (int q : {1, 2, 3})
          for (auto kind : kKinds)
            REQUIRE(diameter(distance_matrix(extend(g, q, kind))) == extension_diameter(diameter(distance_matrix(g)), q, kind));
  }
}
