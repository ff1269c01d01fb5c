#include <doctest.h>

#include <algorithm>

#include "distspec/search.hpp"
#include "distspec/transmission.hpp"
#include "test_graphs.hpp"

using namespace distspec;

TEST_SUITE("transmission") {
  TEST_CASE("profile examples") {
    auto c5 = transmission_profile(distance_matrix(generate(Family::cycle, 5)));
    CHECK(c5.per_vertex == std::vector<std::int64_t>(5, 6));
    CHECK(c5.wiener == 15);
    CHECK(c5.regular_k == 6);
    auto p4 = transmission_profile(distance_matrix(generate(Family::path, 4)));
    CHECK(p4.per_vertex == std::vector<std::int64_t>{6, 4, 4, 6});
    CHECK(p4.wiener == 10);
    CHECK_FALSE(p4.regular_k.has_value());
    auto k4 = transmission_profile(distance_matrix(generate(Family::complete, 4)));
    CHECK(k4.per_vertex == std::vector<std::int64_t>(4, 3));
    CHECK(k4.wiener == 6);
    CHECK(k4.regular_k == 3);
  }

  TEST_CASE("vertex bound examples") {
    Graph p4 = generate(Family::path, 4);
    auto r = check_vertex_bounds(transmission_profile(distance_matrix(p4)), p4);
    CHECK(r.ok());
    CHECK(r.vertices[0].upper_equal);
    CHECK(r.vertices[0].path_end_vertex);
    CHECK(r.vertices[0].transmission == 6);
    CHECK_FALSE(r.vertices[1].upper_equal);
    Graph k4 = generate(Family::complete, 4);
    auto rk = check_vertex_bounds(transmission_profile(distance_matrix(k4)), k4);
    for (const auto& v : rk.vertices) CHECK((v.lower_equal && v.dominating && v.transmission == 3));
    Graph c5 = generate(Family::cycle, 5);
    auto rc = check_vertex_bounds(transmission_profile(distance_matrix(c5)), c5);
    for (const auto& v : rc.vertices) {
      CHECK_FALSE(v.lower_equal);
      CHECK_FALSE(v.upper_equal);
      CHECK(v.lower == 4);
      CHECK(v.upper == 10);
    }
    CHECK(rc.failures().empty());
  }

  TEST_CASE("regular bound examples") {
    auto c6 = check_transmission_regular_bounds(generate(Family::cycle, 6));
    CHECK(c6.applicable);
    CHECK(c6.k == 9);
    CHECK(c6.upper == 9);
    CHECK(c6.upper_equal);
    CHECK(c6.is_cycle);
    CHECK(c6.ok());
    auto k5 = check_transmission_regular_bounds(generate(Family::complete, 5));
    CHECK(k5.k == 4);
    CHECK(k5.lower_equal);
    CHECK(k5.is_complete);
    CHECK(k5.ok());
    auto pet = check_transmission_regular_bounds(fixtures::petersen());
    CHECK(pet.k == 15);
    CHECK(pet.lower == 9);
    CHECK(pet.upper == 25);
    CHECK_FALSE(pet.lower_equal);
    CHECK_FALSE(pet.upper_equal);
    CHECK(pet.cut_vertices.empty());
    CHECK(pet.ok());
    CHECK_FALSE(check_transmission_regular_bounds(generate(Family::path, 4)).applicable);
  }

  TEST_CASE("diameter-two bound examples") {
    CHECK(corollary_diameter_bound(4, 3) == 6);
    CHECK(corollary_diameter_bound(2, 1) == 1);
    CHECK(corollary_diameter_bound(6, 3) == 12);
    CHECK_THROWS_AS(corollary_diameter_bound(4, 4), DomainError);
    CHECK_THROWS_AS(corollary_diameter_bound(4, 0), DomainError);
    Graph w = corollary_witness(3, generate(Family::complete, 3));
    CHECK(w.order() == 6);
    auto d = distance_matrix(w);
    CHECK(diameter(d) == 3);
    auto t = transmission_profile(d).per_vertex;
    CHECK(*std::max_element(t.begin(), t.end()) == 12);
  }

  TEST_CASE("regular cut-vertex check examples") {
    auto c5 = proposition4_check(generate(Family::cycle, 5));
    CHECK(c5.wiener == 15);
    CHECK(c5.expected_wiener == 15);
    CHECK(c5.lambda1 == doctest::Approx(6.0));
    CHECK(c5.ok());
    for (int n = 2; n <= 8; ++n) {
      auto kn = proposition4_check(generate(Family::complete, n));
      CHECK(kn.wiener == n * (n - 1) / 2);
      CHECK(kn.lambda1 == doctest::Approx(n - 1));
    }
    auto c6 = proposition4_check(generate(Family::cycle, 6));
    CHECK(c6.wiener == 27);
    CHECK(c6.lambda1 == doctest::Approx(9.0));
    CHECK_THROWS_WITH_AS(proposition4_check(generate(Family::path, 3)), "not transmission-regular", DomainError);
  }

  TEST_CASE("exhaustive bounds over connected graphs up to 7 vertices") {
    int regular_seen = 0;
    for (int n = 1; n <= 7; ++n) {
      for (const Graph& g : enumerate_connected(n)) {
        auto d = distance_matrix(g);
        auto profile = transmission_profile(d);
        auto vb = check_vertex_bounds(profile, g);
        REQUIRE_MESSAGE(vb.ok(), write_graph6(g));
        if (n >= 2) {
          auto m = *std::max_element(profile.per_vertex.begin(), profile.per_vertex.end());
          REQUIRE(m <= corollary_diameter_bound(n, diameter(d)));
        }
        auto rb = check_transmission_regular_bounds(g);
        REQUIRE(rb.applicable == profile.regular_k.has_value());
        if (!rb.applicable) continue;
        ++regular_seen;
        REQUIRE_MESSAGE(rb.ok(), write_graph6(g));
        if (n > 2) {
          REQUIRE(rb.lower_equal == is_complete(g));
          REQUIRE(rb.upper_equal == is_cycle(g));
          REQUIRE(rb.cut_vertices.empty());
        }
        REQUIRE(proposition4_check(g).ok());
      }
    }
    CHECK(regular_seen > 0);
  }

  TEST_CASE("diameter-two witnesses attain the bound and only-if holds for small graphs") {
    for (int n = 3; n <= 8; ++n) {
      for (int diam = 2; diam <= n - 1; ++diam) {
        const int h = n - diam;
        std::vector<Graph> hs{Graph(h), generate(Family::complete, h)};
        if (h >= 3) hs.push_back(generate(Family::cycle, h));
        for (const Graph& hg : hs) {
          Graph w = corollary_witness(diam, hg);
          auto d = distance_matrix(w);
          REQUIRE(diameter(d) == diam);
          auto t = transmission_profile(d).per_vertex;
          REQUIRE(*std::max_element(t.begin(), t.end()) == corollary_diameter_bound(n, diam));
        }
      }
    }
    // Only-if on small graphs: a vertex attaining the bound sees one vertex at
    // each distance 1..diam-1 and everything else at distance diam, which is
    // exactly the witness shape.
    for (int n = 3; n <= 7; ++n)
      for (const Graph& g : enumerate_connected(n)) {
        auto d = distance_matrix(g);
        const auto diam = diameter(d);
        if (diam < 2) continue;
        auto t = transmission_profile(d).per_vertex;
        for (int v = 0; v < n; ++v) {
          if (t[static_cast<std::size_t>(v)] != corollary_diameter_bound(n, diam)) continue;
          std::vector<int> layer(static_cast<std::size_t>(diam) + 1, 0);
          for (int u = 0; u < n; ++u) ++layer[static_cast<std::size_t>(d(static_cast<std::size_t>(v), static_cast<std::size_t>(u)))];
          for (std::int64_t i = 1; i < diam; ++i) REQUIRE(layer[static_cast<std::size_t>(i)] == 1);
          REQUIRE(layer[static_cast<std::size_t>(diam)] == n - diam);
        }
      }
  }
}
