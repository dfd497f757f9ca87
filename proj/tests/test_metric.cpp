#include <catch_amalgamated.hpp>

#include <random>

#include "epglab/detour.hpp"
#include "epglab/epg.hpp"
#include "epglab/metric.hpp"

using namespace epglab;

namespace {

SimpleGraph random_connected_graph(std::mt19937& rng, int max_vertices) {
  int n = 2 + int(rng() % uint32_t(max_vertices - 1));
  SimpleGraph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, int(rng() % uint32_t(v)));
  int extra = int(rng() % uint32_t(n + 1));
  for (int i = 0; i < extra; ++i) {
    int a = int(rng() % uint32_t(n)), b = int(rng() % uint32_t(n));
    if (a != b && !g.adjacent(a, b)) g.add_edge(a, b);
  }
  return g;
}

SimpleGraph path(int n) {
  SimpleGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

}  // namespace

TEST_CASE("center of EPG(SD_16) is the identity") {
  auto g = enhanced_power_graph(make_semidihedral(2));
  auto c = center(g);
  REQUIRE(c.vcount() == 1);
  CHECK(c.label(0) == "e");
}

TEST_CASE("center and eccentric subgraph of a complete graph") {
  auto g = complete(5);
  CHECK(center(g).vcount() == 5);
  CHECK(eccentric_subgraph(g).same_edges(complete(5)));
}

TEST_CASE("eccentric subgraph of EPG(SD_8n) drops exactly the identity") {
  for (int n : {2, 3, 4, 5}) {
    auto g = enhanced_power_graph(make_semidihedral(n));
    auto ev = eccentric_vertices(g);
    std::vector<int> expected;
    for (int v = 1; v < 8 * n; ++v) expected.push_back(v);
    CHECK(ev == expected);
    auto sub = eccentric_subgraph(g);
    CHECK(sub.vcount() == 8 * n - 1);
    // the induced subgraph keeps every non-identity edge
    CHECK(sub.edge_count() == g.edge_count() - (8 * n - 1));
  }
}

TEST_CASE("EPG(SD_8n) is closed") {
  for (int n : {2, 3, 4, 5}) {
    auto g = enhanced_power_graph(make_semidihedral(n));
    CHECK(closure(g).same_edges(g));
    // largest degree sum over non-adjacent pairs is 6n, well under 8n
    int worst = 0;
    for (int u = 0; u < g.vcount(); ++u)
      for (int v = u + 1; v < g.vcount(); ++v)
        if (!g.adjacent(u, v)) worst = std::max(worst, g.degree(u) + g.degree(v));
    CHECK(worst == 6 * n);
  }
}

TEST_CASE("closure of small graphs") {
  auto p4 = path(4);
  CHECK(closure(p4).same_edges(p4));  // non-adjacent endpoint degree sum 2 < 4
  // K_m minus one edge closes back to K_m for m >= 4
  for (int m : {4, 5, 6}) {
    auto g = complete(m);
    SimpleGraph h(m);
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (!(i == 0 && j == 1)) h.add_edge(i, j);
    CHECK(closure(h).same_edges(g));
  }
}

TEST_CASE("closure is idempotent and order-independent on random graphs") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = random_connected_graph(rng, 14);
    auto cl = closure(g);
    CHECK(closure(cl).same_edges(cl));
    CHECK(closure(g, /*reverse_scan=*/true).same_edges(cl));
    // edge-monotone
    for (int u = 0; u < g.vcount(); ++u)
      for (int v = u + 1; v < g.vcount(); ++v)
        if (g.adjacent(u, v)) CHECK(cl.adjacent(u, v));
  }
}

TEST_CASE("boundary and interior of EPG(SD_8n)") {
  for (int n : {2, 3}) {
    auto g = enhanced_power_graph(make_semidihedral(n));
    // detour distances: this is the metric under which the interior is K_2
    auto rep = boundary_interior(g, all_pairs_detour(g));
    CHECK(rep.interior == std::vector<int>{0, 2 * n});
    CHECK(rep.interior_subgraph.same_edges(complete(2)));
    std::vector<int> expected_complete;
    for (int v = 0; v < 8 * n; ++v)
      if (v != 0 && v != 2 * n) expected_complete.push_back(v);
    CHECK(rep.complete == expected_complete);

    // under the geodesic metric only the identity is interior
    auto grep = boundary_interior(g, all_pairs_geodesic(g));
    CHECK(grep.interior == std::vector<int>{0});
  }
}

TEST_CASE("complete graph has empty interior") {
  auto g = complete(6);
  for (const auto& dist : {all_pairs_geodesic(g), all_pairs_detour(g)}) {
    auto rep = boundary_interior(g, dist);
    CHECK(rep.interior.empty());
    CHECK(rep.boundary.size() == 6);
    CHECK(rep.complete.size() == 6);
  }
}

TEST_CASE("book theorems hold for geodesic boundaries on random graphs") {
  std::mt19937 rng(1717);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = random_connected_graph(rng, 10);
    auto dist = all_pairs_geodesic(g);
    auto rep = boundary_interior(g, dist);
    // interior == not-boundary == metric-betweenness interior
    std::vector<char> is_interior(g.vcount(), 0);
    for (int v : rep.interior) is_interior[v] = 1;
    for (int v = 0; v < g.vcount(); ++v)
      CHECK(bool(is_interior[v]) == is_interior_by_betweenness(dist, v));
    // complete vertex <=> boundary vertex of every other vertex
    std::vector<char> is_complete(g.vcount(), 0);
    for (int v : rep.complete) is_complete[v] = 1;
    for (int v = 0; v < g.vcount(); ++v) {
      bool boundary_of_all = true;
      for (int u = 0; u < g.vcount() && boundary_of_all; ++u)
        if (u != v && !is_boundary_vertex_of(g, dist, v, u)) boundary_of_all = false;
      CHECK(bool(is_complete[v]) == boundary_of_all);
    }
  }
}

TEST_CASE("radius and diameter bounds on random graphs") {
  std::mt19937 rng(2026);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = random_connected_graph(rng, 12);
    auto ecc = eccentricities(all_pairs_geodesic(g));
    int rad = *std::min_element(ecc.begin(), ecc.end());
    int diam = *std::max_element(ecc.begin(), ecc.end());
    CHECK(rad <= diam);
    CHECK(diam <= 2 * rad);
  }
}

TEST_CASE("metric operations reject disconnected graphs") {
  auto g = disjoint_union(complete(2), complete(3));
  CHECK_THROWS_AS(center(g), parameter_error);
  CHECK_THROWS_AS(eccentric_subgraph(g), parameter_error);
  CHECK_THROWS_AS(boundary_interior(g), parameter_error);
}
