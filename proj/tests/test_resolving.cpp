#include <catch_amalgamated.hpp>

#include "epglab/epg.hpp"
#include "epglab/exports.hpp"
#include "epglab/resolving.hpp"

using namespace epglab;

namespace {

SimpleGraph path(int n) {
  SimpleGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

SimpleGraph star(int leaves) {
  SimpleGraph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

}  // namespace

TEST_CASE("twin classes of EPG(SD_16)") {
  auto g = enhanced_power_graph(make_semidihedral(2));
  auto classes = twin_classes(g);
  REQUIRE(classes.size() == 6);
  // {e}, rotations minus the center (true), {a^4}, evens (false), odd pairs (true)
  CHECK(classes[0].members == std::vector<int>{0});
  CHECK(classes[0].kind == TwinKind::Singleton);
  CHECK(classes[1].members == std::vector<int>{1, 2, 3, 5, 6, 7});
  CHECK(classes[1].kind == TwinKind::True);
  CHECK(classes[2].members == std::vector<int>{4});
  CHECK(classes[3].members == std::vector<int>{8, 10, 12, 14});
  CHECK(classes[3].kind == TwinKind::False);
  CHECK(classes[4].members == std::vector<int>{9, 13});
  CHECK(classes[4].kind == TwinKind::True);
  CHECK(classes[5].members == std::vector<int>{11, 15});
  CHECK(twin_lower_bound(classes) == 10);
}

TEST_CASE("twin classes of small graphs") {
  auto k4 = complete(4);
  auto ck = twin_classes(k4);
  REQUIRE(ck.size() == 1);
  CHECK(ck[0].kind == TwinKind::True);
  CHECK(ck[0].members.size() == 4);

  auto s3 = star(3);
  auto cs = twin_classes(s3);
  REQUIRE(cs.size() == 2);
  bool found_false_class = false;
  for (const auto& c : cs)
    if (c.kind == TwinKind::False && c.members == std::vector<int>{1, 2, 3})
      found_false_class = true;
  CHECK(found_false_class);
}

TEST_CASE("is_resolving basics") {
  auto g = enhanced_power_graph(make_semidihedral(2));
  auto dist = all_pairs_geodesic(g);
  std::vector<int> everything(16);
  for (int i = 0; i < 16; ++i) everything[i] = i;
  CHECK(is_resolving(g, everything, dist));

  // paper witness: {a^2b,a^4b,a^6b} u {a^2,a^3,a^5,a^6,a^7} u {ab,a^3b}
  std::vector<int> witness{2, 3, 5, 6, 7, 9, 10, 11, 12, 14};
  CHECK(is_resolving(g, witness, dist));

  auto k3 = complete(3);
  auto dk = all_pairs_geodesic(k3);
  CHECK_FALSE(is_resolving(k3, {0}, dk));
}

TEST_CASE("metric dimension of small graphs") {
  auto k5 = complete(5);
  CHECK(metric_dimension(k5).dimension == 4);
  CHECK(metric_dimension(path(4)).dimension == 1);
  auto result = metric_dimension(star(3));
  CHECK(result.dimension == 2);
  auto dist = all_pairs_geodesic(star(3));
  CHECK(is_resolving(star(3), result.witness, dist));
}

TEST_CASE("metric dimension of EPG(SD_16) is 7n-4") {
  auto g = enhanced_power_graph(make_semidihedral(2));
  auto result = metric_dimension(g);
  CHECK(result.dimension == 10);
  CHECK(twin_lower_bound(twin_classes(g)) == 10);
  CHECK(is_resolving(g, result.witness, all_pairs_geodesic(g)));
}

TEST_CASE("metric dimension rejects disconnected graphs") {
  CHECK_THROWS_AS(metric_dimension(disjoint_union(complete(2), complete(2))), parameter_error);
}

TEST_CASE("resolving counts of K_4") {
  auto rep = resolving_counts(complete(4));
  CHECK(rep.dimension == 3);
  CHECK(rep.counts[3] == 4);
  CHECK(rep.counts[4] == 1);
  CHECK(rep.counts[2] == 0);
}

TEST_CASE("resolving counts of EPG(SD_16) match the closed form") {
  auto g = enhanced_power_graph(make_semidihedral(2));
  auto rep = resolving_counts(g);
  CHECK(rep.dimension == 10);
  CHECK(rep.counts[10] == 96);
  CHECK(rep.counts[11] == 328);
  CHECK(rep.counts[12] == 436);
  CHECK(rep.counts[13] == 286);
  CHECK(rep.counts[14] == 97);
  CHECK(rep.counts[15] == 16);
  CHECK(rep.counts[16] == 1);
  for (int i = 0; i < 10; ++i) CHECK(rep.counts[i] == 0);

  auto closed = sd_resolving_polynomial_closed_form(2);
  CHECK(closed.degree() == 16);
  CHECK(IntPolynomial(rep.counts) == closed);

  // total count equals the polynomial evaluated at 1
  BigInt total = 0;
  for (const auto& c : rep.counts) total += c;
  CHECK(closed.evaluate(1) == total);
}

TEST_CASE("every connected graph has r_n = 1 and r_{n-1} = n") {
  for (const auto& g : {complete(5), path(5), star(4),
                        enhanced_power_graph(make_dihedral(4))}) {
    auto rep = resolving_counts(g);
    int n = g.vcount();
    CHECK(rep.counts[n] == 1);
    CHECK(rep.counts[n - 1] == n);
    // monotone support: r_i > 0 for all i >= dim
    for (int i = rep.dimension; i <= n; ++i) CHECK(rep.counts[i] > 0);
  }
}

TEST_CASE("resolving enumeration cap") {
  try {
    resolving_counts(complete(18), 16);
    FAIL("expected capacity error");
  } catch (const capacity_error& e) {
    CHECK(e.cap() == 16);
  }
}

TEST_CASE("closed-form branch coverage diagnostic for n=2") {
  auto cov = sd_resolving_branch_coverage(2);
  CHECK(cov.uncovered.empty());
  // i = 13 is covered by both the first and third printed ranges; values agree
  CHECK(cov.overlapping == std::vector<int>{13});
  CHECK(cov.disagreeing.empty());
}

TEST_CASE("closed-form branch coverage for larger n") {
  for (int n : {3, 4, 5, 10}) {
    auto cov = sd_resolving_branch_coverage(n);
    CHECK(cov.uncovered.empty());
    CHECK(cov.disagreeing.empty());
  }
}

TEST_CASE("closed-form coefficients for n=2 pinned") {
  auto p = sd_resolving_polynomial_closed_form(2);
  CHECK(p[10] == 96);
  CHECK(p[15] == 16);
  CHECK(p[16] == 1);
  CHECK(p[9] == 0);
}

TEST_CASE("closed-form r_{7n-4} equals 2^{n+1} n (4n-2)") {
  for (int n : {2, 3, 4, 7}) {
    BigInt expected = (BigInt(1) << (n + 1)) * n * (4 * n - 2);
    CHECK(sd_resolving_r_closed_form(n, 7 * n - 4) == expected);
  }
}

TEST_CASE("resolving report json") {
  auto g = enhanced_power_graph(make_semidihedral(2));
  auto j = resolving_report_to_json(resolving_counts(g));
  CHECK(j["dim"] == 10);
  CHECK(j["r"][0][0] == 10);
  CHECK(j["r"][0][1] == "96");
  CHECK(j["polynomial"][10] == "96");
  CHECK(j["twin_classes"].size() == 6);
}
