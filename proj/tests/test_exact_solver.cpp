#include <doctest.h>

#include "degratio/catalog.hpp"
#include "degratio/solver.hpp"
#include "oracles.hpp"

using namespace degratio;

namespace {

std::vector<Graph> small_graphs(int max_n, int samples, std::uint64_t seed) {
  std::vector<Graph> out = catalog_graphs(max_n);
  for (Graph& g : sample_connected_graphs(samples, 2, max_n, seed)) out.push_back(std::move(g));
  return out;
}

}  // namespace

TEST_CASE("solve_q on named graphs") {
  CHECK(solve_q(named_graph("C3")).q == Ratio(1, 3));
  CHECK(solve_q(named_graph("K5")).q == Ratio(2, 5));
  CHECK(solve_q(named_graph("K6")).q == Ratio(1, 2));
  CHECK(solve_q(named_graph("coK2claw")).q == Ratio(2, 5));
  CHECK(solve_q(named_graph("K33")).q == Ratio(1, 2));
  CHECK(solve_q(named_graph("bowtie")).q == Ratio(3, 5));
  CHECK(solve_q(disjoint_union(cycle_graph(3), clique_graph(4))).q == Ratio(1));
  CHECK_THROWS_AS(solve_q(path_graph(65)), precondition_error);
}

TEST_CASE("solve_q equals the enumeration oracle on small graphs") {
  for (const Graph& g : small_graphs(10, 150, 5)) {
    CAPTURE(g.name());
    auto r = solve_q(g);
    CHECK(oracle::same(oracle::q(oracle::matrix(g)), r.q));
    CHECK(quality_of(g, r.optimal_partition) == r.q);
  }
}

TEST_CASE("both solve methods and all job counts agree") {
  for (const Graph& g : small_graphs(9, 40, 9)) {
    Ratio q = solve_q(g, {default_budget, SolveMethod::enumeration}).q;
    CHECK(solve_q(g, {default_budget, SolveMethod::pruned_search, 1}).q == q);
    CHECK(solve_q(g, {default_budget, SolveMethod::pruned_search, 4}).q == q);
  }
}

TEST_CASE("single-worker witnesses are deterministic") {
  Graph g = named_graph("petersen");
  auto a = solve_q(g, {default_budget, SolveMethod::pruned_search, 1});
  auto b = solve_q(g, {default_budget, SolveMethod::pruned_search, 1});
  CHECK(a.optimal_partition == b.optimal_partition);
  CHECK(a.explored == b.explored);
}

TEST_CASE("budget exhaustion is an error, never an answer") {
  CHECK_THROWS_AS(solve_q(named_graph("petersen"), {8}), budget_exceeded);
  CHECK_THROWS_AS(solve_q(named_graph("K7"), {8, SolveMethod::enumeration}), budget_exceeded);
  CHECK_THROWS_AS(decide(named_graph("K33"), Ratio(3, 4), 4), budget_exceeded);
}

TEST_CASE("decide") {
  CHECK(decide(named_graph("C3"), Ratio(1, 3)).yes);
  CHECK_FALSE(decide(named_graph("C3"), Ratio(2, 5)).yes);
  CHECK(decide(disjoint_union(clique_graph(2), clique_graph(3)), Ratio(1)).yes);
  CHECK_THROWS_AS(decide(named_graph("C3"), Ratio(0)), parameter_error);
  CHECK_THROWS_AS(decide(named_graph("C3"), Ratio(3, 2)), parameter_error);
  auto r = decide(named_graph("prism"), Ratio(3, 4));
  REQUIRE(r.witness);
  CHECK(quality_of(named_graph("prism"), *r.witness) >= Ratio(3, 4));
}

TEST_CASE("decide is sharp at q(G)") {
  for (const Graph& g : small_graphs(8, 60, 13)) {
    Ratio q = solve_q(g).q;
    int n = g.order();
    CHECK(decide(g, q).yes);
    if (q < Ratio(1)) CHECK_FALSE(decide(g, q + Ratio(1, n * (n + 1))).yes);
    oracle::Frac above{q.num() * n * (n + 1) + q.den(), q.den() * n * (n + 1)};
    CHECK_FALSE(oracle::decide(oracle::matrix(g), above));
  }
}

TEST_CASE("q < 1 for connected graphs") {
  for (const Graph& g : small_graphs(9, 80, 17))
    if (is_connected(g)) CHECK(solve_q(g).q < Ratio(1));
}

TEST_CASE("matching-cut ground truth") {
  CHECK_FALSE(find_matching_cut(named_graph("K3")).has_cut());
  CHECK_FALSE(find_matching_cut(named_graph("K33")).has_cut());
  CHECK_FALSE(find_matching_cut(named_graph("K4")).has_cut());
  auto c4 = find_matching_cut(named_graph("C4"));
  REQUIRE(c4.has_cut());
  CHECK(c4.crossing_edges.size() == 2);
  CHECK(is_matching(named_graph("C4"), c4.crossing_edges));
  CHECK(find_matching_cut(named_graph("petersen")).has_cut());
  CHECK_THROWS_AS(find_matching_cut(disjoint_union(clique_graph(2), clique_graph(2))), precondition_error);
}

TEST_CASE("find_matching_cut agrees with the oracle up to 12 vertices") {
  for (const Graph& g : small_graphs(12, 120, 21)) {
    if (!is_connected(g)) continue;
    CAPTURE(g.name());
    auto c = find_matching_cut(g);
    CHECK(certificate_is_consistent(g, c));
    CHECK(c.has_cut() == oracle::has_matching_cut(oracle::matrix(g)));
  }
}

TEST_CASE("product rule") {
  auto kk = product_matching_cut(named_graph("K4"), named_graph("K4"));
  CHECK_FALSE(kk.has_cut);
  auto k4k2 = product_matching_cut(named_graph("K4"), named_graph("K2"));
  REQUIRE(k4k2.has_cut);
  REQUIRE(k4k2.lifted);
  Graph p = cartesian_product(named_graph("K4"), named_graph("K2"));
  CHECK(is_matching(p, crossing_edges(p, *k4k2.lifted)));
  CHECK_FALSE(crossing_edges(p, *k4k2.lifted).empty());
  CHECK_FALSE(product_matching_cut(named_graph("K3"), named_graph("K33")).has_cut);

  auto cert = find_matching_cut(named_graph("prod:K4,K33"));
  CHECK_FALSE(cert.has_cut());
  CHECK(cert.basis == MatchingCutCertificate::Basis::product_lemma);
}

TEST_CASE("product rule agrees with exhaustive search on the product") {
  std::vector<Graph> factors;
  for (const char* id : {"K2", "K3", "C4", "K4", "K33", "prism", "P3"}) factors.push_back(named_graph(id));
  for (const Graph& g : factors)
    for (const Graph& h : factors) {
      if (g.order() * h.order() > 24) continue;
      Graph p = cartesian_product(g, h);
      bool exhaustive = find_matching_cut(p, {default_budget, false}).has_cut();
      CHECK(product_matching_cut(g, h).has_cut == exhaustive);
      if (p.order() <= 12) CHECK(exhaustive == oracle::has_matching_cut(oracle::matrix(p)));
    }
}

TEST_CASE("k-regular graphs: q >= k/(k+1) iff matching-cut") {
  for (const Graph& g : catalog_graphs(16)) {
    auto k = regular_degree(g);
    if (!k || !is_connected(g)) continue;
    CAPTURE(g.name());
    CHECK(decide(g, Ratio(*k, *k + 1)).yes == find_matching_cut(g).has_cut());
  }
}
