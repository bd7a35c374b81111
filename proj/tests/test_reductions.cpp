#include <doctest.h>

#include "degratio/reductions.hpp"
#include "oracles.hpp"

using namespace degratio;

TEST_CASE("double cover") {
  Graph k5 = clique_graph(5);
  auto inst = bipartite_double_cover(k5);
  CHECK(inst.graph.order() == 10);
  CHECK(inst.graph.size() == 2 * k5.size());
  CHECK(is_bipartite(inst.graph));
  CHECK(regular_degree(inst.graph) == 4);
  CHECK(inst.provenance.size() == 5);
  CHECK(inst.provenance[2] == std::vector<Vertex>{4, 5});
  auto e = verify_equivalence(inst);
  CHECK(e.verdict == Equivalence::holds);
  CHECK(e.source_side == false);
  CHECK_FALSE(oracle::has_matching_cut(oracle::matrix(inst.graph)));

  auto c4 = bipartite_double_cover(cycle_graph(4), true);
  // C4 is bipartite, so its cover is two disjoint copies of C4 rather than C8
  CHECK_FALSE(is_connected(c4.graph));
  CHECK(verify_equivalence(c4).verdict == Equivalence::holds);
  auto c5 = bipartite_double_cover(cycle_graph(5), true);
  CHECK(are_isomorphic(c5.graph, cycle_graph(10)));

  CHECK_THROWS_AS(bipartite_double_cover(cycle_graph(4)), precondition_error);
  CHECK_THROWS_AS(bipartite_double_cover(named_graph("bowtie"), true), precondition_error);
}

TEST_CASE("cover plus matching") {
  auto c6 = cover_plus_matching(cycle_graph(6), true);
  CHECK(c6.graph.order() == 12);
  CHECK(regular_degree(c6.graph) == 3);
  CHECK(is_bipartite(c6.graph));
  CHECK(verify_equivalence(c6).verdict == Equivalence::holds);

  // For a bipartite source the gadget is source □ K2, which always has a
  // matching-cut, so a cut-free source breaks the claimed equivalence.
  Graph k33 = named_graph("K33");
  auto inst = cover_plus_matching(k33, true);
  CHECK(inst.graph.order() == 12);
  CHECK(regular_degree(inst.graph) == 4);
  CHECK(are_isomorphic(inst.graph, cartesian_product(k33, clique_graph(2))));
  auto e = verify_equivalence(inst);
  CHECK(e.source_side == false);
  CHECK(e.gadget_side == true);
  CHECK(e.verdict == Equivalence::violated);
  CHECK(oracle::has_matching_cut(oracle::matrix(inst.graph)));

  CHECK_THROWS_AS(cover_plus_matching(k33), precondition_error);
  CHECK_NOTHROW(cover_plus_matching(named_graph("K44")));
  CHECK_THROWS_AS(cover_plus_matching(cycle_graph(5), true), precondition_error);
}

TEST_CASE("twin expansion") {
  auto k2 = twin_expand_then_K2(clique_graph(2), true);
  CHECK(k2.graph.order() == 8);
  CHECK(are_isomorphic(k2.graph, cartesian_product(path_graph(4), clique_graph(2))));
  REQUIRE(k2.threshold);
  CHECK(*k2.threshold == Ratio(3, 4));
  CHECK(decide(k2.graph, *k2.threshold).yes);
  CHECK(oracle::decide(oracle::matrix(k2.graph), {3, 4}));
  CHECK(verify_equivalence(k2).verdict == Equivalence::holds);
  for (Vertex v = 2; v < 4; ++v)
    for (Vertex x : fiber(k2.graph, FiberSide::left, v)) CHECK(k2.graph.degree(x) == 2);

  auto c6 = twin_expand_then_K2(cycle_graph(6), true);
  CHECK(c6.graph.order() == 24);
  CHECK(verify_equivalence(c6).verdict == Equivalence::holds);

  auto k34 = twin_expand_then_K2(named_graph("K34"));
  CHECK(*k34.threshold == Ratio(5, 6));
  CHECK(verify_equivalence(k34).verdict == Equivalence::holds);

  CHECK_THROWS_AS(twin_expand_then_K2(cycle_graph(5), true), precondition_error);
  CHECK_THROWS_AS(twin_expand_then_K2(cycle_graph(6)), precondition_error);
}

TEST_CASE("product with a fixed cut-free factor") {
  auto inst = product_with_fixed(cycle_graph(6), clique_graph(4), true);
  CHECK(inst.graph.order() == 24);
  REQUIRE(inst.threshold);
  CHECK(*inst.threshold == Ratio(5, 6));
  auto cut = find_matching_cut(cycle_graph(6));
  REQUIRE(cut.partition);
  Bipartition lifted = detail::lift_partition(inst.graph, *cut.partition, FiberSide::left);
  CHECK(quality_of(inst.graph, lifted) == Ratio(5, 6));
  CHECK(verify_equivalence(inst).verdict == Equivalence::holds);

  CHECK_NOTHROW(product_with_fixed(cycle_graph(6), clique_graph(3), true));
  CHECK_THROWS_AS(product_with_fixed(cycle_graph(6), cycle_graph(4), true), precondition_error);
  CHECK_THROWS_AS(product_with_fixed(cycle_graph(6), clique_graph(4)), precondition_error);
  CHECK_THROWS_AS(product_with_fixed(cycle_graph(5), clique_graph(4), true), precondition_error);
}

TEST_CASE("budget overruns are inconclusive") {
  auto inst = product_with_fixed(cycle_graph(6), clique_graph(4), true);
  auto e = verify_equivalence(inst, 3);
  CHECK(e.verdict == Equivalence::inconclusive);
}
