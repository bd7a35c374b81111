#include <doctest.h>

#include <random>

#include "degratio/named.hpp"
#include "degratio/partition.hpp"
#include "degratio/ratio.hpp"
#include "oracles.hpp"

using namespace degratio;

TEST_CASE("ratios are canonical") {
  CHECK(Ratio(2, 4) == Ratio(1, 2));
  CHECK(Ratio(3, -6) == Ratio(-1, 2));
  CHECK(Ratio(6, 4).den() == 2);
  CHECK(Ratio(0, 5) == Ratio(0));
  CHECK(Ratio(3, 7).str() == "3/7");
  CHECK(Ratio::parse("6/14") == Ratio(3, 7));
  CHECK(Ratio::parse("1") == Ratio(1));
  CHECK_THROWS_AS(Ratio(1, 0), parameter_error);
  CHECK_THROWS_AS(Ratio::parse("1/"), parameter_error);
  CHECK_THROWS_AS(Ratio::parse("a/b"), parameter_error);
  CHECK(Ratio(1, 3) + Ratio(1, 6) == Ratio(1, 2));
  CHECK(Ratio(1, 2) - Ratio(1, 3) == Ratio(1, 6));
}

TEST_CASE("ratio order agrees with cross-multiplication") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> num(-1000, 1000);
  std::uniform_int_distribution<long long> den(1, 1000);
  for (int i = 0; i < 10000; ++i) {
    long long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    Ratio x(a, b), y(c, d);
    CHECK((x < y) == (a * d < c * b));
    CHECK((x == y) == (a * d == c * b));
    oracle::Frac fx{a, b};
    CHECK(oracle::same(fx, x));
  }
}

TEST_CASE("bipartitions") {
  CHECK_THROWS_AS(Bipartition::parse("111"), parameter_error);
  CHECK_THROWS_AS(Bipartition::parse("123"), parameter_error);
  auto p = Bipartition::parse("1212");
  CHECK(p.members(1) == std::vector<Vertex>{0, 2});
  CHECK(p.str() == "1212");
  CHECK(Bipartition::from_first_side(4, std::vector<Vertex>{0, 2}) == p);
  CHECK(Bipartition::from_mask(4, 0b1010) == p);
  CHECK_THROWS_AS(require_compatible(cycle_graph(5), p), parameter_error);
}

TEST_CASE("vertex ratios") {
  Graph c3 = cycle_graph(3);
  CHECK(vertex_ratio(c3, Bipartition::parse("122"), 0) == Ratio(1, 3));
  Graph star = complete_bipartite_graph(1, 4);
  CHECK(vertex_ratio(star, Bipartition::parse("12222"), 0) == Ratio(1, 5));
  Graph k4 = clique_graph(4);
  auto half = Bipartition::parse("1122");
  for (Vertex v = 0; v < 4; ++v) CHECK(vertex_ratio(k4, half, v) == Ratio(1, 2));
}

TEST_CASE("partition quality") {
  // T3: s = 0, t = 1, v_i = 2, 3, 4
  Graph t3 = named_graph("T3");
  auto rep = partition_quality(t3, Bipartition::from_first_side(5, std::vector<Vertex>{0, 2, 3}));
  CHECK(rep.quality == Ratio(2, 5));
  CHECK(rep.per_vertex[static_cast<std::size_t>(rep.witness_vertex)] == rep.quality);

  Graph two = disjoint_union(cycle_graph(3), cycle_graph(3));
  CHECK(quality_of(two, Bipartition::parse("111222")) == Ratio(1));
  CHECK(quality_of(clique_graph(2), Bipartition::parse("12")) == Ratio(1, 2));
}

TEST_CASE("quality is the minimum and the witness is the first minimiser") {
  std::mt19937_64 rng(3);
  Graph g = named_graph("petersen");
  for (int i = 0; i < 200; ++i) {
    std::uint64_t mask = rng() & 0x3FF;
    if (mask == 0 || mask == 0x3FF) continue;
    auto p = Bipartition::from_mask(10, mask);
    auto rep = partition_quality(g, p);
    CHECK(oracle::same(oracle::quality(oracle::matrix(g), mask), rep.quality));
    for (Vertex v = 0; v < 10; ++v) {
      CHECK(rep.quality <= vertex_ratio(g, p, v));
      if (v < rep.witness_vertex) CHECK(vertex_ratio(g, p, v) > rep.quality);
    }
  }
}

TEST_CASE("moving another vertex to v's side never lowers v's ratio") {
  Graph g = named_graph("wagner");
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    std::uint64_t mask = rng() & 0xFF;
    if (mask == 0 || mask == 0xFF) continue;
    auto before = Bipartition::from_mask(8, mask);
    for (Vertex v = 0; v < 8; ++v)
      for (Vertex u = 0; u < 8; ++u) {
        if (u == v || before.side(u) == before.side(v)) continue;
        std::uint64_t moved = mask ^ (std::uint64_t{1} << u);
        if (moved == 0 || moved == 0xFF) continue;
        CHECK(vertex_ratio(g, Bipartition::from_mask(8, moved), v) >= vertex_ratio(g, before, v));
      }
  }
}

TEST_CASE("crossing edges and matchings") {
  CHECK(crossing_edges(clique_graph(2), Bipartition::parse("12")) == std::vector<Edge>{{0, 1}});
  Graph c4 = cycle_graph(4);
  CHECK(crossing_edges(c4, Bipartition::parse("1212")).size() == 4);
  auto adjacent = crossing_edges(c4, Bipartition::parse("1122"));
  CHECK(adjacent.size() == 2);
  CHECK(is_matching(c4, adjacent));
  CHECK(is_matching(c4, std::vector<Edge>{}));
  CHECK_FALSE(is_matching(c4, std::vector<Edge>{{0, 1}, {1, 2}}));
  CHECK(is_matching(c4, std::vector<Edge>{{0, 1}, {2, 3}}));
}
