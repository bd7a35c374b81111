// One line per acceptance criterion. Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "degratio/degratio.hpp"
#include "oracles.hpp"

using namespace degratio;
using Clock = std::chrono::steady_clock;

namespace {

// Wall-clock limits, seconds.
constexpr double closed_values_limit = 10.0;
constexpr double product_instance_limit = 300.0;
constexpr double matching_cut_limit = 30.0;
constexpr double default_limit = 300.0;

constexpr int sandwich_samples = 200;
constexpr int characterization_samples = 300;
constexpr std::uint64_t seed = 1;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool ok = true;
  std::string note;

  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

std::vector<Graph> connected(std::vector<Graph> gs) {
  std::erase_if(gs, [](const Graph& g) { return !is_connected(g); });
  return gs;
}

std::string label(const Graph& g) { return g.name().empty() ? graph_hash(g) : g.name(); }

Outcome closed_values() {
  Outcome o;
  struct Case {
    const char* id;
    Ratio q;
  };
  const std::vector<Case> small{{"C3", {1, 3}},       {"K5", {2, 5}}, {"K5e", {2, 5}}, {"T3", {2, 5}},
                                {"coK2claw", {2, 5}}, {"K4", {1, 2}}, {"K6", {1, 2}},  {"T2", {1, 2}},
                                {"T4", {1, 2}},       {"K7", {3, 7}}, {"prism", {3, 4}}, {"petersen", {3, 4}}};
  auto t0 = Clock::now();
  for (const auto& c : small) {
    Graph g = named_graph(c.id);
    Ratio q = solve_q(g).q;
    o.expect(q == c.q, std::string(c.id) + " gave " + q.str());
    o.expect(oracle::same(oracle::q(oracle::matrix(g)), c.q), std::string(c.id) + " disagrees with brute force");
  }
  double small_s = since(t0);
  o.expect(small_s < closed_values_limit, "small instances took " + std::to_string(small_s) + " s");
  std::string times;
  for (const char* id : {"prod:K4,K4", "prod:K4,K33"}) {
    auto t1 = Clock::now();
    Ratio q = solve_q(named_graph(id), {default_budget, SolveMethod::pruned_search, 1}).q;
    double s = since(t1);
    o.expect(q == Ratio(5, 7), std::string(id) + " gave " + q.str());
    o.expect(s < product_instance_limit, std::string(id) + " took " + std::to_string(s) + " s");
    times += " " + std::string(id) + "=" + std::to_string(s) + "s";
  }
  if (o.ok) o.note = "12 small graphs in " + std::to_string(small_s) + " s;" + times;
  return o;
}

Outcome matching_cut_truth() {
  Outcome o;
  auto t0 = Clock::now();
  o.expect(!find_matching_cut(named_graph("K3")).has_cut(), "K3 has a cut");
  int cubic = 0;
  std::vector<Graph> pool = connected(catalog_graphs(10));
  std::mt19937_64 rng(seed);
  for (int n = 4; n <= 10; n += 2)
    for (int i = 0; i < 5; ++i) pool.push_back(random_cubic_graph(n, rng));
  for (const Graph& g : pool) {
    if (regular_degree(g) != 3) continue;
    ++cubic;
    bool special = are_isomorphic(g, named_graph("K33")) || are_isomorphic(g, clique_graph(4));
    auto c = find_matching_cut(g, {default_budget, false});
    o.expect(certificate_is_consistent(g, c), label(g) + ": inconsistent certificate");
    o.expect(c.has_cut() == oracle::has_matching_cut(oracle::matrix(g)), label(g) + ": disagrees with brute force");
    if (are_isomorphic(g, named_graph("K33"))) o.expect(!c.has_cut(), "K3,3 has a cut");
    else if (!special) o.expect(c.has_cut(), label(g) + " has no cut");
  }
  o.expect(!find_matching_cut(clique_graph(4)).has_cut(), "K4 has a cut");
  double s = since(t0);
  o.expect(s < matching_cut_limit, "took " + std::to_string(s) + " s");
  if (o.ok) o.note = std::to_string(cubic) + " cubic graphs; K3, K3,3, K4 cut-free; " + std::to_string(s) + " s";
  return o;
}

Outcome product_lemma() {
  Outcome o;
  int pairs = 0;
  for (const char* a : {"K2", "K3", "C4", "K4", "K33", "prism"})
    for (const char* b : {"K2", "K3", "C4", "K4", "K33", "prism"}) {
      Graph g = named_graph(a);
      Graph h = named_graph(b);
      if (g.order() * h.order() > 24) continue;
      ++pairs;
      Graph p = cartesian_product(g, h);
      auto rule = product_matching_cut(g, h);
      bool search = find_matching_cut(p, {default_budget, false}).has_cut();
      o.expect(rule.has_cut == search, std::string(a) + " x " + b + ": rule and search disagree");
      if (rule.lifted) o.expect(is_matching(p, crossing_edges(p, *rule.lifted)), "lifted cut is not a matching");
      if (p.order() <= 16)
        o.expect(search == oracle::has_matching_cut(oracle::product(oracle::matrix(g), oracle::matrix(h))),
                 std::string(a) + " x " + b + ": disagrees with brute force");
    }
  if (o.ok) o.note = std::to_string(pairs) + " ordered pairs";
  return o;
}

Outcome bound_sandwich() {
  Outcome o;
  auto pool = connected(catalog_graphs());
  for (Graph& g : sample_connected_graphs(sandwich_samples, 2, 8, seed)) pool.push_back(std::move(g));
  for (const Graph& g : pool) {
    Ratio q = solve_q(g).q;
    ClassBound lb = class_lower_bound(g);
    o.expect(lb.strict ? lb.value < q : lb.value <= q, label(g) + ": lower bound " + lb.value.str() + " vs " + q.str());
    o.expect(q <= edge_upper_bound(g), label(g) + ": above edge bound");
    o.expect(q < Ratio(1), label(g) + ": q = 1");
    if (!characterize_third(g)) o.expect(q >= Ratio(2, 5), label(g) + ": q < 2/5");
    if (g.order() <= 10) o.expect(oracle::same(oracle::q(oracle::matrix(g)), q), label(g) + ": disagrees with brute force");
  }
  if (o.ok) o.note = std::to_string(pool.size()) + " graphs (" + std::to_string(sandwich_samples) + " sampled, seed 1)";
  return o;
}

Outcome characterizations() {
  Outcome o;
  auto pool = connected(catalog_graphs(9));
  for (Graph& g : sample_connected_graphs(characterization_samples, 3, 9, seed)) pool.push_back(std::move(g));
  int checked = 0;
  for (const Graph& g : pool) {
    if (g.max_degree() > 6) continue;
    ++checked;
    oracle::Frac q = oracle::q(oracle::matrix(g));
    bool c3 = characterize_third(g);
    o.expect(oracle::same(q, Ratio(1, 3)) == c3, label(g) + ": q = 1/3 mismatch");
    if (c3) continue;
    bool member = characterize_two_fifths(g, true);
    o.expect(oracle::same(q, Ratio(2, 5)) == member, label(g) + ": q = 2/5 mismatch");
    if (!member) o.expect(!oracle::less(q, {3, 7}), label(g) + ": below 3/7");
  }
  if (o.ok) o.note = std::to_string(checked) + " graphs with max degree <= 6";
  return o;
}

Outcome formulas() {
  Outcome o;
  int checked = 0;
  auto check = [&](const Graph& g, const FormulaVerdict& v) {
    ++checked;
    Ratio q = solve_q(g).q;
    o.expect(q == v.value, label(g) + ": " + v.rule + " gives " + v.value.str() + ", solver " + q.str());
    o.expect(v.witness && quality_of(g, *v.witness) == v.value, label(g) + ": witness misses the value");
  };
  for (const Graph& g : connected(catalog_graphs(12)))
    if (is_tree(g)) check(g, tree_q(g));
  check(Graph(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}}, "spider"), tree_q(Graph(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}})));
  for (int k = 1; k <= 6; ++k) check(k_triangle_graph(k), ktriangle_q(k));
  for (int n = 2; n <= 9; ++n) check(clique_graph(n), clique_q(n));
  std::vector<Graph> cubic;
  for (const Graph& g : connected(catalog_graphs(10)))
    if (regular_degree(g) == 3) cubic.push_back(g);
  std::mt19937_64 rng(seed);
  for (int n = 4; n <= 10; n += 2) cubic.push_back(random_cubic_graph(n, rng));
  for (const Graph& g : cubic) check(g, cubic_q(g));
  for (const char* id : {"K5", "prod:K4,K2", "K44"}) check(named_graph(id), four_regular_q(named_graph(id)));
  for (const char* a : {"C3", "C4", "C5", "K4", "K33"})
    for (const char* b : {"K2", "P3", "P4", "claw"}) {
      Graph g = named_graph(a);
      Graph h = named_graph(b);
      if (g.order() * h.order() > 16) continue;
      check(cartesian_product(g, h), product_kreg_tree_q(g, h));
    }
  if (o.ok) o.note = std::to_string(checked) + " formula instances";
  return o;
}

Outcome constructive() {
  Outcome o;
  int fallbacks = 0;
  auto prev = good_pair_log();
  good_pair_log() = [&](const std::string&) { ++fallbacks; };

  auto pool = connected(catalog_graphs(22));
  for (Graph& g : sample_connected_graphs(200, 3, 12, seed)) pool.push_back(std::move(g));
  std::mt19937_64 rng(seed);
  for (int n = 12; n <= 22; n += 2) pool.push_back(random_cubic_graph(n, rng));
  int witnesses = 0;
  int pairs = 0;
  for (const Graph& g : pool) {
    auto w = lower_bound_witness(g);
    ++witnesses;
    DegreeDemands f{std::vector<int>(static_cast<std::size_t>(g.order())), std::vector<int>(static_cast<std::size_t>(g.order()))};
    for (Vertex v = 0; v < g.order(); ++v) {
      int d = g.degree(v);
      int need = w.regime == DemandRegime::ma ? (d + 1) / 2 : w.regime == DemandRegime::hou ? d / 2 : (d - 1) / 2;
      f.f1[static_cast<std::size_t>(v)] = f.f2[static_cast<std::size_t>(v)] = need;
    }
    o.expect(demands_met(g, f, w.partition), label(g) + ": demands unmet");
    o.expect(w.quality >= w.bound, label(g) + ": below " + w.rule);

    if (g.max_degree() > 6 || characterize_third(g) || in_two_fifths_family(g)) continue;
    if (!smallest_triangle(g) || connectivity_partition(g)) continue;
    ++pairs;
    auto gp = find_good_pair(g);
    o.expect(!gp.fallback, label(g) + ": fallback fired");
    Bipartition p = extend_good_pair(g, gp.pair);
    o.expect(quality_of(g, p) >= Ratio(3, 7), label(g) + ": extension below 3/7");
  }
  good_pair_log() = prev;
  o.expect(fallbacks == 0, std::to_string(fallbacks) + " fallbacks");
  if (o.ok)
    o.note = std::to_string(witnesses) + " demand witnesses, " + std::to_string(pairs) + " good-pair instances, 0 fallbacks";
  return o;
}

Outcome reductions() {
  Outcome o;
  std::vector<std::pair<std::string, GadgetInstance>> cases;
  cases.emplace_back("double_cover(K5)", bipartite_double_cover(clique_graph(5)));
  cases.emplace_back("cover_plus_matching(K3,3)", cover_plus_matching(named_graph("K33"), true));
  cases.emplace_back("twin_expand_K2(K2)", twin_expand_then_K2(clique_graph(2), true));
  cases.emplace_back("twin_expand_K2(C6)", twin_expand_then_K2(cycle_graph(6), true));
  cases.emplace_back("product_fixed_H(C6, K4)", product_with_fixed(cycle_graph(6), clique_graph(4), true));
  for (const auto& [name, inst] : cases) {
    auto e = verify_equivalence(inst);
    o.expect(e.verdict == Equivalence::holds, name + " " + to_string(e.verdict) + ": " + e.detail);
    if (inst.graph.order() <= 16 && !inst.threshold)
      o.expect(oracle::has_matching_cut(oracle::matrix(inst.graph)) == e.gadget_side, name + ": gadget disagrees with brute force");
  }
  int regular = 0;
  for (const Graph& g : connected(catalog_graphs())) {
    auto k = regular_degree(g);
    if (!k) continue;
    ++regular;
    o.expect(decide(g, Ratio(*k, *k + 1)).yes == find_matching_cut(g).has_cut(), label(g) + ": decide and cut disagree");
  }
  if (o.ok) o.note = "5 gadgets, " + std::to_string(regular) + " regular catalog graphs";
  return o;
}

Outcome product_strictness() {
  Outcome o;
  int products = 0;
  std::vector<Graph> factors;
  for (const char* id : {"K2", "K3", "P3", "C4", "claw", "K4", "C5", "diamond", "K33", "prism"}) factors.push_back(named_graph(id));
  std::vector<Graph> pool;
  for (const Graph& g : factors)
    for (const Graph& h : factors)
      if (g.order() * h.order() <= 24) pool.push_back(cartesian_product(g, h));
  for (const Graph& g : catalog_graphs())
    if (g.product()) pool.push_back(g);
  for (const Graph& p : pool) {
    ++products;
    Ratio q = solve_q(p).q;
    Ratio m = std::max(solve_q(p.product()->left).q, solve_q(p.product()->right).q);
    o.expect(q > m, label(p) + ": q = " + q.str() + " not above " + m.str());
    o.expect(q > Ratio(1, 2), label(p) + ": q = " + q.str());
  }
  if (o.ok) o.note = std::to_string(products) + " products";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double limit;
  };
  const std::vector<Criterion> criteria{
      {"closed values", closed_values, 2 * product_instance_limit + closed_values_limit},
      {"matching-cut ground truth", matching_cut_truth, matching_cut_limit},
      {"product lemma", product_lemma, default_limit},
      {"bound sandwich", bound_sandwich, default_limit},
      {"characterizations", characterizations, default_limit},
      {"formula vs solver", formulas, default_limit},
      {"constructive guarantees", constructive, default_limit},
      {"reduction equivalences", reductions, default_limit},
      {"product strictness", product_strictness, default_limit},
  };
  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double s = since(t0);
    if (s > c.limit) o.fail("exceeded " + std::to_string(c.limit) + " s");
    if (!o.ok) ++failures;
    std::printf("%s %d %s (%.2f s): %s\n", o.ok ? "PASS" : "FAIL", index, c.name, s, o.note.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}
