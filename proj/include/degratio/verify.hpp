#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "degratio/catalog.hpp"
#include "degratio/closed_forms.hpp"
#include "degratio/constructive.hpp"
#include "degratio/reductions.hpp"
#include "degratio/solver.hpp"

namespace degratio {

struct PropertyResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::size_t inconclusive = 0;
  std::optional<Graph> counterexample;  // first failing graph
  std::string detail;

  bool passed() const noexcept { return failed == 0; }

  void record(bool ok, const Graph& g, const std::string& what = {}) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) {
      counterexample = g;
      detail = (g.name().empty() ? std::string("unnamed graph") : g.name()) + (what.empty() ? "" : ": " + what);
    }
  }
};

struct SuiteReport {
  std::string suite;
  std::vector<PropertyResult> properties;

  bool passed() const {
    for (const auto& p : properties)
      if (!p.passed()) return false;
    return true;
  }
};

struct SuiteOptions {
  int max_n = 8;
  std::uint64_t seed = 1;
  int samples = 200;
  std::uint64_t budget = default_budget;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"bounds", "closed-forms", "matching-cut", "products", "good-pair",
                                              "reductions"};
  return names;
}

namespace detail {

inline std::vector<PropertyResult> properties(std::initializer_list<const char*> names) {
  std::vector<PropertyResult> out;
  for (const char* n : names) out.push_back(PropertyResult{n, 0, 0, 0, std::nullopt, {}});
  return out;
}

inline std::vector<Graph> connected_pool(const SuiteOptions& o) {
  std::vector<Graph> out;
  for (Graph& g : catalog_graphs(o.max_n))
    if (is_connected(g)) out.push_back(std::move(g));
  if (o.max_n >= 2)
    for (Graph& g : sample_connected_graphs(o.samples, 2, o.max_n, o.seed)) out.push_back(std::move(g));
  return out;
}

/// Runs `body` and books a budget overrun as inconclusive.
template <class Body>
void guarded(PropertyResult& p, Body&& body) {
  try {
    body();
  } catch (const budget_exceeded&) {
    ++p.inconclusive;
  }
}

inline SuiteReport suite_bounds(const SuiteOptions& o) {
  SuiteReport r{"bounds", properties({"lower <= q <= upper", "q < 1", "q >= 2/5 unless C3", "q = 1/3 iff C3"})};
  for (const Graph& g : connected_pool(o))
    guarded(r.properties[0], [&] {
      Ratio q = solve_q(g, {o.budget}).q;
      ClassBound lb = class_lower_bound(g);
      bool low = lb.strict ? lb.value < q : lb.value <= q;
      r.properties[0].record(low && q <= edge_upper_bound(g), g,
                             "q = " + q.str() + ", lower " + lb.value.str() + ", upper " + edge_upper_bound(g).str());
      r.properties[1].record(q < Ratio(1), g, "q = " + q.str());
      bool c3 = characterize_third(g);
      if (!c3) r.properties[2].record(q >= Ratio(2, 5), g, "q = " + q.str());
      r.properties[3].record((q == Ratio(1, 3)) == c3, g, "q = " + q.str());
    });
  return r;
}

inline SuiteReport suite_closed_forms(const SuiteOptions& o) {
  SuiteReport r{"closed-forms", properties({"formula equals solver", "witness reaches formula"})};
  auto check = [&](const Graph& g, const FormulaVerdict& v) {
    guarded(r.properties[0], [&] {
      Ratio q = solve_q(g, {o.budget}).q;
      r.properties[0].record(q == v.value, g, v.rule + " gives " + v.value.str() + ", solver " + q.str());
    });
    r.properties[1].record(v.witness && quality_of(g, *v.witness) == v.value, g, v.rule);
  };
  for (int k = 1; k <= 6; ++k) check(k_triangle_graph(k), ktriangle_q(k));
  for (int n = 2; n <= 9; ++n) check(clique_graph(n), clique_q(n));
  for (const Graph& g : connected_pool(o)) {
    if (is_tree(g)) check(g, tree_q(g));
    auto k = regular_degree(g);
    if (k == 3 && g.order() <= 10) check(g, cubic_q(g, o.budget));
    if (k == 4 && g.order() <= 12) check(g, four_regular_q(g, o.budget));
  }
  for (const char* id : {"K5", "prod:K4,K2", "K44"}) check(named_graph(id), four_regular_q(named_graph(id), o.budget));
  for (const char* gid : {"C3", "C4", "K4", "K33"})
    for (const char* hid : {"K2", "P3", "P4", "claw"}) {
      Graph g = named_graph(gid);
      Graph h = named_graph(hid);
      if (g.order() * h.order() > 16) continue;
      check(cartesian_product(g, h), product_kreg_tree_q(g, h));
    }
  for (const char* gid : {"K4", "K33", "prism"})
    for (const char* hid : {"K4", "K33"}) {
      Graph g = named_graph(gid);
      Graph h = named_graph(hid);
      auto v = product_cubic_q(g, h, o.budget);
      check(cartesian_product(g, h), v);
    }
  return r;
}

inline SuiteReport suite_matching_cut(const SuiteOptions& o) {
  SuiteReport r{"matching-cut", properties({"certificate consistent", "k-regular: decide(k/(k+1)) iff cut", "cubic: no cut only for K4, K3,3"})};
  std::vector<Graph> pool = connected_pool(o);
  std::mt19937_64 rng(o.seed);
  for (int i = 0; i < 20; ++i) pool.push_back(random_cubic_graph(4 + 2 * (i % 4), rng));
  for (const Graph& g : pool)
    guarded(r.properties[0], [&] {
      auto c = find_matching_cut(g, {o.budget});
      r.properties[0].record(certificate_is_consistent(g, c), g);
      if (auto k = regular_degree(g)) {
        bool yes = decide(g, Ratio(*k, *k + 1), o.budget).yes;
        r.properties[1].record(yes == c.has_cut(), g);
        if (*k == 3) {
          bool special = (g.order() == 4) || (g.order() == 6 && is_bipartite(g));
          r.properties[2].record(c.has_cut() != special, g);
        }
      }
    });
  return r;
}

inline SuiteReport suite_products(const SuiteOptions& o) {
  SuiteReport r{"products", properties({"factor rule equals exhaustive search", "q(G□H) > max(q(G), q(H))", "q(G□H) > 1/2", "fibers induce the factors"})};
  std::vector<Graph> factors;
  for (const char* id : {"K2", "K3", "C4", "K4", "K33", "prism", "P3", "claw", "C5"}) factors.push_back(named_graph(id));
  for (const Graph& g : factors)
    for (const Graph& h : factors) {
      if (g.order() * h.order() > o.max_n) continue;
      Graph p = cartesian_product(g, h);
      guarded(r.properties[0], [&] {
        bool rule = product_matching_cut(g, h, {o.budget}).has_cut;
        bool search = find_matching_cut(p, {o.budget, false}).has_cut();
        r.properties[0].record(rule == search, p);
      });
      guarded(r.properties[1], [&] {
        Ratio q = solve_q(p, {o.budget}).q;
        Ratio m = std::max(solve_q(g, {o.budget}).q, solve_q(h, {o.budget}).q);
        r.properties[1].record(q > m, p, "q = " + q.str() + ", factors " + m.str());
        r.properties[2].record(q > Ratio(1, 2), p, "q = " + q.str());
      });
      bool fibers = true;
      for (Vertex a = 0; a < g.order(); ++a) {
        auto f = fiber(p, FiberSide::left, a);
        fibers = fibers && are_isomorphic(induced_subgraph(p, f), h);
      }
      for (Vertex b = 0; b < h.order(); ++b) {
        auto f = fiber(p, FiberSide::right, b);
        fibers = fibers && are_isomorphic(induced_subgraph(p, f), g);
      }
      r.properties[3].record(fibers, p);
    }
  return r;
}

inline SuiteReport suite_good_pair(const SuiteOptions& o) {
  SuiteReport r{"good-pair", properties({"3/7 witness", "solver confirms q >= 3/7", "no fallback"})};
  for (const Graph& g : connected_pool(o)) {
    if (g.max_degree() > 6 || characterize_third(g) || in_two_fifths_family(g)) continue;
    guarded(r.properties[0], [&] {
      auto w = three_sevenths_witness(g, o.budget);
      r.properties[0].record(w.quality >= Ratio(3, 7) && quality_of(g, w.partition) == w.quality, g, w.rule);
      r.properties[2].record(!w.fallback, g);
      Ratio q = solve_q(g, {o.budget}).q;
      r.properties[1].record(q >= Ratio(3, 7), g, "q = " + q.str());
    });
  }
  return r;
}

inline SuiteReport suite_reductions(const SuiteOptions& o) {
  SuiteReport r{"reductions", properties({"equivalence", "gadget shape", "regular and (3,4)-biregular: decide(δ/(δ+1)) iff cut",
                                            "cover plus matching is source □ K2"})};
  auto run = [&](const GadgetInstance& inst) {
    auto e = verify_equivalence(inst, o.budget);
    if (e.verdict == Equivalence::inconclusive) ++r.properties[0].inconclusive;
    else r.properties[0].record(e.verdict == Equivalence::holds, inst.graph, e.detail);
  };
  auto shape = [&](const GadgetInstance& inst, bool ok) { r.properties[1].record(ok, inst.graph, to_string(inst.construction)); };

  for (const char* id : {"K5", "C5", "C4", "petersen", "prod:K3,K3", "prod:C4,C4"}) {
    Graph g = named_graph(id);
    auto inst = bipartite_double_cover(g, true);
    shape(inst, is_bipartite(inst.graph) && regular_degree(inst.graph) == regular_degree(g) &&
                    inst.graph.size() == 2 * g.size());
    run(inst);
  }
  for (const char* id : {"C6", "C4", "K33", "K44", "prod:C4,C4"}) {
    Graph g = named_graph(id);
    auto inst = cover_plus_matching(g, true);
    shape(inst, is_bipartite(inst.graph) && regular_degree(inst.graph) == *regular_degree(g) + 1);
    // For bipartite g the gadget is g □ K2, which always has a matching-cut.
    r.properties[3].record(are_isomorphic(inst.graph, cartesian_product(g, clique_graph(2))), inst.graph);
    if (find_matching_cut(g, {o.budget}).has_cut()) run(inst);
  }
  for (const char* id : {"K2", "C6", "C4", "P3"}) {
    Graph g = named_graph(id);
    auto inst = twin_expand_then_K2(g, true);
    bool twins = true;
    for (Vertex v = 0; v < g.order(); ++v)
      for (Vertex x : fiber(inst.graph, FiberSide::left, g.order() + v)) twins = twins && inst.graph.degree(x) == 2;
    shape(inst, twins);
    run(inst);
  }
  for (const char* id : {"C6", "C4", "K33"})
    for (const char* hid : {"K4", "K3"}) {
      Graph g = named_graph(id);
      Graph h = named_graph(hid);
      if (g.order() * h.order() > 24) continue;
      auto inst = product_with_fixed(g, h, true, o.budget);
      shape(inst, regular_degree(inst.graph) == *regular_degree(g) + *regular_degree(h));
      run(inst);
    }
  std::vector<Graph> regular;
  for (Graph& g : catalog_graphs(o.max_n > 12 ? o.max_n : 12))
    if (is_connected(g) && regular_degree(g)) regular.push_back(std::move(g));
  regular.push_back(named_graph("K34"));
  for (const Graph& g : regular)
    guarded(r.properties[2], [&] {
      bool cut = find_matching_cut(g, {o.budget}).has_cut();
      int k = g.min_degree();
      r.properties[2].record(decide(g, Ratio(k, k + 1), o.budget).yes == cut, g);
    });
  return r;
}

}  // namespace detail

/// Runs one named property suite over the catalog and seeded random graphs.
inline SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {}) {
  if (name == "bounds") return detail::suite_bounds(options);
  if (name == "closed-forms") return detail::suite_closed_forms(options);
  if (name == "matching-cut") return detail::suite_matching_cut(options);
  if (name == "products") return detail::suite_products(options);
  if (name == "good-pair") return detail::suite_good_pair(options);
  if (name == "reductions") return detail::suite_reductions(options);
  throw parameter_error("unknown suite '" + name + "'");
}

}  // namespace degratio
