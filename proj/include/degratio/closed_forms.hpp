#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "degratio/connectivity.hpp"
#include "degratio/named.hpp"
#include "degratio/partition.hpp"
#include "degratio/patterns.hpp"
#include "degratio/product.hpp"
#include "degratio/solver.hpp"

namespace degratio {

/// Where a verdict's witness partition came from.
enum class WitnessSource { construction, matching_cut, solver };

inline const char* to_string(WitnessSource s) {
  switch (s) {
    case WitnessSource::construction: return "construction";
    case WitnessSource::matching_cut: return "matching_cut";
    case WitnessSource::solver: return "solver";
  }
  return "?";
}

struct FormulaVerdict {
  Ratio value;
  std::string rule;
  std::optional<Bipartition> witness;
  WitnessSource source = WitnessSource::construction;
};

namespace detail {

inline FormulaVerdict verdict(const Graph& g, Ratio value, std::string rule, Bipartition witness,
                              WitnessSource source = WitnessSource::construction) {
  if (quality_of(g, witness) != value)
    throw internal_error(rule + ": witness quality " + quality_of(g, witness).str() + " differs from " + value.str());
  return {value, std::move(rule), std::move(witness), source};
}

inline bool is_k33(const Graph& g) { return g.order() == 6 && regular_degree(g) == 3 && is_bipartite(g); }
inline bool is_k4(const Graph& g) { return g.order() == 4 && regular_degree(g) == 3; }

}  // namespace detail

/// K5, K5 - e, T3 and the complement of K2 ∪ claw: the graphs with Δ <= 6 and q = 2/5.
inline std::vector<Graph> two_fifths_family() {
  return {named_graph("K5"), named_graph("K5e"), k_triangle_graph(3), build_named(PatternId::co_k2_claw())};
}

inline bool is_clique(const Graph& g) { return regular_degree(g) == g.order() - 1; }

inline bool is_cycle(const Graph& g) { return g.order() >= 3 && regular_degree(g) == 2 && is_connected(g); }

/// max over edges uv of min(d(u)/d[u], d(v)/d[v]).
inline Ratio edge_upper_bound(const Graph& g) {
  if (!is_connected(g)) throw precondition_error("edge bound needs a connected graph");
  return detail::edge_bound(g);
}

inline FormulaVerdict tree_q(const Graph& t) {
  if (!is_tree(t)) throw precondition_error("tree formula needs a tree");
  std::optional<Edge> best;
  Ratio value(0);
  for (const Edge& e : t.edges()) {
    Ratio r = std::min(Ratio(t.degree(e.u), t.closed_degree(e.u)), Ratio(t.degree(e.v), t.closed_degree(e.v)));
    if (!best || r > value) {
      best = e;
      value = r;
    }
  }
  auto halves = split_at_bridge(t, *best);
  return detail::verdict(t, value, "tree", Bipartition::from_first_side(t.order(), halves.first));
}

/// q(T_k) = (floor(k/2) + 1) / (k + 2), on the labelling of k_triangle_graph.
inline FormulaVerdict ktriangle_q(int k) {
  if (k < 1) throw parameter_error("k-triangle needs k >= 1");
  Graph g = k_triangle_graph(k);
  std::vector<Vertex> first{0};
  for (int i = 1; i <= k / 2; ++i) first.push_back(i + 1);
  return detail::verdict(g, Ratio(k / 2 + 1, k + 2), "ktriangle", Bipartition::from_first_side(g.order(), first));
}

/// q(K_2p) = 1/2 and q(K_2p+1) = p / (2p + 1), from a near balanced split.
inline FormulaVerdict clique_q(int n) {
  if (n < 2) throw parameter_error("clique formula needs n >= 2");
  Graph g = clique_graph(n);
  std::vector<Vertex> first;
  for (Vertex v = 0; v < n / 2; ++v) first.push_back(v);
  Ratio value = n % 2 == 0 ? Ratio(1, 2) : Ratio(n / 2, n);
  return detail::verdict(g, value, "clique", Bipartition::from_first_side(n, first));
}

inline FormulaVerdict cubic_q(const Graph& g, std::uint64_t budget = default_budget) {
  if (regular_degree(g) != 3 || !is_connected(g)) throw precondition_error("cubic formula needs a connected cubic graph");
  if (detail::is_k4(g)) {
    auto v = clique_q(4);
    return detail::verdict(g, v.value, "cubic", *v.witness);
  }
  if (detail::is_k33(g)) {
    auto r = solve_q(g, {budget});
    return detail::verdict(g, r.q, "cubic", r.optimal_partition, WitnessSource::solver);
  }
  auto cut = find_matching_cut(g, {budget});
  if (!cut.has_cut()) throw internal_error("cubic graph other than K4 and K3,3 without matching-cut");
  return detail::verdict(g, Ratio(3, 4), "cubic", *cut.partition, WitnessSource::matching_cut);
}

/// K5 gives 2/5; otherwise 4/5 with a matching-cut and 3/5 without one. The 3/5
/// witness comes from the exact solver.
inline FormulaVerdict four_regular_q(const Graph& g, std::uint64_t budget = default_budget) {
  if (regular_degree(g) != 4 || !is_connected(g))
    throw precondition_error("4-regular formula needs a connected 4-regular graph");
  if (g.order() == 5) {
    auto v = clique_q(5);
    return detail::verdict(g, v.value, "4reg", *v.witness);
  }
  auto cut = find_matching_cut(g, {budget});
  if (cut.has_cut()) return detail::verdict(g, Ratio(4, 5), "4reg", *cut.partition, WitnessSource::matching_cut);
  auto r = solve_q(g, {budget});
  if (r.q != Ratio(3, 5)) throw internal_error("4-regular graph without matching-cut has q = " + r.q.str());
  return detail::verdict(g, r.q, "4reg", r.optimal_partition, WitnessSource::solver);
}

inline bool characterize_third(const Graph& g) { return are_isomorphic(g, cycle_graph(3)); }

inline bool in_two_fifths_family(const Graph& g) {
  for (const Graph& f : two_fifths_family())
    if (are_isomorphic(g, f)) return true;
  return false;
}

/// q(G) = 2/5 exactly on the family, for Δ(G) <= 6. With `cross_check` the
/// exact solver must agree: 2/5 on members, at least 3/7 on other connected
/// graphs except C3.
inline bool characterize_two_fifths(const Graph& g, bool cross_check = false, std::uint64_t budget = default_budget) {
  if (g.max_degree() > 6) throw precondition_error("the 2/5 characterization is limited to maximum degree 6");
  bool member = in_two_fifths_family(g);
  if (cross_check && is_connected(g) && !characterize_third(g)) {
    Ratio q = solve_q(g, {budget}).q;
    if (member ? q != Ratio(2, 5) : q < Ratio(3, 7))
      throw internal_error("2/5 characterization contradicted: q = " + q.str());
  }
  return member;
}

/// G connected k-regular, H a tree: the best tree edge uv gives
/// min((d(u)+k)/(d[u]+k), (d(v)+k)/(d[v]+k)), realised by whole G-fibers.
inline FormulaVerdict product_kreg_tree_q(const Graph& g, const Graph& h) {
  auto k = regular_degree(g);
  if (!k || !is_connected(g)) throw precondition_error("left factor must be connected and regular");
  if (!is_tree(h)) throw precondition_error("right factor must be a tree");
  std::optional<Edge> best;
  Ratio value(0);
  for (const Edge& e : h.edges()) {
    Ratio r = std::min(Ratio(h.degree(e.u) + *k, h.closed_degree(e.u) + *k),
                       Ratio(h.degree(e.v) + *k, h.closed_degree(e.v) + *k));
    if (!best || r > value) {
      best = e;
      value = r;
    }
  }
  Graph p = cartesian_product(g, h);
  auto halves = split_at_bridge(h, *best);
  std::vector<Vertex> first;
  for (Vertex w : halves.first)
    for (Vertex v : fiber(p, FiberSide::right, w)) first.push_back(v);
  return detail::verdict(p, value, "prodkregtree", Bipartition::from_first_side(p.order(), first));
}

/// Both factors connected cubic: 5/7 when both are K4 or K3,3, else 6/7.
inline FormulaVerdict product_cubic_q(const Graph& g, const Graph& h, std::uint64_t budget = default_budget) {
  for (const Graph* f : {&g, &h})
    if (regular_degree(*f) != 3 || !is_connected(*f)) throw precondition_error("factors must be connected cubic graphs");
  Graph p = cartesian_product(g, h);
  bool g_special = detail::is_k4(g) || detail::is_k33(g);
  bool h_special = detail::is_k4(h) || detail::is_k33(h);
  if (g_special && h_special) {
    Edge ab = g.edges().front();
    std::vector<Vertex> first = fiber(p, FiberSide::left, ab.u);
    for (Vertex v : fiber(p, FiberSide::left, ab.v)) first.push_back(v);
    return detail::verdict(p, Ratio(5, 7), "prodcub", Bipartition::from_first_side(p.order(), first));
  }
  auto factors = product_matching_cut(g, h, {budget});
  if (!factors.has_cut) throw internal_error("cubic factor outside K4 and K3,3 without matching-cut");
  return detail::verdict(p, Ratio(6, 7), "prodcub", *factors.lifted, WitnessSource::matching_cut);
}

struct BoundRule {
  std::string rule;
  Ratio value;
  bool strict = false;  // q(G) > value rather than >=
};

struct ClassBound {
  Ratio value;
  bool strict = false;
  std::vector<BoundRule> rules;  // every applicable rule
};

namespace detail {

/// Minimum over v of (ceil(d/2) + 1) / (d + 1).
inline Ratio half_ceiling_bound(const Graph& g) {
  Ratio best(1);
  for (Vertex v = 0; v < g.order(); ++v) best = std::min(best, Ratio((g.degree(v) + 1) / 2 + 1, g.closed_degree(v)));
  return best;
}

inline bool ma_free(const Graph& g) {
  return is_pattern_free(g, {PatternId::cycle(4), PatternId::clique(4), PatternId::diamond()}) ||
         is_pattern_free(g, {PatternId::clique(3), PatternId::c8(), PatternId::k23()});
}

/// No K4-e+v subgraph, and not the triangle itself (q(C3) = 1/3).
inline bool hou_free(const Graph& g) {
  if (g.order() == 3 && g.size() == 3) return false;
  return is_pattern_free(g, {PatternId::k4_minus_e_plus_v()}, Containment::subgraph);
}

}  // namespace detail

/// Best lower bound on q(G) from the class propositions that apply to G.
///
/// `factor_limit` caps the factor order for which the product rule solves
/// q of both factors exactly.
inline ClassBound class_lower_bound(const Graph& g, int factor_limit = 16) {
  std::vector<BoundRule> rules;
  if (!is_connected(g)) rules.push_back({"component", Ratio(1), false});

  int min_even = -1;
  for (Vertex v = 0; v < g.order(); ++v) {
    int d = g.degree(v);
    if (d > 0 && d % 2 == 0 && (min_even < 0 || d < min_even)) min_even = d;
  }
  rules.push_back({"lowbound", min_even < 0 ? Ratio(1, 2) : std::min(Ratio(1, 2), Ratio(min_even / 2, min_even + 1)), false});

  if (detail::hou_free(g)) rules.push_back({"lowboundC3", Ratio(1, 2), false});
  if (g.min_degree() >= 3 && detail::ma_free(g))
    rules.push_back({"lowboundC4free", detail::half_ceiling_bound(g), false});

  if (is_connected(g)) {
    if (characterize_third(g)) {
      rules.push_back({"c3", Ratio(1, 3), false});
    } else {
      rules.push_back({"c3", Ratio(2, 5), false});
      if (g.max_degree() <= 6 && !in_two_fifths_family(g)) rules.push_back({"d6", Ratio(3, 7), false});
    }
  }

  if (const ProductInfo* info = g.product()) {
    rules.push_back({"prodlowbound", Ratio(1, 2), true});
    if (info->left.order() <= factor_limit && info->right.order() <= factor_limit) {
      try {
        Ratio a = solve_q(info->left, {std::uint64_t{1} << 22}).q;
        Ratio b = solve_q(info->right, {std::uint64_t{1} << 22}).q;
        rules.push_back({"prodmax", std::max(a, b), true});
      } catch (const budget_exceeded&) {
      }
    }
  }

  ClassBound out{rules.front().value, rules.front().strict, {}};
  for (const BoundRule& r : rules)
    if (r.value > out.value || (r.value == out.value && r.strict && !out.strict)) {
      out.value = r.value;
      out.strict = r.strict;
    }
  out.rules = std::move(rules);
  return out;
}

/// The edge st of a k-triangle (every other vertex adjacent to exactly s and t).
inline std::optional<std::array<Vertex, 2>> ktriangle_spine(const Graph& g) {
  const int n = g.order();
  if (n < 3 || g.size() != static_cast<std::size_t>(2 * n - 3)) return std::nullopt;
  std::vector<Vertex> hubs;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1) hubs.push_back(v);
    else if (g.degree(v) != 2) return std::nullopt;
  }
  if (hubs.size() < 2) return std::nullopt;
  return std::array<Vertex, 2>{hubs[0], hubs[1]};
}

/// Picks the closed form matching g, if any: tree, clique, k-triangle, cubic,
/// 4-regular, or a product of two cubic graphs or of a regular graph and a tree.
inline std::optional<FormulaVerdict> closed_form(const Graph& g, std::uint64_t budget = default_budget) {
  if (!is_connected(g)) return std::nullopt;
  if (const ProductInfo* info = g.product()) {
    if (regular_degree(info->left) == 3 && regular_degree(info->right) == 3)
      return product_cubic_q(info->left, info->right, budget);
    if (regular_degree(info->left) && is_tree(info->right)) return product_kreg_tree_q(info->left, info->right);
  }
  if (is_tree(g)) return tree_q(g);
  if (is_clique(g)) {
    auto v = clique_q(g.order());
    return detail::verdict(g, v.value, "clique", *v.witness);
  }
  if (auto st = ktriangle_spine(g)) {
    const int k = g.order() - 2;
    std::vector<Vertex> first{(*st)[0]};
    for (Vertex v = 0; v < g.order() && static_cast<int>(first.size()) <= k / 2; ++v)
      if (v != (*st)[0] && v != (*st)[1]) first.push_back(v);
    return detail::verdict(g, Ratio(k / 2 + 1, k + 2), "ktriangle", Bipartition::from_first_side(g.order(), first));
  }
  auto k = regular_degree(g);
  if (k == 3) return cubic_q(g, budget);
  if (k == 4) return four_regular_q(g, budget);
  return std::nullopt;
}

}  // namespace degratio
