#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "degratio/closed_forms.hpp"
#include "degratio/io.hpp"
#include "degratio/product.hpp"
#include "degratio/solver.hpp"

namespace degratio {

enum class Construction { double_cover, cover_plus_matching, twin_expand_K2, product_fixed_H };

inline const char* to_string(Construction c) {
  switch (c) {
    case Construction::double_cover: return "double_cover";
    case Construction::cover_plus_matching: return "cover_plus_matching";
    case Construction::twin_expand_K2: return "twin_expand_K2";
    case Construction::product_fixed_H: return "product_fixed_H";
  }
  return "?";
}

/// A gadget graph together with the source it was built from.
///
/// `provenance[v]` lists the gadget vertices that stand for source vertex v.
/// For the two threshold constructions the claim reads "source has a
/// matching-cut iff q(graph) >= threshold"; for the covers it reads "source
/// has a matching-cut iff graph has one".
struct GadgetInstance {
  Graph graph;
  Graph source;
  Construction construction;
  std::string claim;
  std::vector<std::vector<Vertex>> provenance;
  std::optional<Ratio> threshold;
  std::optional<Graph> fixed;  // H of product_fixed_H
  bool test_mode = false;
};

namespace detail {

inline void require_connected_source(const Graph& g) {
  if (!is_connected(g)) throw precondition_error("source graph must be connected");
}

inline std::vector<Edge> crossed_copies(const Graph& g) {
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) {
    es.emplace_back(2 * e.u, 2 * e.v + 1);
    es.emplace_back(2 * e.v, 2 * e.u + 1);
  }
  return es;
}

inline std::vector<std::vector<Vertex>> copy_provenance(int n) {
  std::vector<std::vector<Vertex>> out;
  for (Vertex v = 0; v < n; ++v) out.push_back({2 * v, 2 * v + 1});
  return out;
}

inline std::string source_tag(const Graph& g) { return g.name().empty() ? graph_hash(g) : g.name(); }

}  // namespace detail

/// Two copies v1 = 2v, v2 = 2v + 1 of every vertex; each edge uv becomes u1v2
/// and v1u2. Needs a connected k-regular source with k >= 4 unless in test mode.
inline GadgetInstance bipartite_double_cover(const Graph& g, bool test_mode = false) {
  detail::require_connected_source(g);
  auto k = regular_degree(g);
  if (!k) throw precondition_error("double cover source must be regular");
  if (!test_mode && *k < 4) throw precondition_error("double cover source must have degree at least 4");
  Graph out(2 * g.order(), detail::crossed_copies(g), "cover(" + detail::source_tag(g) + ")");
  return {out, g, Construction::double_cover, "source has a matching-cut iff gadget has one",
          detail::copy_provenance(g.order()), std::nullopt, std::nullopt, test_mode};
}

/// The double cover plus the perfect matching {v1 v2}. Needs a connected
/// (k-1)-regular bipartite source with k > 4 unless in test mode.
inline GadgetInstance cover_plus_matching(const Graph& g, bool test_mode = false) {
  detail::require_connected_source(g);
  auto k = regular_degree(g);
  if (!k || !is_bipartite(g)) throw precondition_error("source must be regular and bipartite");
  if (!test_mode && *k + 1 <= 4) throw precondition_error("source degree must be at least 4");
  auto es = detail::crossed_copies(g);
  for (Vertex v = 0; v < g.order(); ++v) es.emplace_back(2 * v, 2 * v + 1);
  Graph out(2 * g.order(), es, "cover+m(" + detail::source_tag(g) + ")");
  return {out, g, Construction::cover_plus_matching, "source has a matching-cut iff gadget has one",
          detail::copy_provenance(g.order()), std::nullopt, std::nullopt, test_mode};
}

/// Hangs a twin v' = n + v on every vertex and takes the product with K2.
///
/// A matching-cut of G lifts with every vertex keeping all but one neighbour,
/// so q(gadget) >= (δ+2)/(δ+3); conversely, reaching that value keeps each
/// twin with both of its neighbours and leaves at most one crossing edge per
/// vertex as long as Δ <= 2δ + 2. For the (3,4)-biregular class this is 5/6.
inline GadgetInstance twin_expand_then_K2(const Graph& g, bool test_mode = false) {
  detail::require_connected_source(g);
  auto colours = bipartition_colouring(g);
  if (!colours) throw precondition_error("twin construction needs a bipartite source");
  if (!test_mode) {
    std::array<int, 2> deg{-1, -1};
    for (Vertex v = 0; v < g.order(); ++v) {
      int& d = deg[static_cast<std::size_t>((*colours)[static_cast<std::size_t>(v)])];
      if (d >= 0 && d != g.degree(v)) throw precondition_error("each colour class must have a single degree");
      d = g.degree(v);
    }
    if (std::min(deg[0], deg[1]) != 3 || std::max(deg[0], deg[1]) != 4)
      throw precondition_error("twin construction expects degrees 3 and 4 on the two sides");
  }
  const int delta = g.min_degree();
  if (g.max_degree() > 2 * delta + 2) throw precondition_error("twin construction needs Δ <= 2δ + 2");
  const int n = g.order();
  std::vector<Edge> es = g.edges();
  for (Vertex v = 0; v < n; ++v) es.emplace_back(v, n + v);
  Graph twins(2 * n, es, "twins(" + detail::source_tag(g) + ")");
  Graph out = cartesian_product(twins, clique_graph(2));
  std::vector<std::vector<Vertex>> prov;
  for (Vertex v = 0; v < n; ++v) {
    auto own = fiber(out, FiberSide::left, v);
    auto twin = fiber(out, FiberSide::left, n + v);
    own.insert(own.end(), twin.begin(), twin.end());
    prov.push_back(own);
  }
  Ratio t(delta + 2, delta + 3);
  return {out, g, Construction::twin_expand_K2, "source has a matching-cut iff q(gadget) >= " + t.str(),
          prov, t, std::nullopt, test_mode};
}

/// G □ H for bipartite k-regular G and a fixed connected k'-regular H without
/// matching-cut: G has a matching-cut iff q(G □ H) >= (k+k')/(k+k'+1).
inline GadgetInstance product_with_fixed(const Graph& g, const Graph& h, bool test_mode = false,
                                         std::uint64_t budget = default_budget) {
  detail::require_connected_source(g);
  auto k = regular_degree(g);
  if (!k || !is_bipartite(g)) throw precondition_error("source must be regular and bipartite");
  if (!test_mode && *k < 4) throw precondition_error("source degree must be at least 4");
  auto kh = regular_degree(h);
  if (!kh || !is_connected(h)) throw precondition_error("fixed factor must be connected and regular");
  if (find_matching_cut(h, {budget}).has_cut()) throw precondition_error("fixed factor must not have a matching-cut");
  Graph out = cartesian_product(g, h);
  std::vector<std::vector<Vertex>> prov;
  for (Vertex v = 0; v < g.order(); ++v) prov.push_back(fiber(out, FiberSide::left, v));
  Ratio t(*k + *kh, *k + *kh + 1);
  return {out, g, Construction::product_fixed_H, "source has a matching-cut iff q(gadget) >= " + t.str(),
          prov, t, h, test_mode};
}

enum class Equivalence { holds, violated, inconclusive };

inline const char* to_string(Equivalence e) {
  switch (e) {
    case Equivalence::holds: return "holds";
    case Equivalence::violated: return "violated";
    case Equivalence::inconclusive: return "inconclusive";
  }
  return "?";
}

struct EquivalenceReport {
  Equivalence verdict = Equivalence::inconclusive;
  std::optional<bool> source_side;  // source has a matching-cut
  std::optional<bool> gadget_side;  // gadget has a matching-cut, or reaches the threshold
  std::string detail;
};

namespace detail {

/// Matching-cut existence by exhaustive search; a disconnected graph has the
/// empty one.
inline bool has_matching_cut_exhaustive(const Graph& g, std::uint64_t budget) {
  if (!is_connected(g)) return true;
  return find_matching_cut(g, {budget, false}).has_cut();
}

}  // namespace detail

/// Decides both sides of the instance's claim exactly and compares them.
inline EquivalenceReport verify_equivalence(const GadgetInstance& inst, std::uint64_t budget = default_budget) {
  EquivalenceReport r;
  try {
    r.source_side = detail::has_matching_cut_exhaustive(inst.source, budget);
    if (inst.threshold) r.gadget_side = decide(inst.graph, *inst.threshold, budget).yes;
    else r.gadget_side = detail::has_matching_cut_exhaustive(inst.graph, budget);
  } catch (const budget_exceeded& e) {
    r.detail = e.what();
    return r;
  }
  r.verdict = *r.source_side == *r.gadget_side ? Equivalence::holds : Equivalence::violated;
  r.detail = std::string("source ") + (*r.source_side ? "has" : "has no") + " matching-cut; gadget " +
             (inst.threshold ? (*r.gadget_side ? "reaches " : "stays below ") + inst.threshold->str()
                             : (*r.gadget_side ? "has one" : "has none"));
  return r;
}

}  // namespace degratio
