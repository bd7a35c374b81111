#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "degratio/graph.hpp"
#include "degratio/ratio.hpp"

namespace degratio {

/// Nontrivial two-sided vertex partition (V1, V2). Sides are labelled 1 and 2.
class Bipartition {
 public:
  /// `sides[v]` must be 1 or 2 and both labels must occur.
  explicit Bipartition(std::vector<std::uint8_t> sides) : side_(std::move(sides)) {
    bool one = false;
    bool two = false;
    for (auto s : side_) {
      if (s == 1) one = true;
      else if (s == 2) two = true;
      else throw parameter_error("partition labels must be 1 or 2");
    }
    if (!one || !two) throw parameter_error("partition must have two nonempty sides");
  }

  /// Parses the 1/2 string form, one character per vertex.
  static Bipartition parse(std::string_view text) {
    std::vector<std::uint8_t> sides;
    for (char c : text) {
      if (c != '1' && c != '2') throw parameter_error("partition string may only contain '1' and '2'");
      sides.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return Bipartition(std::move(sides));
  }

  /// V1 = `first`, V2 = everything else.
  static Bipartition from_first_side(int n, std::span<const Vertex> first) {
    std::vector<std::uint8_t> sides(static_cast<std::size_t>(n), 2);
    for (Vertex v : first) {
      if (v < 0 || v >= n) throw parameter_error("partition vertex out of range");
      sides[static_cast<std::size_t>(v)] = 1;
    }
    return Bipartition(std::move(sides));
  }

  /// V2 = members of `second` (bitset), V1 = the rest. n <= 64.
  static Bipartition from_mask(int n, Mask second) {
    std::vector<std::uint8_t> sides(static_cast<std::size_t>(n), 1);
    for (Vertex v = 0; v < n; ++v)
      if (second & bit(v)) sides[static_cast<std::size_t>(v)] = 2;
    return Bipartition(std::move(sides));
  }

  int order() const noexcept { return static_cast<int>(side_.size()); }
  int side(Vertex v) const { return side_.at(static_cast<std::size_t>(v)); }
  bool same_side(Vertex u, Vertex v) const { return side(u) == side(v); }

  std::vector<Vertex> members(int s) const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < order(); ++v)
      if (side(v) == s) out.push_back(v);
    return out;
  }

  std::string str() const {
    std::string out;
    out.reserve(side_.size());
    for (auto s : side_) out.push_back(static_cast<char>('0' + s));
    return out;
  }

  friend bool operator==(const Bipartition&, const Bipartition&) = default;

 private:
  std::vector<std::uint8_t> side_;
};

inline void require_compatible(const Graph& g, const Bipartition& p) {
  if (g.order() != p.order())
    throw parameter_error("partition covers " + std::to_string(p.order()) + " vertices, graph has " +
                          std::to_string(g.order()));
}

/// Number of neighbours of v on v's own side.
inline int inner_degree(const Graph& g, const Bipartition& p, Vertex v) {
  int c = 0;
  for (Vertex u : g.neighbors(v))
    if (p.same_side(u, v)) ++c;
  return c;
}

/// |N[v] ∩ V_side(v)| / d[v].
inline Ratio vertex_ratio(const Graph& g, const Bipartition& p, Vertex v) {
  require_compatible(g, p);
  return Ratio(inner_degree(g, p, v) + 1, g.closed_degree(v));
}

struct QualityReport {
  std::vector<Ratio> per_vertex;
  Ratio quality;
  Vertex witness_vertex = 0;  // smallest label attaining the minimum
};

inline QualityReport partition_quality(const Graph& g, const Bipartition& p) {
  require_compatible(g, p);
  QualityReport r;
  r.per_vertex.reserve(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) {
    r.per_vertex.push_back(vertex_ratio(g, p, v));
    if (v == 0 || r.per_vertex.back() < r.quality) {
      r.quality = r.per_vertex.back();
      r.witness_vertex = v;
    }
  }
  return r;
}

inline Ratio quality_of(const Graph& g, const Bipartition& p) { return partition_quality(g, p).quality; }

/// Edges with one endpoint on each side, in lexicographic order.
inline std::vector<Edge> crossing_edges(const Graph& g, const Bipartition& p) {
  require_compatible(g, p);
  std::vector<Edge> out;
  for (const Edge& e : g.edges())
    if (!p.same_side(e.u, e.v)) out.push_back(e);
  return out;
}

/// True iff the edges are pairwise vertex-disjoint. Every edge must belong to g.
inline bool is_matching(const Graph& g, std::span<const Edge> edges) {
  std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= g.order() || !g.has_edge(e.u, e.v)) throw parameter_error("edge not in graph");
    for (Vertex x : {e.u, e.v}) {
      if (used[static_cast<std::size_t>(x)]) return false;
      used[static_cast<std::size_t>(x)] = 1;
    }
  }
  return true;
}

/// Outcome of a matching-cut query.
struct MatchingCutCertificate {
  enum class Verdict { has_cut, no_cut };
  enum class Basis {
    exhaustive_search,  // search completed (with or without finding a cut)
    product_lemma,      // no_cut derived from cut-free factors of a product
  };

  Verdict verdict = Verdict::no_cut;
  Basis basis = Basis::exhaustive_search;
  std::optional<Bipartition> partition;  // present iff has_cut
  std::vector<Edge> crossing_edges;
  std::uint64_t explored = 0;

  bool has_cut() const noexcept { return verdict == Verdict::has_cut; }
};

/// Checks the has_cut half of a certificate against g.
inline bool certificate_is_consistent(const Graph& g, const MatchingCutCertificate& c) {
  if (!c.has_cut()) return !c.partition.has_value() && c.crossing_edges.empty();
  if (!c.partition) return false;
  auto cross = crossing_edges(g, *c.partition);
  return cross == c.crossing_edges && !cross.empty() && is_matching(g, cross);
}

}  // namespace degratio
