#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "degratio/graph.hpp"
#include "degratio/named.hpp"

namespace degratio {

enum class Containment {
  induced,   // the host's induced subgraph on the image is isomorphic to the pattern
  subgraph,  // pattern edges map to host edges; extra host edges are allowed
};

/// Maps pattern vertices to distinct host vertices. Returns image[p] for every
/// pattern vertex p, or nullopt when no embedding exists.
///
/// Backtracking over pattern vertices in BFS order; candidates for a vertex with
/// an already-placed neighbour are restricted to that neighbour's image's
/// neighbourhood, and host degree must be at least pattern degree.
inline std::optional<std::vector<Vertex>> find_embedding(const Graph& pattern, const Graph& host,
                                                         Containment mode) {
  const int k = pattern.order();
  const int n = host.order();
  if (k > n) return std::nullopt;

  std::vector<Vertex> order = bfs_order(pattern, 0);
  std::vector<Vertex> image(static_cast<std::size_t>(k), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);

  auto consistent = [&](Vertex p, Vertex x, std::size_t depth) {
    if (used[static_cast<std::size_t>(x)] || host.degree(x) < pattern.degree(p)) return false;
    for (std::size_t i = 0; i < depth; ++i) {
      Vertex q = order[i];
      Vertex y = image[static_cast<std::size_t>(q)];
      bool pe = pattern.has_edge(p, q);
      bool he = host.has_edge(x, y);
      if (pe && !he) return false;
      if (mode == Containment::induced && !pe && he) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == order.size()) return true;
    Vertex p = order[depth];
    Vertex anchor = -1;
    for (std::size_t i = 0; i < depth; ++i)
      if (pattern.has_edge(p, order[i])) {
        anchor = image[static_cast<std::size_t>(order[i])];
        break;
      }
    auto try_candidate = [&](Vertex x) {
      if (!consistent(p, x, depth)) return false;
      image[static_cast<std::size_t>(p)] = x;
      used[static_cast<std::size_t>(x)] = 1;
      if (self(self, depth + 1)) return true;
      used[static_cast<std::size_t>(x)] = 0;
      image[static_cast<std::size_t>(p)] = -1;
      return false;
    };
    if (anchor >= 0) {
      for (Vertex x : host.neighbors(anchor))
        if (try_candidate(x)) return true;
    } else {
      for (Vertex x = 0; x < n; ++x)
        if (try_candidate(x)) return true;
    }
    return false;
  };

  if (search(search, 0)) return image;
  return std::nullopt;
}

inline bool contains_pattern(const Graph& host, const Graph& pattern, Containment mode = Containment::induced) {
  return find_embedding(pattern, host, mode).has_value();
}

/// True iff no pattern occurs in g (as an induced subgraph by default).
inline bool is_pattern_free(const Graph& g, std::span<const PatternId> patterns,
                            Containment mode = Containment::induced) {
  for (const PatternId& id : patterns) {
    Graph p = build_named(id);
    if (p.order() > 8) throw precondition_error("pattern-freeness is limited to patterns on at most 8 vertices");
    if (contains_pattern(g, p, mode)) return false;
  }
  return true;
}

inline bool is_pattern_free(const Graph& g, std::initializer_list<PatternId> patterns,
                            Containment mode = Containment::induced) {
  return is_pattern_free(g, std::span<const PatternId>(patterns.begin(), patterns.size()), mode);
}

inline std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d;
  for (Vertex v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

/// Isomorphism test for small graphs (degree-sequence prefilter, then search).
inline bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;
  return find_embedding(b, a, Containment::induced).has_value();
}

}  // namespace degratio
