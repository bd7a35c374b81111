#pragma once

#include <algorithm>
#include <vector>

#include "degratio/graph.hpp"

namespace degratio {

struct ConnectivityInfo {
  std::vector<std::vector<Vertex>> components;  // each sorted, ordered by smallest member
  std::vector<Vertex> cut_vertices;             // sorted
  std::vector<Edge> cut_edges;                  // bridges, sorted
};

/// Components, articulation points and bridges (Hopcroft-Tarjan low-link).
inline ConnectivityInfo connectivity(const Graph& g) {
  const int n = g.order();
  ConnectivityInfo info;

  auto label = component_labels(g);
  int k = *std::max_element(label.begin(), label.end()) + 1;
  info.components.resize(static_cast<std::size_t>(k));
  for (Vertex v = 0; v < n; ++v) info.components[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])].push_back(v);

  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<char> is_cut(static_cast<std::size_t>(n), 0);
  int timer = 0;

  // Iterative DFS; frame = (vertex, parent, next neighbour index, child count).
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
    int children;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (disc[static_cast<std::size_t>(root)] >= 0) continue;
    std::vector<Frame> stack{{root, -1, 0, 0}};
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        Vertex u = nb[f.next++];
        auto su = static_cast<std::size_t>(u);
        if (disc[su] < 0) {
          disc[su] = low[su] = timer++;
          ++f.children;
          stack.push_back({u, f.v, 0, 0});
        } else if (u != f.parent) {
          low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], disc[su]);
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (stack.empty()) {
        if (done.children > 1) is_cut[static_cast<std::size_t>(done.v)] = 1;
        continue;
      }
      Vertex p = done.parent;
      auto sp = static_cast<std::size_t>(p);
      auto sv = static_cast<std::size_t>(done.v);
      low[sp] = std::min(low[sp], low[sv]);
      if (low[sv] > disc[sp]) info.cut_edges.emplace_back(p, done.v);
      if (stack.size() > 1 && low[sv] >= disc[sp]) is_cut[sp] = 1;
    }
  }

  for (Vertex v = 0; v < n; ++v)
    if (is_cut[static_cast<std::size_t>(v)]) info.cut_vertices.push_back(v);
  std::sort(info.cut_edges.begin(), info.cut_edges.end());
  return info;
}

/// Components of g after deleting the vertices in `removed` (bitset over n <= 64
/// not required; uses a flag vector).
inline std::vector<std::vector<Vertex>> components_without(const Graph& g, const std::vector<char>& removed) {
  const int n = g.order();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (removed[static_cast<std::size_t>(s)] || label[static_cast<std::size_t>(s)] >= 0) continue;
    out.emplace_back();
    std::vector<Vertex> stack{s};
    label[static_cast<std::size_t>(s)] = static_cast<int>(out.size()) - 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (Vertex u : g.neighbors(v))
        if (!removed[static_cast<std::size_t>(u)] && label[static_cast<std::size_t>(u)] < 0) {
          label[static_cast<std::size_t>(u)] = label[static_cast<std::size_t>(s)];
          stack.push_back(u);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

/// The two vertex sets of g - uv for a bridge uv; first set contains u.
inline std::pair<std::vector<Vertex>, std::vector<Vertex>> split_at_bridge(const Graph& g, Edge bridge) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> side{bridge.u};
  seen[static_cast<std::size_t>(bridge.u)] = 1;
  for (std::size_t i = 0; i < side.size(); ++i)
    for (Vertex w : g.neighbors(side[i])) {
      if (Edge(side[i], w) == bridge || seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = 1;
      side.push_back(w);
    }
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!seen[static_cast<std::size_t>(v)]) rest.push_back(v);
  std::sort(side.begin(), side.end());
  return {side, rest};
}

}  // namespace degratio
