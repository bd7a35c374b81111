#pragma once

#include <optional>
#include <string>
#include <vector>

#include "degratio/connectivity.hpp"
#include "degratio/partition.hpp"

namespace degratio {

struct RatedPartition {
  Ratio quality;
  Bipartition partition;
  std::string rule;
};

/// Best partition obtainable from the connectivity structure alone:
///   - a disconnected graph: one component against the rest (quality 1);
///   - every bridge uv: the two components of G - uv;
///   - every cut vertex v and component C of G - v: (C, V - C).
/// Returns nullopt for a biconnected, bridgeless graph.
inline std::optional<RatedPartition> connectivity_partition(const Graph& g) {
  const int n = g.order();
  std::optional<RatedPartition> best;
  auto consider = [&](const std::vector<Vertex>& first, const char* rule) {
    if (first.empty() || static_cast<int>(first.size()) == n) return;
    Bipartition p = Bipartition::from_first_side(n, first);
    Ratio q = quality_of(g, p);
    if (!best || q > best->quality) best = RatedPartition{q, std::move(p), rule};
  };

  ConnectivityInfo info = connectivity(g);
  if (info.components.size() > 1) {
    consider(info.components.front(), "component");
    return best;
  }
  for (const Edge& e : info.cut_edges) consider(split_at_bridge(g, e).first, "bridge");
  for (Vertex v : info.cut_vertices) {
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    removed[static_cast<std::size_t>(v)] = 1;
    for (const auto& comp : components_without(g, removed)) consider(comp, "cut-vertex");
  }
  return best;
}

}  // namespace degratio
