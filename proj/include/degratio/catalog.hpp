#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "degratio/graph.hpp"
#include "degratio/named.hpp"

namespace degratio {

/// Ids of the built-in reference graphs, all small enough for exact solving.
inline const std::vector<std::string>& catalog_ids() {
  static const std::vector<std::string> ids{
      "K2",     "K3",       "K4",     "K5",    "K6",    "K7",   "K5e",   "P3",    "P4",    "P5",    "P6",
      "C4",     "C5",       "C6",     "C7",    "C8",    "claw", "diamond", "K4ev", "coK2claw", "bowtie",
      "T1",     "T2",       "T3",     "T4",    "T5",    "T6",   "W4",    "W5",    "W6",    "K22",   "K23",
      "K33",    "K34",      "K44",    "K1_4",  "K2_4",  "prism", "cube", "wagner", "petersen", "M10",
      "prod:K2,K2", "prod:K3,K2", "prod:C4,K2", "prod:K4,K2", "prod:P3,K2", "prod:C5,K2", "prod:K3,K3",
      "prod:K3,P3", "prod:C4,P3",
  };
  return ids;
}

inline std::vector<Graph> catalog_graphs(int max_n = 64) {
  std::vector<Graph> out;
  for (const auto& id : catalog_ids()) {
    Graph g = named_graph(id);
    if (g.order() <= max_n) out.push_back(g.name().empty() ? g.with_name(id) : g);
  }
  return out;
}

/// Erdős–Rényi G(n, p) resampled until connected. Labelled "er<n>-<draw>".
inline Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
  if (n < 2) throw parameter_error("random graphs need n >= 2");
  if (!(p > 0.0) || p > 1.0) throw parameter_error("edge probability must lie in (0, 1]");
  std::bernoulli_distribution coin(p);
  for (int attempt = 1;; ++attempt) {
    std::vector<Edge> es;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (coin(rng)) es.emplace_back(u, v);
    Graph g(n, es, "er" + std::to_string(n) + "-" + std::to_string(attempt));
    if (is_connected(g)) return g;
  }
}

/// Random simple cubic graph on n vertices (n even, n >= 4) from the pairing
/// model, resampled until simple and connected.
inline Graph random_cubic_graph(int n, std::mt19937_64& rng) {
  if (n < 4 || n % 2 != 0) throw parameter_error("cubic graphs need an even n >= 4");
  std::vector<Vertex> points(static_cast<std::size_t>(3 * n));
  for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<Vertex>(i / 3);
  for (;;) {
    std::shuffle(points.begin(), points.end(), rng);
    std::vector<Edge> es;
    bool ok = true;
    for (std::size_t i = 0; i < points.size() && ok; i += 2) {
      Vertex u = points[i];
      Vertex v = points[i + 1];
      if (u == v) ok = false;
      else es.emplace_back(std::min(u, v), std::max(u, v));
    }
    if (!ok) continue;
    std::sort(es.begin(), es.end());
    if (std::adjacent_find(es.begin(), es.end()) != es.end()) continue;
    Graph g(n, es, "cubic" + std::to_string(n));
    if (is_connected(g)) return g;
  }
}

/// Samples `count` connected graphs with orders drawn from [min_n, max_n] and
/// edge densities from [0.25, 0.75].
inline std::vector<Graph> sample_connected_graphs(int count, int min_n, int max_n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> order(min_n, max_n);
  std::uniform_real_distribution<double> density(0.25, 0.75);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) out.push_back(random_connected_graph(order(rng), density(rng), rng));
  return out;
}

}  // namespace degratio
