#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "degratio/error.hpp"

namespace degratio {

using Vertex = int;
using Mask = std::uint64_t;

/// Undirected edge, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

struct ProductInfo;

/// Finite simple undirected graph on vertices 0..n-1 (n >= 2).
///
/// Immutable after construction. Graphs produced by cartesian_product carry
/// their factors so that fibers can be recovered.
class Graph {
 public:
  Graph(int n, std::span<const Edge> edges, std::string name = {}) : adj_(check_order(n)), name_(std::move(name)) {
    for (const Edge& e : edges) add_edge(e);
    finish();
  }

  Graph(int n, std::initializer_list<Edge> edges, std::string name = {})
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size()), std::move(name)) {}

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  int closed_degree(Vertex v) const { return degree(v) + 1; }

  bool has_edge(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  int min_degree() const {
    int d = degree(0);
    for (Vertex v = 1; v < order(); ++v) d = std::min(d, degree(v));
    return d;
  }
  int max_degree() const {
    int d = 0;
    for (Vertex v = 0; v < order(); ++v) d = std::max(d, degree(v));
    return d;
  }

  /// Edges in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : adj_[static_cast<std::size_t>(u)])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  const std::string& name() const noexcept { return name_; }
  Graph with_name(std::string name) const {
    Graph g = *this;
    g.name_ = std::move(name);
    return g;
  }

  /// Factor provenance when this graph is a cartesian product, else nullptr.
  const ProductInfo* product() const noexcept { return product_.get(); }

  /// Structural equality: same order and same edge set. Names and provenance
  /// are ignored.
  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  friend Graph attach_product(Graph g, std::shared_ptr<const ProductInfo> info);

  static std::size_t check_order(int n) {
    if (n < 2) throw parameter_error("a graph needs at least two vertices, got " + std::to_string(n));
    return static_cast<std::size_t>(n);
  }

  void add_edge(const Edge& e) {
    if (e.u < 0 || e.v >= order()) throw parameter_error("edge endpoint out of range");
    if (e.u == e.v) throw parameter_error("self-loop on vertex " + std::to_string(e.u));
    adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }

  void finish() {
    std::size_t twice = 0;
    for (auto& nb : adj_) {
      std::sort(nb.begin(), nb.end());
      if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) throw parameter_error("parallel edge");
      twice += nb.size();
    }
    edge_count_ = twice / 2;
  }

  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
  std::string name_;
  std::shared_ptr<const ProductInfo> product_;
};

/// Factors of a cartesian product. Product vertex (g, h) has label g * |V(H)| + h.
struct ProductInfo {
  Graph left;
  Graph right;
};

inline Graph attach_product(Graph g, std::shared_ptr<const ProductInfo> info) {
  g.product_ = std::move(info);
  return g;
}

// ---------------------------------------------------------------------------
// Small structural helpers shared by the rest of the library.

inline bool fits_mask(const Graph& g) noexcept { return g.order() <= 64; }

inline Mask bit(Vertex v) noexcept { return Mask{1} << v; }

inline Mask full_mask(int n) noexcept { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// Per-vertex neighbor bitsets. Requires n <= 64.
inline std::vector<Mask> adjacency_masks(const Graph& g) {
  if (!fits_mask(g)) throw precondition_error("bitset algorithms are limited to 64 vertices");
  std::vector<Mask> out(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v = 0; v < g.order(); ++v)
    for (Vertex u : g.neighbors(v)) out[static_cast<std::size_t>(v)] |= bit(u);
  return out;
}

/// Subgraph induced by `vertices` (relabelled in the given order).
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
  std::vector<Edge> es;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (Vertex u : g.neighbors(vertices[i])) {
      int j = index[static_cast<std::size_t>(u)];
      if (j > static_cast<int>(i)) es.emplace_back(static_cast<Vertex>(i), j);
    }
  return Graph(static_cast<int>(vertices.size()), es);
}

inline Graph complement(const Graph& g) {
  std::vector<Edge> es;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) es.emplace_back(u, v);
  return Graph(g.order(), es, g.name().empty() ? std::string{} : "co(" + g.name() + ")");
}

/// Disjoint union; vertices of `b` are shifted by |V(a)|.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> es = a.edges();
  for (const Edge& e : b.edges()) es.emplace_back(e.u + a.order(), e.v + a.order());
  return Graph(a.order() + b.order(), es);
}

/// Component label per vertex, labels 0..k-1 in order of smallest member.
inline std::vector<int> component_labels(const Graph& g) {
  std::vector<int> label(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (label[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<Vertex> stack{s};
    label[static_cast<std::size_t>(s)] = next;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : g.neighbors(v))
        if (label[static_cast<std::size_t>(u)] < 0) {
          label[static_cast<std::size_t>(u)] = next;
          stack.push_back(u);
        }
    }
    ++next;
  }
  return label;
}

inline bool is_connected(const Graph& g) {
  auto label = component_labels(g);
  return std::all_of(label.begin(), label.end(), [](int c) { return c == 0; });
}

inline bool is_tree(const Graph& g) {
  return g.size() == static_cast<std::size_t>(g.order() - 1) && is_connected(g);
}

/// The common degree if g is regular.
inline std::optional<int> regular_degree(const Graph& g) {
  int d = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v)
    if (g.degree(v) != d) return std::nullopt;
  return d;
}

/// Proper 2-colouring (colour of vertex 0 is 0 in every component) if one exists.
inline std::optional<std::vector<int>> bipartition_colouring(const Graph& g) {
  std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (colour[static_cast<std::size_t>(s)] >= 0) continue;
    colour[static_cast<std::size_t>(s)] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex u : g.neighbors(v)) {
        auto& cu = colour[static_cast<std::size_t>(u)];
        if (cu < 0) {
          cu = 1 - colour[static_cast<std::size_t>(v)];
          q.push(u);
        } else if (cu == colour[static_cast<std::size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

inline bool is_bipartite(const Graph& g) { return bipartition_colouring(g).has_value(); }

/// Lexicographically smallest triangle (a < b < c), if any.
inline std::optional<std::array<Vertex, 3>> smallest_triangle(const Graph& g) {
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b : g.neighbors(a)) {
      if (b <= a) continue;
      for (Vertex c : g.neighbors(b))
        if (c > b && g.has_edge(a, c)) return std::array<Vertex, 3>{a, b, c};
    }
  return std::nullopt;
}

/// Breadth-first order from `root`, then any unreached vertices in label order.
inline std::vector<Vertex> bfs_order(const Graph& g, Vertex root = 0) {
  std::vector<Vertex> order;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  auto run = [&](Vertex s) {
    std::size_t head = order.size();
    order.push_back(s);
    seen[static_cast<std::size_t>(s)] = 1;
    while (head < order.size()) {
      Vertex v = order[head++];
      for (Vertex u : g.neighbors(v))
        if (!seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = 1;
          order.push_back(u);
        }
    }
  };
  run(root);
  for (Vertex v = 0; v < g.order(); ++v)
    if (!seen[static_cast<std::size_t>(v)]) run(v);
  return order;
}

}  // namespace degratio
