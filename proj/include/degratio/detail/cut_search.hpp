#pragma once

#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <vector>

#include "degratio/error.hpp"
#include "degratio/graph.hpp"
#include "degratio/ratio.hpp"

namespace degratio::detail {

/// Per-vertex limit on the number of neighbours allowed on the other side,
/// one limit per side. A negative limit forbids that side for the vertex.
struct CrossCaps {
  std::array<std::vector<int>, 2> side;

  static CrossCaps uniform(int n, int cap) {
    CrossCaps c;
    c.side[0].assign(static_cast<std::size_t>(n), cap);
    c.side[1].assign(static_cast<std::size_t>(n), cap);
    return c;
  }
};

/// Largest crossing count c with (d + 1 - c) / (d + 1) >= t.
inline int cap_at_least(int d, const Ratio& t) {
  // (d + 1 - c) * den >= num * (d + 1)  <=>  c <= d + 1 - ceil(num * (d + 1) / den)
  wide_int need = static_cast<wide_int>(t.num()) * (d + 1);
  wide_int ceil_need = (need + t.den() - 1) / t.den();
  if (need <= 0) ceil_need = 0;
  return static_cast<int>(d + 1 - ceil_need);
}

/// Largest crossing count c with (d + 1 - c) / (d + 1) > t.
inline int cap_above(int d, const Ratio& t) {
  wide_int need = static_cast<wide_int>(t.num()) * (d + 1);
  wide_int floor_need = need >= 0 ? need / t.den() : -1;
  return static_cast<int>(d - floor_need);
}

inline CrossCaps caps_at_least(const Graph& g, const Ratio& t) {
  CrossCaps c;
  for (int s = 0; s < 2; ++s)
    for (Vertex v = 0; v < g.order(); ++v) c.side[static_cast<std::size_t>(s)].push_back(cap_at_least(g.degree(v), t));
  return c;
}

inline CrossCaps caps_above(const Graph& g, const Ratio& t) {
  CrossCaps c;
  for (int s = 0; s < 2; ++s)
    for (Vertex v = 0; v < g.order(); ++v) c.side[static_cast<std::size_t>(s)].push_back(cap_above(g.degree(v), t));
  return c;
}

/// Max over edges uv of min(d(u)/d[u], d(v)/d[v]); the best any partition of a
/// connected graph can reach.
inline Ratio edge_bound(const Graph& g) {
  Ratio best(0);
  for (const Edge& e : g.edges()) {
    Ratio a(g.degree(e.u), g.closed_degree(e.u));
    Ratio b(g.degree(e.v), g.closed_degree(e.v));
    best = std::max(best, std::min(a, b));
  }
  return best;
}

/// Partial assignment: bitsets of the vertices placed on side 0 and side 1.
struct State {
  std::array<Mask, 2> side{0, 0};
};

/// Depth-first search over two-sided assignments subject to CrossCaps.
///
/// After every decision the state is closed under two implications:
///   - a free vertex whose placement on side s would exceed its own cap, or
///     push an already saturated neighbour past its cap, must go to side 1-s;
///   - a free vertex that can go nowhere kills the branch.
/// Only complete assignments with both sides nonempty reach the leaf callback.
class CutSearch {
 public:
  CutSearch(const Graph& g, std::uint64_t budget, std::atomic<std::uint64_t>* shared_counter = nullptr)
      : n_(g.order()),
        adj_(adjacency_masks(g)),
        order_(bfs_order(g, 0)),
        all_(full_mask(g.order())),
        budget_(budget),
        shared_(shared_counter) {}

  CrossCaps caps;

  std::uint64_t explored() const noexcept { return explored_; }

  /// Closes `st` under the cap implications; false on contradiction.
  bool propagate(State& st) const {
    for (;;) {
      std::array<Mask, 2> saturated{0, 0};
      for (int s = 0; s < 2; ++s) {
        const auto& cap = caps.side[static_cast<std::size_t>(s)];
        const Mask other = st.side[static_cast<std::size_t>(1 - s)];
        for (Mask m = st.side[static_cast<std::size_t>(s)]; m; m &= m - 1) {
          auto v = static_cast<std::size_t>(std::countr_zero(m));
          int c = std::popcount(adj_[v] & other);
          if (c > cap[v]) return false;
          if (c == cap[v]) saturated[static_cast<std::size_t>(s)] |= Mask{1} << v;
        }
      }
      bool changed = false;
      for (Mask m = all_ & ~(st.side[0] | st.side[1]); m; m &= m - 1) {
        auto u = static_cast<std::size_t>(std::countr_zero(m));
        bool can[2];
        for (int s = 0; s < 2; ++s) {
          int cap = caps.side[static_cast<std::size_t>(s)][u];
          can[s] = cap >= 0 && std::popcount(adj_[u] & st.side[static_cast<std::size_t>(1 - s)]) <= cap &&
                   (adj_[u] & saturated[static_cast<std::size_t>(1 - s)]) == 0;
        }
        if (!can[0] && !can[1]) return false;
        if (can[0] != can[1]) {
          st.side[can[0] ? 0 : 1] |= Mask{1} << u;
          changed = true;
        }
      }
      if (!changed) return true;
    }
  }

  /// Runs the search from `start`. `on_leaf(const State&)` returns true to stop.
  /// Returns true iff stopped by the callback.
  template <class OnLeaf>
  bool run(State start, OnLeaf&& on_leaf) {
    return descend(start, on_leaf);
  }

  /// Collects the propagated states reached after fixing `depth` branch
  /// vertices (used to split work between threads).
  std::vector<State> frontier(State start, int depth) {
    std::vector<State> out;
    collect(start, depth, out);
    return out;
  }

  const std::vector<Mask>& adjacency() const noexcept { return adj_; }
  int order() const noexcept { return n_; }

 private:
  void tick() {
    ++explored_;
    std::uint64_t total = explored_;
    if (shared_) total = shared_->fetch_add(1, std::memory_order_relaxed) + 1;
    if (total > budget_) throw budget_exceeded(total);
  }

  Vertex next_free(const State& st) const {
    const Mask assigned = st.side[0] | st.side[1];
    for (Vertex v : order_)
      if (!(assigned & bit(v))) return v;
    return -1;
  }

  template <class OnLeaf>
  bool descend(State st, OnLeaf& on_leaf) {
    tick();
    if (!propagate(st)) return false;
    Vertex v = next_free(st);
    if (v < 0) {
      if (st.side[0] == 0 || st.side[1] == 0) return false;
      return on_leaf(static_cast<const State&>(st));
    }
    int first = std::popcount(adj_[static_cast<std::size_t>(v)] & st.side[1]) >
                        std::popcount(adj_[static_cast<std::size_t>(v)] & st.side[0])
                    ? 1
                    : 0;
    for (int s : {first, 1 - first}) {
      State child = st;
      child.side[static_cast<std::size_t>(s)] |= bit(v);
      if (descend(child, on_leaf)) return true;
    }
    return false;
  }

  void collect(State st, int depth, std::vector<State>& out) {
    if (!propagate(st)) return;
    Vertex v = next_free(st);
    if (v < 0 || depth == 0) {
      out.push_back(st);
      return;
    }
    for (int s : {0, 1}) {
      State child = st;
      child.side[static_cast<std::size_t>(s)] |= bit(v);
      collect(child, depth - 1, out);
    }
  }

  int n_;
  std::vector<Mask> adj_;
  std::vector<Vertex> order_;
  Mask all_;
  std::uint64_t budget_;
  std::atomic<std::uint64_t>* shared_;
  std::uint64_t explored_ = 0;
};

/// min over v of (|N(v) ∩ own side| + 1) / d[v] for a complete assignment.
inline Ratio state_quality(const std::vector<Mask>& adj, const State& st) {
  Ratio best(1);
  const int n = static_cast<int>(adj.size());
  for (Vertex v = 0; v < n; ++v) {
    const Mask own = (st.side[0] & bit(v)) ? st.side[0] : st.side[1];
    const auto sv = static_cast<std::size_t>(v);
    Ratio r(std::popcount(adj[sv] & own) + 1, std::popcount(adj[sv]) + 1);
    if (r < best) best = r;
  }
  return best;
}

}  // namespace degratio::detail
