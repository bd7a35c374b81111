#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "degratio/closed_forms.hpp"
#include "degratio/connectivity.hpp"
#include "degratio/connectivity_partition.hpp"
#include "degratio/detail/cut_search.hpp"
#include "degratio/partition.hpp"
#include "degratio/solver.hpp"

namespace degratio {

/// Required inner degree of every vertex on side 1 (f1) and side 2 (f2).
struct DegreeDemands {
  std::vector<int> f1;
  std::vector<int> f2;
};

/// The degree condition under which a demand-meeting partition is known to exist.
enum class DemandRegime {
  stiebitz,  // d >= f1 + f2 + 1
  hou,       // d >= f1 + f2, f_i >= 1, no K4-e+v subgraph
  ma,        // d >= f1 + f2 - 1, f_i >= 2, (C4, K4, diamond)-free or (K3, C8, K23)-free
};

inline const char* to_string(DemandRegime r) {
  switch (r) {
    case DemandRegime::stiebitz: return "stiebitz";
    case DemandRegime::hou: return "hou";
    case DemandRegime::ma: return "ma";
  }
  return "?";
}

/// Throws precondition_error unless the regime's hypotheses hold.
inline void require_regime(const Graph& g, const DegreeDemands& f, DemandRegime regime) {
  const auto n = static_cast<std::size_t>(g.order());
  if (f.f1.size() != n || f.f2.size() != n) throw parameter_error("demands must cover every vertex");
  int slack = regime == DemandRegime::stiebitz ? 1 : regime == DemandRegime::hou ? 0 : -1;
  int floor = regime == DemandRegime::stiebitz ? 0 : regime == DemandRegime::hou ? 1 : 2;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto i = static_cast<std::size_t>(v);
    if (f.f1[i] < floor || f.f2[i] < floor)
      throw precondition_error(std::string(to_string(regime)) + " demands must be at least " + std::to_string(floor));
    if (g.degree(v) < f.f1[i] + f.f2[i] + slack)
      throw precondition_error("vertex " + std::to_string(v) + " violates the " + to_string(regime) + " degree condition");
  }
  if (regime == DemandRegime::hou && !detail::hou_free(g))
    throw precondition_error("hou regime needs a graph other than C3 without K4-e+v");
  if (regime == DemandRegime::ma && !detail::ma_free(g))
    throw precondition_error("ma regime needs a (C4, K4, diamond)-free or (K3, C8, K23)-free graph");
}

inline bool demands_met(const Graph& g, const DegreeDemands& f, const Bipartition& p) {
  require_compatible(g, p);
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto& need = p.side(v) == 1 ? f.f1 : f.f2;
    if (inner_degree(g, p, v) < need[static_cast<std::size_t>(v)]) return false;
  }
  return true;
}

struct DemandPartition {
  Bipartition partition;
  std::string method;  // "local_search" or "exhaustive"
  std::uint64_t steps = 0;
};

struct DemandOptions {
  std::uint64_t seed = 1;
  int restarts = 8;
  int exhaustive_limit = 22;
  std::uint64_t budget = default_budget;
};

namespace detail {

/// Moves violating vertices across until none is left. Under the Stiebitz
/// condition every move raises e(V1) + e(V2) - Σ f by at least 3, so this ends.
inline std::optional<Bipartition> demand_local_search(const Graph& g, const DegreeDemands& f,
                                                      std::vector<std::uint8_t> side, std::uint64_t cap,
                                                      std::uint64_t& steps) {
  const int n = g.order();
  std::vector<int> inner(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : g.neighbors(v))
      if (side[static_cast<std::size_t>(u)] == side[static_cast<std::size_t>(v)]) ++inner[static_cast<std::size_t>(v)];
  for (std::uint64_t it = 0; it < cap; ++it) {
    Vertex bad = -1;
    for (Vertex v = 0; v < n && bad < 0; ++v) {
      auto i = static_cast<std::size_t>(v);
      if (inner[i] < (side[i] == 1 ? f.f1[i] : f.f2[i])) bad = v;
    }
    int ones = static_cast<int>(std::count(side.begin(), side.end(), 1));
    if (bad < 0) {
      if (ones == 0 || ones == n) return std::nullopt;
      return Bipartition(std::move(side));
    }
    ++steps;
    auto b = static_cast<std::size_t>(bad);
    for (Vertex u : g.neighbors(bad)) {
      auto j = static_cast<std::size_t>(u);
      if (side[j] == side[b]) --inner[j];
      else ++inner[j];
    }
    inner[b] = g.degree(bad) - inner[b];
    side[b] = static_cast<std::uint8_t>(3 - side[b]);
  }
  return std::nullopt;
}

inline std::optional<Bipartition> demand_exhaustive(const Graph& g, const DegreeDemands& f, std::uint64_t budget,
                                                    std::uint64_t& steps) {
  CutSearch search(g, budget);
  for (int s = 0; s < 2; ++s)
    for (Vertex v = 0; v < g.order(); ++v) {
      auto i = static_cast<std::size_t>(v);
      search.caps.side[static_cast<std::size_t>(s)].push_back(g.degree(v) - (s == 0 ? f.f1[i] : f.f2[i]));
    }
  State root;
  if (f.f1 == f.f2) root.side[0] = bit(0);
  std::optional<Bipartition> found;
  search.run(root, [&](const State& st) {
    found = Bipartition::from_mask(g.order(), st.side[1]);
    return true;
  });
  steps += search.explored();
  return found;
}

}  // namespace detail

/// A partition with d_{G[V_i]}(x) >= f_i(x) for every x in V_i.
///
/// Local search from seeded random starts first (iteration cap 50 n^2 each),
/// then exhaustive search when n <= exhaustive_limit. The regime's theorem
/// guarantees existence, so an empty exhaustive search is an internal error.
inline DemandPartition degree_constrained_partition(const Graph& g, const DegreeDemands& f, DemandRegime regime,
                                                    const DemandOptions& options = {}) {
  require_regime(g, f, regime);
  const int n = g.order();
  const std::uint64_t cap = 50ULL * static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
  std::mt19937_64 rng(options.seed);
  std::uint64_t steps = 0;
  for (int r = 0; r < options.restarts; ++r) {
    std::vector<std::uint8_t> side(static_cast<std::size_t>(n));
    for (auto& s : side) s = static_cast<std::uint8_t>(1 + rng() % 2);
    side[0] = 1;
    side[static_cast<std::size_t>(n - 1)] = 2;
    if (auto p = detail::demand_local_search(g, f, std::move(side), cap, steps)) return {*p, "local_search", steps};
  }
  if (n > options.exhaustive_limit) throw budget_exceeded(steps);
  if (auto p = detail::demand_exhaustive(g, f, options.budget, steps)) return {*p, "exhaustive", steps};
  throw internal_error(std::string("no partition meets the demands although the ") + to_string(regime) +
                       " condition holds");
}

struct LowerBoundWitness {
  Ratio bound;
  std::string rule;  // lowbound, lowboundC3 or lowboundC4free
  DemandRegime regime = DemandRegime::stiebitz;
  Bipartition partition;
  Ratio quality;
  std::string method;
};

/// The strongest of the three demand-based lower bounds that applies to g,
/// together with a partition meeting it.
inline LowerBoundWitness lower_bound_witness(const Graph& g, const DemandOptions& options = {}) {
  if (!is_connected(g)) throw precondition_error("lower bound witness needs a connected graph");
  const auto n = static_cast<std::size_t>(g.order());
  DegreeDemands f{std::vector<int>(n), std::vector<int>(n)};
  auto fill = [&](auto rule) {
    for (Vertex v = 0; v < g.order(); ++v) f.f1[static_cast<std::size_t>(v)] = f.f2[static_cast<std::size_t>(v)] = rule(g.degree(v));
  };

  LowerBoundWitness out{Ratio(1, 2), "", DemandRegime::stiebitz, Bipartition::from_mask(g.order(), 1), Ratio(0), ""};
  if (g.min_degree() >= 3 && detail::ma_free(g)) {
    fill([](int d) { return (d + 1) / 2; });
    out.regime = DemandRegime::ma;
    out.rule = "lowboundC4free";
    out.bound = detail::half_ceiling_bound(g);
  } else if (g.min_degree() >= 2 && detail::hou_free(g)) {
    fill([](int d) { return d / 2; });
    out.regime = DemandRegime::hou;
    out.rule = "lowboundC3";
  } else {
    fill([](int d) { return (d - 1) / 2; });
    out.rule = "lowbound";
    int min_even = -1;
    for (Vertex v = 0; v < g.order(); ++v)
      if (g.degree(v) % 2 == 0 && (min_even < 0 || g.degree(v) < min_even)) min_even = g.degree(v);
    if (min_even > 0) out.bound = std::min(Ratio(1, 2), Ratio(min_even / 2, min_even + 1));
  }
  auto found = degree_constrained_partition(g, f, out.regime, options);
  out.partition = found.partition;
  out.method = found.method;
  out.quality = quality_of(g, out.partition);
  if (out.quality < out.bound) throw internal_error(out.rule + " witness falls below its bound");
  return out;
}

/// (A, B): disjoint nonempty sets in which every member already meets the
/// threshold counting only its own set.
struct GoodPair {
  std::vector<Vertex> a;
  std::vector<Vertex> b;
  Ratio threshold{3, 7};
};

inline bool is_good_pair(const Graph& g, const GoodPair& gp) {
  if (gp.a.empty() || gp.b.empty()) return false;
  std::vector<int> where(static_cast<std::size_t>(g.order()), 0);
  for (int s = 1; s <= 2; ++s)
    for (Vertex v : s == 1 ? gp.a : gp.b) {
      if (v < 0 || v >= g.order() || where[static_cast<std::size_t>(v)] != 0) return false;
      where[static_cast<std::size_t>(v)] = s;
    }
  for (Vertex v = 0; v < g.order(); ++v) {
    int s = where[static_cast<std::size_t>(v)];
    if (s == 0) continue;
    int own = 1;
    for (Vertex u : g.neighbors(v))
      if (where[static_cast<std::size_t>(u)] == s) ++own;
    if (Ratio(own, g.closed_degree(v)) < gp.threshold) return false;
  }
  return true;
}

/// Grows a good pair into a partition of quality at least the threshold.
/// Each round either stops with (A ∪ B, C) or moves one under-served vertex of
/// C to the side holding more of its neighbours (ties to A).
inline Bipartition extend_good_pair(const Graph& g, GoodPair gp) {
  if (!is_good_pair(g, gp)) throw precondition_error("not a good pair");
  const int n = g.order();
  std::vector<int> where(static_cast<std::size_t>(n), 0);
  for (Vertex v : gp.a) where[static_cast<std::size_t>(v)] = 1;
  for (Vertex v : gp.b) where[static_cast<std::size_t>(v)] = 2;
  auto count = [&](Vertex v, int s) {
    int c = 0;
    for (Vertex u : g.neighbors(v))
      if (where[static_cast<std::size_t>(u)] == s) ++c;
    return c;
  };
  for (int round = 0; round <= n; ++round) {
    Vertex bad = -1;
    bool rest = false;
    for (Vertex v = 0; v < n; ++v) {
      if (where[static_cast<std::size_t>(v)] != 0) continue;
      rest = true;
      if (bad < 0 && Ratio(count(v, 0) + 1, g.closed_degree(v)) < gp.threshold) bad = v;
    }
    if (!rest) {
      std::vector<std::uint8_t> sides(where.begin(), where.end());
      return Bipartition(std::move(sides));
    }
    if (bad < 0) {
      std::vector<std::uint8_t> sides(static_cast<std::size_t>(n));
      for (Vertex v = 0; v < n; ++v) sides[static_cast<std::size_t>(v)] = where[static_cast<std::size_t>(v)] == 0 ? 2 : 1;
      return Bipartition(std::move(sides));
    }
    where[static_cast<std::size_t>(bad)] = count(bad, 1) >= count(bad, 2) ? 1 : 2;
  }
  throw internal_error("good pair extension did not terminate");
}

struct GoodPairResult {
  GoodPair pair;
  std::string rule;  // the case that produced the pair, or "fallback"
  std::array<Vertex, 3> triangle{};
  bool fallback = false;
};

/// Receives a message whenever find_good_pair leaves its case analysis.
inline std::function<void(const std::string&)>& good_pair_log() {
  static std::function<void(const std::string&)> sink = [](const std::string& m) { std::clog << "warning: " << m << '\n'; };
  return sink;
}

namespace detail {

inline bool any_cut_vertex(const Graph& g) { return !connectivity(g).cut_vertices.empty(); }

/// Vertices of one cycle in g restricted to `alive`, if there is one.
inline std::optional<std::vector<Vertex>> find_cycle(const Graph& g, const std::vector<char>& alive) {
  const int n = g.order();
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -2);
  for (Vertex root = 0; root < n; ++root) {
    if (!alive[static_cast<std::size_t>(root)] || parent[static_cast<std::size_t>(root)] != -2) continue;
    parent[static_cast<std::size_t>(root)] = -1;
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : g.neighbors(v)) {
        if (!alive[static_cast<std::size_t>(u)] || u == parent[static_cast<std::size_t>(v)]) continue;
        if (parent[static_cast<std::size_t>(u)] == -2) {
          parent[static_cast<std::size_t>(u)] = v;
          stack.push_back(u);
          continue;
        }
        // u already reached: walk both ancestor chains to their meeting point
        std::vector<char> on_v(static_cast<std::size_t>(n), 0);
        for (Vertex x = v; x >= 0; x = parent[static_cast<std::size_t>(x)]) on_v[static_cast<std::size_t>(x)] = 1;
        Vertex meet = u;
        while (!on_v[static_cast<std::size_t>(meet)]) meet = parent[static_cast<std::size_t>(meet)];
        std::vector<Vertex> cycle;
        for (Vertex x = v; x != meet; x = parent[static_cast<std::size_t>(x)]) cycle.push_back(x);
        cycle.push_back(meet);
        for (Vertex x = u; x != meet; x = parent[static_cast<std::size_t>(x)]) cycle.push_back(x);
        if (cycle.size() >= 3) return cycle;
      }
    }
  }
  return std::nullopt;
}

/// Path between u and v inside a tree component (restricted to `alive`).
inline std::vector<Vertex> tree_path(const Graph& g, const std::vector<char>& alive, Vertex u, Vertex v) {
  std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -2);
  parent[static_cast<std::size_t>(u)] = -1;
  std::vector<Vertex> queue{u};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Vertex w : g.neighbors(queue[i]))
      if (alive[static_cast<std::size_t>(w)] && parent[static_cast<std::size_t>(w)] == -2) {
        parent[static_cast<std::size_t>(w)] = queue[i];
        queue.push_back(w);
      }
  std::vector<Vertex> path;
  for (Vertex x = v; x >= 0; x = parent[static_cast<std::size_t>(x)]) path.push_back(x);
  return path;
}

}  // namespace detail

namespace detail {

inline std::vector<std::array<Vertex, 3>> triangles(const Graph& g) {
  std::vector<std::array<Vertex, 3>> out;
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b : g.neighbors(a))
      if (b > a)
        for (Vertex c : g.neighbors(b))
          if (c > b && g.has_edge(a, c)) out.push_back({a, b, c});
  return out;
}

/// Candidate good pairs built from triangle `tri`, in case order.
inline std::vector<std::pair<std::string, GoodPair>> good_pair_candidates(const Graph& g,
                                                                          const std::array<Vertex, 3>& tri,
                                                                          const Ratio& threshold) {
  const int n = g.order();
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  for (Vertex t : tri) alive[static_cast<std::size_t>(t)] = 0;
  std::vector<Vertex> tv(tri.begin(), tri.end());
  auto in_t = [&](Vertex x) { return !alive[static_cast<std::size_t>(x)]; };
  auto dc = [&](Vertex x) { return g.closed_degree(x); };
  auto make = [&](std::vector<Vertex> a, std::vector<Vertex> b) { return GoodPair{std::move(a), std::move(b), threshold}; };

  std::vector<std::pair<std::string, GoodPair>> candidates;

  if (auto cyc = detail::find_cycle(g, alive)) candidates.emplace_back("cycle", make(tv, *cyc));

  // Components of G - T and, for each, its leaves and low-degree vertices.
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  for (Vertex t : tv) removed[static_cast<std::size_t>(t)] = 1;
  auto comps = components_without(g, removed);
  auto h_degree = [&](Vertex x) {
    int c = 0;
    for (Vertex y : g.neighbors(x))
      if (!in_t(y)) ++c;
    return c;
  };
  auto t_neighbours = [&](Vertex x) {
    std::vector<Vertex> out;
    for (Vertex y : g.neighbors(x))
      if (in_t(y)) out.push_back(y);
    return out;
  };
  auto others = [&](Vertex c) {
    std::vector<Vertex> out;
    for (Vertex t : tv)
      if (t != c) out.push_back(t);
    return out;
  };
  auto with = [](std::vector<Vertex> s, std::initializer_list<Vertex> extra) {
    s.insert(s.end(), extra);
    return s;
  };

  std::vector<std::vector<Vertex>> paths;
  std::vector<Vertex> isolated;
  for (const auto& comp : comps) {
    if (comp.size() == 1) {
      isolated.push_back(comp.front());
      continue;
    }
    std::vector<Vertex> low;
    std::vector<Vertex> leaves;
    for (Vertex x : comp) {
      if (dc(x) <= 4) low.push_back(x);
      if (h_degree(x) == 1) leaves.push_back(x);
    }
    if (low.size() >= 2) candidates.emplace_back("two-low", make(tv, detail::tree_path(g, alive, low[0], low[1])));
    if (leaves.size() >= 3) {
      // u, v complete to T; w any other leaf with a neighbour c in T
      for (Vertex w : leaves)
        for (Vertex c : t_neighbours(w))
          for (Vertex u : leaves)
            for (Vertex v : leaves) {
              if (u == v || u == w || v == w || dc(u) < 5 || dc(v) < 5) continue;
              auto ab = others(c);
              candidates.emplace_back("three-leaves",
                                      make(with(detail::tree_path(g, alive, v, w), {c}), with(ab, {u})));
            }
    }
    if (leaves.size() == 2) paths.push_back(comp);
  }

  auto path_ends = [&](const std::vector<Vertex>& comp) {
    std::vector<Vertex> ends;
    for (Vertex x : comp)
      if (h_degree(x) == 1) ends.push_back(x);
    return ends;
  };

  // Two paths C, C': C ∪ {c} closes a cycle through c, and {a, b, v'} is a triangle.
  for (std::size_t i = 0; i < paths.size(); ++i)
    for (std::size_t j = 0; j < paths.size(); ++j) {
      if (i == j) continue;
      auto ends = path_ends(paths[i]);
      for (Vertex vp : path_ends(paths[j])) {
        if (dc(vp) < 5) continue;
        for (int flip = 0; flip < 2; ++flip) {
          Vertex u = ends[static_cast<std::size_t>(flip)];
          Vertex v = ends[static_cast<std::size_t>(1 - flip)];
          if (dc(v) < 5) continue;
          for (Vertex c : t_neighbours(u))
            candidates.emplace_back("two-paths", make(with(paths[i], {c}), with(others(c), {vp})));
        }
      }
    }

  // A path C with leaves u, v (v complete to T) and an isolated vertex w.
  for (const auto& comp : paths) {
    auto ends = path_ends(comp);
    for (int flip = 0; flip < 2; ++flip) {
      Vertex u = ends[static_cast<std::size_t>(flip)];
      Vertex v = ends[static_cast<std::size_t>(1 - flip)];
      if (dc(v) < 5) continue;
      for (Vertex c : t_neighbours(u)) {
        auto ab = others(c);
        Vertex a = ab[0];
        Vertex b = ab[1];
        for (Vertex w : isolated) {
          if (g.has_edge(w, a) && g.has_edge(w, b)) {
            candidates.emplace_back("path-isolated", make(with(comp, {c}), {a, b, w}));
            continue;
          }
          if (!g.has_edge(w, c)) continue;
          if (!g.has_edge(w, a)) std::swap(a, b);
          if (dc(u) <= 4) candidates.emplace_back("path-isolated", make({c, u, w}, {a, b, v}));
          else candidates.emplace_back("path-isolated", make(with(comp, {b}), {a, c, w}));
        }
      }
    }
  }

  // A single path component and nothing else.
  if (comps.size() == 1 && paths.size() == 1) {
    const auto& comp = paths.front();
    auto ends = path_ends(comp);
    for (int flip = 0; flip < 2; ++flip) {
      Vertex u = ends[static_cast<std::size_t>(flip)];
      Vertex v = ends[static_cast<std::size_t>(1 - flip)];
      if (dc(v) < 5) continue;
      for (Vertex c : t_neighbours(u)) {
        auto ab = others(c);
        if (comp.size() == 2) {
          candidates.emplace_back("single-path", make(ab, {c, u, v}));
          continue;
        }
        Vertex w = -1;
        for (Vertex y : g.neighbors(u))
          if (!in_t(y)) w = y;
        if (dc(u) <= 4 || dc(w) >= 4) {
          for (Vertex cw : t_neighbours(w)) {
            if (!g.has_edge(cw, u)) continue;
            auto rest = others(cw);
            candidates.emplace_back("single-path", make({cw, u, w}, with(rest, {v})));
          }
        } else {
          for (Vertex s : g.neighbors(w)) {
            if (in_t(s) || s == u || dc(s) < 5) continue;
            for (Vertex cs : t_neighbours(s)) {
              if (!g.has_edge(cs, u)) continue;
              candidates.emplace_back("single-path", make({cs, s, u, w}, with(others(cs), {v})));
            }
          }
        }
      }
    }
  }

  // Only isolated vertices: order T by degree, a >= b >= c.
  if (paths.empty() && comps.size() == isolated.size() && !isolated.empty()) {
    std::vector<Vertex> byd = tv;
    std::stable_sort(byd.begin(), byd.end(), [&](Vertex x, Vertex y) { return g.degree(x) > g.degree(y); });
    Vertex a = byd[0];
    Vertex b = byd[1];
    Vertex c = byd[2];
    if (g.degree(c) == 2) {
      // a k-triangle on spine ab: half of the other vertices go with a
      std::vector<Vertex> first{a};
      std::vector<Vertex> second{b};
      std::vector<Vertex> rest;
      for (Vertex x = 0; x < n; ++x)
        if (x != a && x != b) rest.push_back(x);
      for (std::size_t i = 0; i < rest.size(); ++i) (i < rest.size() / 2 ? first : second).push_back(rest[i]);
      candidates.emplace_back("ktriangle", make(first, second));
    } else if (g.degree(c) == 3) {
      Vertex v = -1;
      for (Vertex y : g.neighbors(c))
        if (!in_t(y)) v = y;
      std::vector<Vertex> rest;
      for (Vertex x = 0; x < n; ++x)
        if (x != c && x != v) rest.push_back(x);
      candidates.emplace_back("isolated", make({c, v}, rest));
    } else {
      std::vector<Vertex> out_c;
      for (Vertex y : g.neighbors(c))
        if (!in_t(y)) out_c.push_back(y);
      for (std::size_t i = 0; i < out_c.size(); ++i)
        for (std::size_t j = i + 1; j < out_c.size(); ++j)
          for (Vertex w : isolated)
            if (w != out_c[i] && w != out_c[j] && g.has_edge(w, a) && g.has_edge(w, b))
              candidates.emplace_back("isolated", make({c, out_c[i], out_c[j]}, {a, b, w}));
    }
  }

  return candidates;
}

}  // namespace detail

/// Finds a good pair for a biconnected graph with a triangle, Δ <= 6, outside
/// the 2/5 family and C3 (threshold 3/7), or for a connected 4-regular graph
/// other than K5 without matching-cut (threshold 3/5).
///
/// Works from a triangle T = {a, b, c} and the rest G - T, trying the cases
/// in order: a cycle in G - T; a tree component with two vertices of closed
/// degree at most 4; a component with three leaves; two path components; a
/// path and an isolated vertex; a single path; only isolated vertices. Every
/// candidate is checked before it is returned. Triangles are taken in
/// lexicographic order, moving on only when no case of the previous one gives
/// a valid pair. If none does, the solver's optimal partition is used
/// and the event is reported through good_pair_log().
inline GoodPairResult find_good_pair(const Graph& g, const Ratio& threshold = Ratio(3, 7),
                                     std::uint64_t budget = default_budget) {
  const int n = g.order();
  if (!is_connected(g)) throw precondition_error("good pair search needs a connected graph");
  auto tri = smallest_triangle(g);
  if (!tri) throw precondition_error("good pair search needs a triangle");
  if (threshold == Ratio(3, 7)) {
    if (g.max_degree() > 6) throw precondition_error("good pair search needs maximum degree at most 6");
    if (detail::any_cut_vertex(g)) throw precondition_error("good pair search needs a biconnected graph");
    if (characterize_third(g) || in_two_fifths_family(g))
      throw precondition_error("good pair search excludes C3 and the 2/5 family");
  } else if (threshold == Ratio(3, 5)) {
    if (regular_degree(g) != 4 || n == 5) throw precondition_error("3/5 good pairs need a 4-regular graph other than K5");
    if (find_matching_cut(g, {budget}).has_cut()) throw precondition_error("3/5 good pairs need a graph without matching-cut");
  } else {
    throw parameter_error("good pair threshold must be 3/7 or 3/5");
  }

  for (const auto& tri : detail::triangles(g))
    for (auto& [rule, gp] : detail::good_pair_candidates(g, tri, threshold))
      if (is_good_pair(g, gp)) return {std::move(gp), rule, tri, false};

  good_pair_log()("good pair case analysis found nothing for a graph on " + std::to_string(n) +
                  " vertices; using the exact solver");
  auto r = solve_q(g, {budget});
  if (r.q < threshold)
    throw internal_error("no partition reaches " + threshold.str() + " (q = " + r.q.str() + ")");
  return {GoodPair{r.optimal_partition.members(1), r.optimal_partition.members(2), threshold}, "fallback", *tri, true};
}

struct ThreeSeventhsWitness {
  Bipartition partition;
  Ratio quality;
  std::string rule;
  bool fallback = false;
};

/// A partition of quality at least 3/7 for a connected graph with Δ <= 6
/// outside the 2/5 family and C3: a connectivity split when there is a cut
/// vertex or bridge, the demand witness when there is no triangle, and an
/// extended good pair otherwise.
inline ThreeSeventhsWitness three_sevenths_witness(const Graph& g, std::uint64_t budget = default_budget) {
  if (!is_connected(g)) throw precondition_error("needs a connected graph");
  if (g.max_degree() > 6) throw precondition_error("needs maximum degree at most 6");
  if (characterize_third(g) || in_two_fifths_family(g)) throw precondition_error("excludes C3 and the 2/5 family");
  ThreeSeventhsWitness out{Bipartition::from_mask(g.order(), 1), Ratio(0), "", false};
  if (auto cp = connectivity_partition(g)) {
    out = {cp->partition, cp->quality, cp->rule, false};
  } else if (!smallest_triangle(g)) {
    auto lb = lower_bound_witness(g);
    out = {lb.partition, lb.quality, lb.rule, false};
  } else {
    auto gp = find_good_pair(g, Ratio(3, 7), budget);
    Bipartition p = extend_good_pair(g, gp.pair);
    out = {p, quality_of(g, p), gp.rule, gp.fallback};
  }
  if (out.quality < Ratio(3, 7)) throw internal_error(out.rule + " partition falls below 3/7");
  return out;
}

}  // namespace degratio
