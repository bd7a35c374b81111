#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "degratio/graph.hpp"
#include "degratio/product.hpp"

namespace degratio {

/// Small named graphs used as forbidden patterns and as reference instances.
struct PatternId {
  enum class Kind {
    clique,              // K_n
    cycle,               // C_n
    complete_bipartite,  // K_{m,n}
    claw,                // K_{1,3}
    diamond,             // K_4 - e
    k4_minus_e_plus_v,   // diamond plus a vertex joined to both degree-3 vertices
    k_triangle,          // T_k
    co_k2_claw,          // complement of K_2 ∪ claw
    c8,
    k23,
  };

  Kind kind;
  int a = 0;
  int b = 0;

  static PatternId clique(int n) { return {Kind::clique, n}; }
  static PatternId cycle(int n) { return {Kind::cycle, n}; }
  static PatternId complete_bipartite(int m, int n) { return {Kind::complete_bipartite, m, n}; }
  static PatternId claw() { return {Kind::claw}; }
  static PatternId diamond() { return {Kind::diamond}; }
  static PatternId k4_minus_e_plus_v() { return {Kind::k4_minus_e_plus_v}; }
  static PatternId k_triangle(int k) { return {Kind::k_triangle, k}; }
  static PatternId co_k2_claw() { return {Kind::co_k2_claw}; }
  static PatternId c8() { return {Kind::c8}; }
  static PatternId k23() { return {Kind::k23}; }
};

inline Graph clique_graph(int n) {
  if (n < 2) throw parameter_error("K_n needs n >= 2");
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) es.emplace_back(u, v);
  return Graph(n, es, "K" + std::to_string(n));
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw parameter_error("C_n needs n >= 3");
  std::vector<Edge> es;
  for (Vertex v = 0; v < n; ++v) es.emplace_back(v, (v + 1) % n);
  return Graph(n, es, "C" + std::to_string(n));
}

inline Graph path_graph(int n) {
  if (n < 2) throw parameter_error("P_n needs n >= 2");
  std::vector<Edge> es;
  for (Vertex v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
  return Graph(n, es, "P" + std::to_string(n));
}

/// K_{m,n}; the m-side is 0..m-1.
inline Graph complete_bipartite_graph(int m, int n) {
  if (m < 1 || n < 1) throw parameter_error("K_{m,n} needs m, n >= 1");
  std::vector<Edge> es;
  for (Vertex u = 0; u < m; ++u)
    for (Vertex v = 0; v < n; ++v) es.emplace_back(u, m + v);
  return Graph(m + n, es, "K" + std::to_string(m) + "_" + std::to_string(n));
}

/// T_k: s = 0, t = 1, v_i = i + 1; edge st and v_i adjacent to both s and t.
inline Graph k_triangle_graph(int k) {
  if (k < 1) throw parameter_error("T_k needs k >= 1");
  std::vector<Edge> es{{0, 1}};
  for (int i = 1; i <= k; ++i) {
    es.emplace_back(0, i + 1);
    es.emplace_back(1, i + 1);
  }
  return Graph(k + 2, es, "T" + std::to_string(k));
}

/// Wheel: hub 0 joined to the rim cycle 1..n.
inline Graph wheel_graph(int n) {
  if (n < 3) throw parameter_error("wheel needs a rim of at least 3 vertices");
  std::vector<Edge> es;
  for (int i = 1; i <= n; ++i) {
    es.emplace_back(0, i);
    es.emplace_back(i, i % n + 1);
  }
  return Graph(n + 1, es, "W" + std::to_string(n));
}

inline Graph petersen_graph() {
  std::vector<Edge> es;
  for (int i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);
    es.emplace_back(5 + i, 5 + (i + 2) % 5);
    es.emplace_back(i, 5 + i);
  }
  return Graph(10, es, "petersen");
}

inline Graph cube_graph() {
  std::vector<Edge> es;
  for (Vertex v = 0; v < 8; ++v)
    for (int b = 0; b < 3; ++b)
      if (!(v & (1 << b))) es.emplace_back(v, v | (1 << b));
  return Graph(8, es, "cube");
}

/// Möbius ladder on 2k vertices (k = 4 gives the Wagner graph).
inline Graph mobius_ladder(int k) {
  if (k < 2) throw parameter_error("Möbius ladder needs k >= 2");
  const int n = 2 * k;
  std::vector<Edge> es;
  for (Vertex v = 0; v < n; ++v) es.emplace_back(v, (v + 1) % n);
  for (Vertex v = 0; v < k; ++v) es.emplace_back(v, v + k);
  return Graph(n, es, "M" + std::to_string(n));
}

inline Graph build_named(const PatternId& id) {
  using K = PatternId::Kind;
  switch (id.kind) {
    case K::clique:
      return clique_graph(id.a);
    case K::cycle:
      return cycle_graph(id.a);
    case K::complete_bipartite:
      if (id.a + id.b < 2) throw parameter_error("K_{m,n} needs m + n >= 2");
      return complete_bipartite_graph(id.a, id.b);
    case K::claw:
      return complete_bipartite_graph(1, 3).with_name("claw");
    case K::diamond:
      return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}, "diamond");
    case K::k4_minus_e_plus_v:
      return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {0, 4}, {1, 4}}, "K4ev");
    case K::k_triangle:
      return k_triangle_graph(id.a);
    case K::co_k2_claw:
      return complement(disjoint_union(clique_graph(2), complete_bipartite_graph(1, 3))).with_name("coK2claw");
    case K::c8:
      return cycle_graph(8);
    case K::k23:
      return complete_bipartite_graph(2, 3).with_name("K23");
  }
  throw parameter_error("unknown pattern");
}

namespace detail {

inline bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace detail

/// Resolves a string id such as `K5`, `C8`, `T3`, `K3_3`, `K33`, `coK2claw`,
/// `petersen` or `prod:K4,K4`.
///
/// Two-digit ids `K22`, `K23`, `K33`, `K34`, `K44` and `K55` denote complete
/// bipartite graphs; other `K<n>` ids are cliques.
inline Graph named_graph(std::string_view id) {
  auto fail = [&]() -> Graph { throw parameter_error("unknown graph id '" + std::string(id) + "'"); };
  if (id.starts_with("prod:")) {
    auto rest = id.substr(5);
    // split at the comma that separates the two factor ids (factor ids never contain ':')
    int depth = 0;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (rest.substr(i).starts_with("prod:")) ++depth;
      if (rest[i] == ',') {
        if (depth == 0) return cartesian_product(named_graph(rest.substr(0, i)), named_graph(rest.substr(i + 1)));
        --depth;
      }
    }
    return fail();
  }

  if (id == "claw") return build_named(PatternId::claw());
  if (id == "diamond") return build_named(PatternId::diamond());
  if (id == "K4ev") return build_named(PatternId::k4_minus_e_plus_v());
  if (id == "coK2claw") return build_named(PatternId::co_k2_claw());
  if (id == "petersen") return petersen_graph();
  if (id == "cube") return cube_graph();
  if (id == "wagner") return mobius_ladder(4).with_name("wagner");
  if (id == "prism") return cartesian_product(cycle_graph(3), clique_graph(2)).with_name("prism");
  if (id == "bowtie") return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}, "bowtie");
  if (id == "K5e") {
    std::vector<Edge> es;
    for (const Edge& e : clique_graph(5).edges())
      if (!(e == Edge(3, 4))) es.push_back(e);
    return Graph(5, es, "K5e");
  }
  for (std::string_view alias : {"K22", "K23", "K33", "K34", "K44", "K55"})
    if (id == alias) return complete_bipartite_graph(alias[1] - '0', alias[2] - '0').with_name(std::string(alias));

  int a = 0;
  int b = 0;
  if (id.size() >= 2 && id[0] == 'K') {
    auto body = id.substr(1);
    auto us = body.find('_');
    if (us != std::string_view::npos) {
      if (detail::parse_int(body.substr(0, us), a) && detail::parse_int(body.substr(us + 1), b))
        return complete_bipartite_graph(a, b);
      return fail();
    }
    if (detail::parse_int(body, a)) return clique_graph(a);
  }
  if (id.size() >= 2 && id[0] == 'C' && detail::parse_int(id.substr(1), a)) return cycle_graph(a);
  if (id.size() >= 2 && id[0] == 'P' && detail::parse_int(id.substr(1), a)) return path_graph(a);
  if (id.size() >= 2 && id[0] == 'T' && detail::parse_int(id.substr(1), a)) return k_triangle_graph(a);
  if (id.size() >= 2 && id[0] == 'W' && detail::parse_int(id.substr(1), a)) return wheel_graph(a);
  if (id.size() >= 2 && id[0] == 'M' && detail::parse_int(id.substr(1), a) && a % 2 == 0)
    return mobius_ladder(a / 2);
  return fail();
}

}  // namespace degratio
