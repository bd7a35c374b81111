#pragma once

#include <memory>
#include <string>
#include <vector>

#include "degratio/graph.hpp"

namespace degratio {

/// A vertex of G □ H named by its factor coordinates.
struct ProductVertex {
  Vertex g = 0;
  Vertex h = 0;
  friend constexpr bool operator==(const ProductVertex&, const ProductVertex&) = default;
};

enum class FiberSide {
  left,   // anchor is a vertex g of the left factor; the fiber is {(g, h) : h in V(H)}
  right,  // anchor is a vertex h of the right factor; the fiber is {(g, h) : g in V(G)}
};

/// Cartesian product G □ H. (g1,h1) ~ (g2,h2) iff g1 = g2 and h1h2 in E(H), or
/// h1 = h2 and g1g2 in E(G). Both factors must be connected.
inline Graph cartesian_product(const Graph& left, const Graph& right) {
  if (!is_connected(left) || !is_connected(right))
    throw precondition_error("cartesian product factors must be connected");
  const int nh = right.order();
  auto label = [nh](Vertex g, Vertex h) { return g * nh + h; };
  std::vector<Edge> es;
  es.reserve(left.size() * static_cast<std::size_t>(nh) + right.size() * static_cast<std::size_t>(left.order()));
  for (Vertex g = 0; g < left.order(); ++g)
    for (const Edge& e : right.edges()) es.emplace_back(label(g, e.u), label(g, e.v));
  for (const Edge& e : left.edges())
    for (Vertex h = 0; h < nh; ++h) es.emplace_back(label(e.u, h), label(e.v, h));
  std::string name;
  if (!left.name().empty() && !right.name().empty()) name = "prod:" + left.name() + "," + right.name();
  Graph product(left.order() * nh, es, std::move(name));
  return attach_product(std::move(product), std::make_shared<const ProductInfo>(ProductInfo{left, right}));
}

inline const ProductInfo& require_product(const Graph& p) {
  if (p.product() == nullptr) throw precondition_error("graph carries no product provenance");
  return *p.product();
}

inline ProductVertex product_coordinates(const Graph& p, Vertex v) {
  const auto& info = require_product(p);
  if (v < 0 || v >= p.order()) throw parameter_error("product vertex out of range");
  return {v / info.right.order(), v % info.right.order()};
}

inline Vertex product_label(const Graph& p, ProductVertex pv) {
  const auto& info = require_product(p);
  if (pv.g < 0 || pv.g >= info.left.order() || pv.h < 0 || pv.h >= info.right.order())
    throw parameter_error("product coordinates out of range");
  return pv.g * info.right.order() + pv.h;
}

/// Vertex set of a fiber, in increasing label order.
inline std::vector<Vertex> fiber(const Graph& p, FiberSide which, Vertex anchor) {
  const auto& info = require_product(p);
  const int ng = info.left.order();
  const int nh = info.right.order();
  std::vector<Vertex> out;
  if (which == FiberSide::left) {
    if (anchor < 0 || anchor >= ng) throw parameter_error("fiber anchor out of range");
    for (Vertex h = 0; h < nh; ++h) out.push_back(anchor * nh + h);
  } else {
    if (anchor < 0 || anchor >= nh) throw parameter_error("fiber anchor out of range");
    for (Vertex g = 0; g < ng; ++g) out.push_back(g * nh + anchor);
  }
  return out;
}

}  // namespace degratio
