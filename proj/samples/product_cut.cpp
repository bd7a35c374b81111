// Matching-cuts of Cartesian products, from the factors and by direct search.

#include <iostream>

#include "degratio/named.hpp"
#include "degratio/product.hpp"
#include "degratio/solver.hpp"

using namespace degratio;

int main() {
  const char* pairs[][2] = {{"K4", "K4"}, {"K4", "K33"}, {"C4", "K3"}, {"prism", "K2"}};
  for (const auto& [a, b] : pairs) {
    Graph g = named_graph(a);
    Graph h = named_graph(b);
    auto rule = product_matching_cut(g, h);
    Graph p = cartesian_product(g, h);
    auto direct = find_matching_cut(p, {default_budget, false});
    std::cout << a << " x " << b << " (" << p.order() << " vertices): " << (rule.has_cut ? "cut" : "no cut")
              << " from factors, " << (direct.has_cut() ? "cut" : "no cut") << " by search";
    if (rule.lifted) std::cout << ", lifted " << rule.lifted->str();
    std::cout << '\n';
  }
}
