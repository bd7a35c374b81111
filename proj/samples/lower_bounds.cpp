// Lower bounds with witnesses next to the exact value.

#include <iostream>

#include "degratio/closed_forms.hpp"
#include "degratio/constructive.hpp"
#include "degratio/named.hpp"

using namespace degratio;

int main() {
  for (const char* id : {"K7", "C6", "cube", "petersen", "W5", "prod:K3,K3"}) {
    Graph g = named_graph(id);
    auto w = lower_bound_witness(g);
    ClassBound lb = class_lower_bound(g);
    std::cout << id << ": " << w.rule << " gives " << w.bound << " (witness " << w.quality << " via " << w.method
              << "), best class bound " << lb.value << (lb.strict ? " strict" : "") << ", q = " << solve_q(g).q
              << ", edge bound " << edge_upper_bound(g) << '\n';
  }
}
