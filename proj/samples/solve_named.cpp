// Exact q(G) for a few named graphs, or for the ids given on the command line.

#include <iostream>

#include "degratio/named.hpp"
#include "degratio/solver.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> ids{"C3", "K5", "K7", "T3", "prism", "petersen"};
  if (argc > 1) ids.assign(argv + 1, argv + argc);
  for (const auto& id : ids) {
    try {
      degratio::Graph g = degratio::named_graph(id);
      auto r = degratio::solve_q(g);
      std::cout << id << ": q = " << r.q << "  partition " << r.optimal_partition.str() << '\n';
    } catch (const std::exception& e) {
      std::cerr << id << ": " << e.what() << '\n';
      return 1;
    }
  }
}
