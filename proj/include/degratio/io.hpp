#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "degratio/graph.hpp"

namespace degratio {

/// Reads the edge-list text format:
///
///     c optional comment lines
///     p <n> <m>
///     e <u> <v>     (m lines, 1-indexed endpoints)
///
/// Blank lines are ignored. Errors carry the 1-based line and column.
inline Graph parse_graph(std::istream& in, std::string name = {}) {
  std::string line;
  int lineno = 0;
  int n = -1;
  long declared = -1;
  std::vector<Edge> es;

  auto column_of = [&](const std::string& text, std::size_t token) {
    // column of the token-th whitespace separated field (0-based)
    std::size_t i = 0;
    std::size_t seen = 0;
    while (i < text.size()) {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      if (i >= text.size()) break;
      if (seen == token) return static_cast<int>(i) + 1;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      ++seen;
    }
    return static_cast<int>(text.size()) + 1;
  };

  auto read_number = [&](std::istringstream& fields, const std::string& text, std::size_t token, long& out) {
    std::string tok;
    if (!(fields >> tok)) throw parse_error("missing number", lineno, column_of(text, token));
    std::size_t used = 0;
    try {
      out = std::stol(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || tok.empty()) throw parse_error("expected an integer, got '" + tok + "'", lineno, column_of(text, token));
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag)) continue;
    if (tag == "c") continue;
    if (tag == "p") {
      if (n >= 0) throw parse_error("duplicate problem line", lineno, column_of(line, 0));
      long nv = 0;
      read_number(fields, line, 1, nv);
      read_number(fields, line, 2, declared);
      if (nv < 2) throw parse_error("a graph needs at least two vertices", lineno, column_of(line, 1));
      if (declared < 0) throw parse_error("negative edge count", lineno, column_of(line, 2));
      n = static_cast<int>(nv);
    } else if (tag == "e") {
      if (n < 0) throw parse_error("edge before problem line", lineno, column_of(line, 0));
      long u = 0;
      long v = 0;
      read_number(fields, line, 1, u);
      read_number(fields, line, 2, v);
      if (u < 1 || u > n) throw parse_error("endpoint out of range", lineno, column_of(line, 1));
      if (v < 1 || v > n) throw parse_error("endpoint out of range", lineno, column_of(line, 2));
      if (u == v) throw parse_error("self-loop", lineno, column_of(line, 2));
      es.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    } else {
      throw parse_error("unknown line type '" + tag + "'", lineno, column_of(line, 0));
    }
    std::string extra;
    if (fields >> extra) throw parse_error("trailing field '" + extra + "'", lineno, column_of(line, 3));
  }
  if (n < 0) throw parse_error("missing problem line", lineno + 1, 1);
  if (static_cast<long>(es.size()) != declared)
    throw parse_error("declared " + std::to_string(declared) + " edges but read " + std::to_string(es.size()),
                      lineno + 1, 1);
  std::sort(es.begin(), es.end());
  if (std::adjacent_find(es.begin(), es.end()) != es.end()) throw parse_error("parallel edge", lineno + 1, 1);
  return Graph(n, es, std::move(name));
}

inline Graph parse_graph(const std::string& text, std::string name = {}) {
  std::istringstream in(text);
  return parse_graph(in, std::move(name));
}

/// Canonical emission: problem line, then edges in lexicographic order.
inline std::string emit_graph(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

/// FNV-1a over the canonical text; used to tie gadgets back to their source.
inline std::string graph_hash(const Graph& g) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : emit_graph(g)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

}  // namespace degratio
