#pragma once

#include <atomic>
#include <bit>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "degratio/connectivity_partition.hpp"
#include "degratio/detail/cut_search.hpp"
#include "degratio/partition.hpp"
#include "degratio/product.hpp"

namespace degratio {

inline constexpr std::uint64_t default_budget = std::uint64_t{1} << 26;

enum class SolveMethod { enumeration, pruned_search };

inline const char* to_string(SolveMethod m) { return m == SolveMethod::enumeration ? "enumeration" : "pruned_search"; }

struct SolveOptions {
  std::uint64_t budget = default_budget;
  SolveMethod method = SolveMethod::pruned_search;
  int jobs = 1;
};

struct SolveResult {
  Ratio q;
  Bipartition optimal_partition;
  std::uint64_t explored = 0;
  SolveMethod method = SolveMethod::pruned_search;
};

namespace detail {

inline void require_searchable(const Graph& g) {
  if (!fits_mask(g)) throw precondition_error("exact search is limited to graphs with at most 64 vertices");
}

inline SolveResult solve_by_enumeration(const Graph& g, std::uint64_t budget) {
  const int n = g.order();
  if (n > 40) throw precondition_error("plain enumeration is limited to 40 vertices");
  const auto adj = adjacency_masks(g);
  const Mask all = full_mask(n);
  const std::uint64_t count = (std::uint64_t{1} << (n - 1)) - 1;
  std::optional<Ratio> best;
  Mask best_second = 0;
  std::uint64_t explored = 0;
  for (std::uint64_t m = 1; m <= count; ++m) {
    if (++explored > budget) throw budget_exceeded(explored);
    State st;
    st.side[1] = static_cast<Mask>(m) << 1;  // vertex 0 stays on side 1
    st.side[0] = all & ~st.side[1];
    Ratio q = state_quality(adj, st);
    if (!best || q > *best) {
      best = q;
      best_second = st.side[1];
    }
  }
  return {*best, Bipartition::from_mask(n, best_second), explored, SolveMethod::enumeration};
}

struct Incumbent {
  std::mutex mu;
  Ratio value;
  Mask second = 0;
  bool valid = false;
  std::atomic<std::uint64_t> version{0};
};

/// Runs branch and bound from each start state, sharing the incumbent.
inline void bound_from(const Graph& g, const std::vector<State>& starts, std::atomic<std::size_t>& next,
                       Incumbent& inc, const Ratio& ceiling, std::atomic<bool>& done, std::uint64_t budget,
                       std::atomic<std::uint64_t>& counter) {
  CutSearch search(g, budget, &counter);
  std::uint64_t seen_version = ~std::uint64_t{0};
  auto refresh = [&] {
    std::uint64_t v = inc.version.load();
    if (v == seen_version) return;
    std::lock_guard lock(inc.mu);
    seen_version = inc.version.load();
    search.caps = inc.valid ? caps_above(g, inc.value) : CrossCaps::uniform(g.order(), g.max_degree());
  };
  for (;;) {
    if (done.load()) return;
    std::size_t i = next.fetch_add(1);
    if (i >= starts.size()) return;
    refresh();
    search.run(starts[i], [&](const State& st) {
      Ratio q = state_quality(search.adjacency(), st);
      {
        std::lock_guard lock(inc.mu);
        if (!inc.valid || q > inc.value) {
          inc.value = q;
          inc.second = st.side[1];
          inc.valid = true;
          inc.version.fetch_add(1);
        }
        if (inc.value >= ceiling) done = true;
      }
      refresh();
      return done.load();
    });
  }
}

}  // namespace detail

/// Exact q(G): the best worst-vertex degree ratio over all nontrivial partitions.
///
/// The pruned search is branch and bound: once a partition of quality q* is
/// known, every vertex may keep only as many crossing neighbours as still lets
/// it score strictly above q*, and branches that cannot honour those caps are
/// cut. Vertex 0 is always on side 1. Exceeding the budget throws
/// budget_exceeded; no partial answer is ever returned as exact.
inline SolveResult solve_q(const Graph& g, const SolveOptions& options = {}) {
  detail::require_searchable(g);
  if (options.method == SolveMethod::enumeration) return detail::solve_by_enumeration(g, options.budget);

  const int n = g.order();
  const bool connected = is_connected(g);
  const Ratio ceiling = connected ? detail::edge_bound(g) : Ratio(1);

  detail::Incumbent inc;
  if (auto seed = connectivity_partition(g)) {
    inc.value = seed->quality;
    Mask second = 0;
    for (Vertex v = 0; v < n; ++v)
      if (seed->partition.side(v) != seed->partition.side(0)) second |= bit(v);
    inc.second = second;
    inc.valid = true;
    if (inc.value >= ceiling) return {inc.value, Bipartition::from_mask(n, inc.second), 0, SolveMethod::pruned_search};
  }

  detail::State root;
  root.side[0] = bit(0);
  std::atomic<std::uint64_t> counter{0};
  std::atomic<bool> done{false};
  std::atomic<std::size_t> next{0};

  const int jobs = std::max(1, options.jobs);
  std::vector<detail::State> starts;
  if (jobs == 1) {
    starts.push_back(root);
  } else {
    detail::CutSearch splitter(g, options.budget);
    splitter.caps = inc.valid ? detail::caps_above(g, inc.value) : detail::CrossCaps::uniform(n, g.max_degree());
    int depth = std::min(n - 1, static_cast<int>(std::bit_width(static_cast<unsigned>(jobs))) + 3);
    starts = splitter.frontier(root, depth);
  }

  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    try {
      detail::bound_from(g, starts, next, inc, ceiling, done, options.budget, counter);
    } catch (...) {
      std::lock_guard lock(failure_mu);
      if (!failure) failure = std::current_exception();
      done = true;
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  if (!inc.valid) throw internal_error("search finished without any nontrivial partition");
  return {inc.value, Bipartition::from_mask(n, inc.second), counter.load(), SolveMethod::pruned_search};
}

struct DecideResult {
  bool yes = false;
  std::optional<Bipartition> witness;  // present iff yes
  std::uint64_t explored = 0;
};

/// Is q(G) >= q? Stops at the first partition whose every vertex reaches q.
inline DecideResult decide(const Graph& g, const Ratio& q, std::uint64_t budget = default_budget) {
  if (!(q > Ratio(0)) || q > Ratio(1)) throw parameter_error("threshold must satisfy 0 < q <= 1");
  detail::require_searchable(g);
  detail::CutSearch search(g, budget);
  search.caps = detail::caps_at_least(g, q);
  detail::State root;
  root.side[0] = bit(0);
  DecideResult out;
  search.run(root, [&](const detail::State& st) {
    out.witness = Bipartition::from_mask(g.order(), st.side[1]);
    return true;
  });
  out.yes = out.witness.has_value();
  out.explored = search.explored();
  return out;
}

struct MatchingCutOptions {
  std::uint64_t budget = default_budget;
  // Use the factor rule on graphs that carry product provenance.
  bool use_product_rule = true;
};

namespace detail {

inline MatchingCutCertificate cut_from_partition(const Graph& g, Bipartition p, std::uint64_t explored,
                                                 MatchingCutCertificate::Basis basis) {
  MatchingCutCertificate c;
  c.verdict = MatchingCutCertificate::Verdict::has_cut;
  c.basis = basis;
  c.crossing_edges = crossing_edges(g, p);
  c.partition = std::move(p);
  c.explored = explored;
  if (!is_matching(g, c.crossing_edges) || c.crossing_edges.empty())
    throw internal_error("constructed cut is not a matching-cut");
  return c;
}

/// Lifts a partition of one factor to G □ H by copying whole fibers.
inline Bipartition lift_partition(const Graph& product, const Bipartition& factor_partition, FiberSide factor) {
  const auto& info = require_product(product);
  std::vector<std::uint8_t> sides(static_cast<std::size_t>(product.order()));
  for (Vertex v = 0; v < product.order(); ++v) {
    Vertex g = v / info.right.order();
    Vertex h = v % info.right.order();
    sides[static_cast<std::size_t>(v)] =
        static_cast<std::uint8_t>(factor_partition.side(factor == FiberSide::left ? g : h));
  }
  return Bipartition(std::move(sides));
}

inline MatchingCutCertificate search_matching_cut(const Graph& g, std::uint64_t budget) {
  CutSearch search(g, budget);
  search.caps = CrossCaps::uniform(g.order(), 1);
  State root;
  root.side[0] = bit(0);
  std::optional<Bipartition> found;
  search.run(root, [&](const State& st) {
    found = Bipartition::from_mask(g.order(), st.side[1]);
    return true;
  });
  if (found) return cut_from_partition(g, *found, search.explored(), MatchingCutCertificate::Basis::exhaustive_search);
  MatchingCutCertificate c;
  c.explored = search.explored();
  return c;
}

}  // namespace detail

struct ProductCutResult {
  bool has_cut = false;
  MatchingCutCertificate left;
  MatchingCutCertificate right;
  std::optional<Bipartition> lifted;  // matching-cut of G □ H when has_cut
};

MatchingCutCertificate find_matching_cut(const Graph& g, const MatchingCutOptions& options = {});

/// G □ H has a matching-cut iff G or H has one; a factor cut lifts fiber-wise.
inline ProductCutResult product_matching_cut(const Graph& left, const Graph& right,
                                             const MatchingCutOptions& options = {}) {
  if (!is_connected(left) || !is_connected(right)) throw precondition_error("product factors must be connected");
  ProductCutResult r;
  r.left = find_matching_cut(left, options);
  r.right = find_matching_cut(right, options);
  r.has_cut = r.left.has_cut() || r.right.has_cut();
  if (r.has_cut) {
    Graph p = cartesian_product(left, right);
    r.lifted = r.left.has_cut() ? detail::lift_partition(p, *r.left.partition, FiberSide::left)
                                : detail::lift_partition(p, *r.right.partition, FiberSide::right);
  }
  return r;
}

/// Decides whether a connected graph has a matching-cut (a nontrivial partition
/// in which every vertex has at most one neighbour across).
///
/// Product graphs are answered from their factors when `use_product_rule` is
/// set; everything else is searched exhaustively with every crossing cap at 1.
inline MatchingCutCertificate find_matching_cut(const Graph& g, const MatchingCutOptions& options) {
  if (!is_connected(g)) throw precondition_error("matching-cut search needs a connected graph");
  detail::require_searchable(g);
  if (options.use_product_rule && g.product() != nullptr) {
    const auto& info = *g.product();
    auto factors = product_matching_cut(info.left, info.right, options);
    std::uint64_t explored = factors.left.explored + factors.right.explored;
    if (factors.has_cut)
      return detail::cut_from_partition(g, *factors.lifted, explored, MatchingCutCertificate::Basis::product_lemma);
    MatchingCutCertificate c;
    c.basis = MatchingCutCertificate::Basis::product_lemma;
    c.explored = explored;
    return c;
  }
  auto cert = detail::search_matching_cut(g, options.budget);
  if (!cert.has_cut() && regular_degree(g) == 3) {
    // Only K4 and K_{3,3} are cubic and matching-cut free.
    bool exception = g.order() == 4 || (g.order() == 6 && is_bipartite(g));
    if (!exception) throw internal_error("cubic graph without matching-cut outside {K4, K3,3}");
  }
  return cert;
}

}  // namespace degratio
