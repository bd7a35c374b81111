#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "degratio/degratio.hpp"

using json = nlohmann::ordered_json;
using namespace degratio;

namespace {

enum Exit { ok = 0, usage = 1, precondition = 2, inconclusive = 3, falsified = 4 };

struct InputOptions {
  std::string file;
  std::string named;
  std::uint64_t budget = 0;
  bool json = false;
  int jobs = 1;
};

std::uint64_t effective_budget(const InputOptions& in) {
  if (in.budget > 0) return in.budget;
  if (const char* env = std::getenv("DEGRATIO_BUDGET")) {
    try {
      std::size_t used = 0;
      auto value = std::stoull(env, &used);
      if (used == std::string(env).size() && value > 0) return value;
    } catch (const std::exception&) {
    }
    throw parameter_error("DEGRATIO_BUDGET must be a positive integer");
  }
  return default_budget;
}

Graph load(const InputOptions& in) {
  if (!in.named.empty() && !in.file.empty()) throw parameter_error("give either a graph file or --named, not both");
  if (!in.named.empty()) return named_graph(in.named);
  if (in.file.empty()) throw parameter_error("no input graph (pass a file, '-' for stdin, or --named <id>)");
  if (in.file == "-") return parse_graph(std::cin, "stdin");
  std::ifstream f(in.file);
  if (!f) throw parameter_error("cannot open '" + in.file + "'");
  return parse_graph(f, in.file);
}

json summary(const Graph& g) {
  json s;
  s["name"] = g.name();
  s["n"] = g.order();
  s["m"] = g.size();
  s["min_degree"] = g.order() ? g.min_degree() : 0;
  s["max_degree"] = g.order() ? g.max_degree() : 0;
  auto k = regular_degree(g);
  s["regular"] = k ? json(*k) : json(nullptr);
  s["bipartite"] = is_bipartite(g);
  s["connected"] = is_connected(g);
  return s;
}

json partition_json(const Graph& g, const Bipartition& p) {
  return {{"partition", p.str()}, {"quality", quality_of(g, p).str()}};
}

// Collects the report and prints it as text or JSON.
struct Report {
  std::string command;
  json body = json::object();
  std::vector<std::string> lines;
  bool exact = true;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void line(std::string s) { lines.push_back(std::move(s)); }

  void print(bool as_json, const std::optional<Graph>& g) const {
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (as_json) {
      json out;
      out["command"] = command;
      if (g) out["graph"] = summary(*g);
      out["result"] = body;
      out["exact"] = exact;
      out["wall_ms"] = ms;
      std::cout << out.dump(2) << "\n";
      return;
    }
    for (const auto& l : lines) std::cout << l << "\n";
    if (!exact) std::cout << "inexact: search budget exhausted\n";
  }
};

std::string edges_text(const std::vector<Edge>& es) {
  std::string out;
  for (const Edge& e : es) out += (out.empty() ? "" : " ") + std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1);
  return out;
}

int cmd_solve(const InputOptions& in, Report& r, const Graph& g) {
  auto res = solve_q(g, {effective_budget(in), SolveMethod::pruned_search, in.jobs});
  r.body = partition_json(g, res.optimal_partition);
  r.body["q"] = res.q.str();
  r.body["explored"] = res.explored;
  r.body["method"] = to_string(res.method);
  r.line("q = " + res.q.str());
  r.line("partition " + res.optimal_partition.str());
  return ok;
}

int cmd_decide(const InputOptions& in, Report& r, const Graph& g, const std::string& q_text) {
  Ratio q = Ratio::parse(q_text);
  if (q <= Ratio(0) || q > Ratio(1)) throw parameter_error("q must lie in (0, 1]");
  auto res = decide(g, q, effective_budget(in));
  r.body["q"] = q.str();
  r.body["answer"] = res.yes;
  r.body["explored"] = res.explored;
  r.line(std::string(res.yes ? "yes" : "no") + ": q(G) " + (res.yes ? ">= " : "< ") + q.str());
  if (res.witness) {
    r.body["witness"] = partition_json(g, *res.witness);
    r.line("witness " + res.witness->str());
  }
  return ok;
}

int cmd_bound(const InputOptions& in, Report& r, const Graph& g) {
  ClassBound lb = class_lower_bound(g);
  Ratio ub = edge_upper_bound(g);
  json rules = json::array();
  for (const auto& rule : lb.rules)
    rules.push_back({{"rule", rule.rule}, {"value", rule.value.str()}, {"strict", rule.strict}});
  r.body["lower"] = {{"value", lb.value.str()}, {"strict", lb.strict}, {"rules", rules}};
  r.body["upper"] = ub.str();
  r.line(lb.value.str() + (lb.strict ? " < " : " <= ") + "q(G) <= " + ub.str());
  for (const auto& rule : lb.rules)
    r.line("  " + rule.rule + ": " + (rule.strict ? "> " : ">= ") + rule.value.str());
  if (is_connected(g) && g.order() >= 2) {
    DemandOptions opts;
    opts.budget = effective_budget(in);
    auto w = lower_bound_witness(g, opts);
    r.body["witness"] = partition_json(g, w.partition);
    r.body["witness"]["rule"] = w.rule;
    r.body["witness"]["regime"] = to_string(w.regime);
    r.body["witness"]["method"] = w.method;
    r.line("witness " + w.partition.str() + " (" + w.rule + ", quality " + w.quality.str() + ")");
  }
  return ok;
}

int cmd_matching_cut(const InputOptions& in, Report& r, const Graph& g) {
  auto c = find_matching_cut(g, {effective_budget(in)});
  r.body["verdict"] = c.has_cut() ? "has_cut" : "no_cut";
  r.body["basis"] = c.basis == MatchingCutCertificate::Basis::product_lemma ? "product_lemma" : "exhaustive_search";
  r.body["explored"] = c.explored;
  r.line(c.has_cut() ? "has_cut" : "no_cut");
  if (c.partition) {
    r.body["partition"] = c.partition->str();
    json es = json::array();
    for (const Edge& e : c.crossing_edges) es.push_back({e.u + 1, e.v + 1});
    r.body["crossing_edges"] = es;
    r.line("partition " + c.partition->str());
    r.line("crossing " + edges_text(c.crossing_edges));
  }
  return ok;
}

int cmd_closed_form(const InputOptions& in, Report& r, const Graph& g) {
  auto v = closed_form(g, effective_budget(in));
  if (!v) throw precondition_error("no applicable rule");
  r.body["q"] = v->value.str();
  r.body["rule"] = v->rule;
  r.body["source"] = to_string(v->source);
  r.line("q = " + v->value.str() + " (" + v->rule + ")");
  if (v->witness) {
    r.body["witness"] = partition_json(g, *v->witness);
    r.line("witness " + v->witness->str());
  }
  return ok;
}

struct GenerateOptions {
  std::string construction;
  std::string fixed = "K4";
  bool test_mode = false;
  std::string out;
};

int cmd_generate(const InputOptions& in, Report& r, const Graph& g, const GenerateOptions& o) {
  GadgetInstance inst = [&] {
    if (o.construction == "double_cover") return bipartite_double_cover(g, o.test_mode);
    if (o.construction == "cover_plus_matching") return cover_plus_matching(g, o.test_mode);
    if (o.construction == "twin_expand_K2") return twin_expand_then_K2(g, o.test_mode);
    if (o.construction == "product_fixed_H")
      return product_with_fixed(g, named_graph(o.fixed), o.test_mode, effective_budget(in));
    throw parameter_error("unknown construction '" + o.construction + "'");
  }();
  json sidecar;
  sidecar["construction"] = to_string(inst.construction);
  sidecar["source_hash"] = graph_hash(inst.source);
  sidecar["claim"] = inst.claim;
  if (inst.threshold) sidecar["threshold"] = inst.threshold->str();
  if (inst.fixed) sidecar["fixed"] = {{"name", inst.fixed->name()}, {"hash", graph_hash(*inst.fixed)}};
  sidecar["test_mode"] = inst.test_mode;
  json prov = json::array();
  for (const auto& vs : inst.provenance) {
    json row = json::array();
    for (Vertex v : vs) row.push_back(v + 1);
    prov.push_back(row);
  }
  sidecar["provenance"] = prov;

  std::string text = emit_graph(inst.graph);
  if (o.out.empty()) {
    if (in.json) {
      r.body = sidecar;
      r.body["graph"] = text;
    } else {
      std::cout << text;
    }
    return ok;
  }
  std::ofstream(o.out) << text;
  std::ofstream(o.out + ".json") << sidecar.dump(2) << "\n";
  r.body = sidecar;
  r.body["written"] = {o.out, o.out + ".json"};
  r.line("wrote " + o.out + " (" + std::to_string(inst.graph.order()) + " vertices) and " + o.out + ".json");
  return ok;
}

int cmd_verify(const InputOptions& in, Report& r, const std::string& suite, SuiteOptions o) {
  o.budget = effective_budget(in);
  auto rep = run_suite(suite, o);
  json props = json::array();
  for (const auto& p : rep.properties) {
    json j{{"name", p.name}, {"passed", p.passed()}, {"checked", p.checked}, {"failed", p.failed},
           {"inconclusive", p.inconclusive}};
    if (p.counterexample) {
      j["counterexample"] = emit_graph(*p.counterexample);
      j["detail"] = p.detail;
    }
    if (p.inconclusive) r.exact = false;
    props.push_back(j);
    r.line(std::string(p.passed() ? "PASS " : "FAIL ") + p.name + " (" + std::to_string(p.checked) + " checked" +
           (p.inconclusive ? ", " + std::to_string(p.inconclusive) + " inconclusive" : "") + ")");
    if (p.counterexample) {
      r.line("  " + p.detail);
      std::istringstream text(emit_graph(*p.counterexample));
      for (std::string l; std::getline(text, l);) r.line("  " + l);
    }
  }
  r.body = {{"suite", suite}, {"seed", o.seed}, {"max_n", o.max_n}, {"samples", o.samples}, {"passed", rep.passed()},
            {"properties", props}};
  return rep.passed() ? ok : falsified;
}

void add_input(CLI::App* sub, InputOptions& in) {
  sub->add_option("graph", in.file, "graph file in p/e format, '-' for stdin");
  sub->add_option("--named", in.named, "built-in graph id (K5, C3, petersen, prod:K4,K4, ...)");
  sub->add_option("--budget", in.budget, "search budget in assignments (default: $DEGRATIO_BUDGET or 2^26)");
  sub->add_flag("--json", in.json, "print the report as JSON");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact degree ratio of graph bipartitions"};
  app.require_subcommand(1);
  InputOptions in;

  auto* solve = app.add_subcommand("solve", "compute q(G) with an optimal partition");
  add_input(solve, in);
  solve->add_option("--jobs", in.jobs, "worker threads")->check(CLI::Range(1, 256));

  std::string q_text;
  auto* dec = app.add_subcommand("decide", "is q(G) >= q?");
  add_input(dec, in);
  dec->add_option("--q", q_text, "threshold a/b")->required();

  auto* bound = app.add_subcommand("bound", "class lower bound, edge upper bound and a witness");
  add_input(bound, in);

  auto* cut = app.add_subcommand("matching-cut", "find a matching-cut or certify there is none");
  add_input(cut, in);

  auto* closed = app.add_subcommand("closed-form", "q(G) from a closed formula when one applies");
  add_input(closed, in);

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "build a reduction gadget from a source graph");
  add_input(generate, in);
  generate->add_option("--construction", gen.construction, "double_cover, cover_plus_matching, twin_expand_K2, product_fixed_H")
      ->required();
  generate->add_option("--fixed", gen.fixed, "fixed factor H for product_fixed_H");
  generate->add_flag("--test-mode", gen.test_mode, "waive the degree preconditions");
  generate->add_option("--out", gen.out, "write the gadget here and the sidecar to <out>.json");

  std::string suite;
  SuiteOptions suite_opts;
  auto* verify = app.add_subcommand("verify", "run a property suite");
  verify->add_option("suite", suite, "bounds, closed-forms, matching-cut, products, good-pair, reductions")->required();
  verify->add_option("--max-n", suite_opts.max_n, "largest graph order")->check(CLI::Range(2, 64));
  verify->add_option("--seed", suite_opts.seed, "random seed");
  verify->add_option("--samples", suite_opts.samples, "random graphs per suite")->check(CLI::NonNegativeNumber);
  verify->add_option("--budget", in.budget, "search budget in assignments");
  verify->add_flag("--json", in.json, "print the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  Report r;
  r.command = app.get_subcommands().front()->get_name();
  std::optional<Graph> g;
  auto fail = [&](int code, const std::string& msg) {
    if (in.json) {
      r.body["error"] = msg;
      r.print(true, g);
    }
    std::cerr << "error: " << msg << "\n";
    return code;
  };
  try {
    int code = ok;
    if (*verify) {
      code = cmd_verify(in, r, suite, suite_opts);
    } else {
      g = load(in);
      if (*solve) code = cmd_solve(in, r, *g);
      else if (*dec) code = cmd_decide(in, r, *g, q_text);
      else if (*bound) code = cmd_bound(in, r, *g);
      else if (*cut) code = cmd_matching_cut(in, r, *g);
      else if (*closed) code = cmd_closed_form(in, r, *g);
      else if (*generate) code = cmd_generate(in, r, *g, gen);
    }
    if (!(*generate && gen.out.empty() && !in.json)) r.print(in.json, g);
    return code;
  } catch (const parse_error& e) {
    return fail(usage, e.what());
  } catch (const parameter_error& e) {
    return fail(usage, e.what());
  } catch (const precondition_error& e) {
    return fail(precondition, e.what());
  } catch (const budget_exceeded& e) {
    r.exact = false;
    return fail(inconclusive, e.what());
  } catch (const internal_error& e) {
    return fail(falsified, std::string("internal: ") + e.what());
  }
}
