// localflow: command-line driver for the local max-flow library.
//
// Exit codes: 0 success, 1 a checked property failed, 2 bad input.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "localflow/errors.hpp"
#include "localflow/estimator.hpp"
#include "localflow/experiments.hpp"
#include "localflow/generators.hpp"
#include "localflow/graph_io.hpp"
#include "localflow/local_flow.hpp"
#include "localflow/max_flow.hpp"

namespace {

using namespace localflow;
using nlohmann::json;

// Thrown when a checked property fails; carries no input error.
struct CheckFailed {
  std::string message;
};

std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  auto to_u64 = [&](const std::string& t) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
      return static_cast<std::uint64_t>(v);
    } catch (const std::exception&) {
      throw InputError("--seeds: malformed seed '" + t + "'");
    }
  };
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const auto lo = to_u64(text.substr(0, dots));
    const auto hi = to_u64(text.substr(dots + 2));
    if (hi < lo || hi - lo > 1000000) throw InputError("--seeds: bad range '" + text + "'");
    for (auto s = lo; s <= hi; ++s) seeds.push_back(s);
    return seeds;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) seeds.push_back(to_u64(item));
  if (seeds.empty()) throw InputError("--seeds: empty seed list");
  return seeds;
}

std::vector<int> parse_int_list(const std::string& flag, const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError(flag + ": malformed integer '" + item + "'");
    }
  }
  if (out.empty()) throw InputError(flag + ": empty list");
  return out;
}

struct Options {
  std::string graph;
  std::uint64_t seed = 1;
  std::string seeds;
  std::optional<int> l;
  int s = 3;
  std::string epsilon;
  int k = 1000;
  std::optional<int> r;
  std::string out = "text";
  std::optional<int> threads;
  std::string sample;  // empty: all edges, or k samples for the tester
  std::string interior = "any";
  bool timing = false;

  // generate / experiment instances
  std::string family = "random_bounded";
  std::optional<int> n;
  int d = 4;
  Ticks m_ticks = 5;
  std::string quantum = "1/1";
  std::optional<double> rho_s;
  std::optional<double> rho_t;
  Ticks min_cap = 0;
  std::uint64_t gen_seed = 1;
  std::string bottlenecks;
  int path_length = 3;
  int width = 0;
  int height = 0;
  std::optional<int> rounds;
  int layers = 0;
  int instances = 1;

  // run-specific
  std::string trace_file;
  EdgeId edge = 0;
  std::string orientation = "AB";
  int radius_offset = 0;
  std::optional<std::uint64_t> local_seed;
  std::string experiment;
  std::string ls;
  std::string ss;
  std::string pairs;
};

int thread_count(const Options& o) {
  if (o.threads) return std::max(1, *o.threads);
  if (const char* env = std::getenv("LOCALFLOW_THREADS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      throw InputError("LOCALFLOW_THREADS: expected an integer");
    }
  }
  return 1;
}

InteriorPolicy interior_policy(const Options& o) {
  if (o.interior == "any") return InteriorPolicy::kAnyColor;
  if (o.interior == "regular") return InteriorPolicy::kRegularOnly;
  throw InputError("--interior: expected 'any' or 'regular'");
}

ColoredGraph load_graph(const Options& o) {
  if (o.graph.empty()) throw InputError("--graph is required");
  GraphDocument doc = read_graph_file(o.graph);
  if (!doc.graph.valid()) {
    throw InputError("--graph: " + doc.graph.validation().summary());
  }
  return std::move(doc.graph);
}

RunConfig run_config(const Options& o, const ColoredGraph& g) {
  RunConfig cfg;
  cfg.seed = o.seed;
  cfg.s = o.s;
  cfg.interior = interior_policy(o);
  if (!o.epsilon.empty()) {
    const Rational eps = parse_rational(o.epsilon);
    if (eps <= 0) throw InputError("--epsilon: must be positive");
    cfg.l = RunConfig::length_for_epsilon(g, eps);
  }
  if (o.l) cfg.l = *o.l;
  if (cfg.l < 1) throw InputError("--l: must be at least 1");
  if (cfg.s < 1) throw InputError("--s: must be at least 1");
  return cfg;
}

InstanceSpec instance_spec(const Options& o) {
  InstanceSpec spec;
  if (o.family == "default") {
    spec = default_random_family(o.gen_seed);
  } else {
    spec.family = parse_family(o.family);
  }
  if (o.n) spec.n = *o.n;
  if (o.family != "default") {
    spec.d = o.d;
    spec.m_ticks = o.m_ticks;
  }
  spec.quantum = parse_rational(o.quantum);
  if (o.rho_s) spec.rho_s = *o.rho_s;
  if (o.rho_t) spec.rho_t = *o.rho_t;
  spec.min_cap = o.min_cap;
  spec.gen_seed = o.gen_seed;
  if (!o.bottlenecks.empty()) {
    for (int b : parse_int_list("--bottlenecks", o.bottlenecks)) spec.bottlenecks.push_back(b);
  }
  spec.path_length = o.path_length;
  spec.width = o.width;
  spec.height = o.height;
  if (o.rounds) spec.rounds = *o.rounds;
  spec.layers = o.layers;
  return spec;
}

std::vector<NamedInstance> experiment_instances(const Options& o) {
  if (!o.graph.empty()) {
    return {{o.graph, load_graph(o), {}}};
  }
  if (o.instances < 0) throw InputError("--instances: must be non-negative");
  return make_instances(instance_spec(o), o.instances, o.gen_seed);
}

json trace_line(const ColoredGraph& g, const LabeledPaths& labeled, const TraceEntry& e,
                const ChainDepthTable* depths) {
  const AugPathCandidate u = labeled.paths.candidate(g, e.path);
  json edges = json::array();
  for (const auto& ref : u.edges) edges.push_back(to_string(ref));
  json line = {{"nodes", u.nodes},
               {"edges", edges},
               {"length", u.length()},
               {"hash", labeled.labels[e.path]},
               {"action", to_string(e.action)},
               {"amount", e.amount}};
  if (depths) line["depth"] = depths->depth[e.path];
  return line;
}

int cmd_generate(const Options& o) {
  const Instance inst = generate(instance_spec(o));
  std::cout << graph_to_json(inst.graph, inst.meta).dump(1) << '\n';
  return 0;
}

int cmd_maxflow(const Options& o) {
  const ColoredGraph g = load_graph(o);
  const MaxFlowResult r = max_flow(g);
  if (o.out == "json") {
    std::cout << json{{"value", r.value},
                      {"flow", flow_to_json(g, r.flow)},
                      {"residual_cut", r.residual_cut}}
                     .dump(1)
              << '\n';
  } else if (o.out == "csv") {
    std::cout << "id,f_ab\n";
    for (std::size_t i = 0; i < g.edge_count(); ++i) std::cout << g.edges()[i].id << ',' << r.flow.f_ab(i) << '\n';
  } else {
    std::cout << r.value << '\n';
  }
  return 0;
}

int cmd_run(const Options& o, bool chain_skipping) {
  const ColoredGraph g = load_graph(o);
  const RunConfig cfg = run_config(o, g);
  const PreparedRun prepared = prepare_run(g, cfg, chain_skipping || !o.trace_file.empty());
  const RunResult run = run_prepared(g, prepared, chain_skipping ? cfg.s : 0, !chain_skipping);
  const Ticks value = flow_value(g, run.flow);

  if (!o.trace_file.empty()) {
    std::string lines;
    for (const TraceEntry& e : run.trace.entries) {
      lines += trace_line(g, *run.trace.paths, e, prepared.depths.get()).dump() + '\n';
    }
    write_text_file(o.trace_file, lines);
  }
  if (o.out == "json") {
    json doc = {{"algorithm", chain_skipping ? "A2" : "A1"},
                {"l", cfg.l},
                {"seed", cfg.seed},
                {"value", value},
                {"paths", run.trace.entries.size()},
                {"flow", flow_to_json(g, run.flow)}};
    if (chain_skipping) doc["s"] = cfg.s;
    else doc["boundary_violations"] = run.trace.boundary_violations;
    std::cout << doc.dump(1) << '\n';
  } else if (o.out == "csv") {
    std::cout << "id,f_ab\n";
    for (std::size_t i = 0; i < g.edge_count(); ++i) std::cout << g.edges()[i].id << ',' << run.flow.f_ab(i) << '\n';
  } else {
    std::cout << value << '\n';
  }
  if (!run.trace.boundary_violations.empty()) {
    throw CheckFailed{"augmenting path survived a length boundary"};
  }
  return 0;
}

int cmd_paths(const Options& o) {
  const ColoredGraph g = load_graph(o);
  const RunConfig cfg = run_config(o, g);
  const PreparedRun prepared = prepare_run(g, cfg, true);
  const LabeledPaths& labeled = *prepared.labeled;
  for (const std::uint32_t i : labeled.order) {
    const AugPathCandidate u = labeled.paths.candidate(g, i);
    std::cout << json{{"nodes", u.nodes},
                      {"length", u.length()},
                      {"hash", labeled.labels[i]},
                      {"depth", prepared.depths->depth[i]}}
                     .dump()
              << '\n';
  }
  return 0;
}

int cmd_local_f2(const Options& o) {
  const ColoredGraph g = load_graph(o);
  const RunConfig cfg = run_config(o, g);
  if (o.orientation != "AB" && o.orientation != "BA") throw InputError("--orientation: expected AB or BA");
  const DirectedEdgeRef e{o.edge, o.orientation == "AB" ? Orientation::kAB : Orientation::kBA};
  if (!g.find_arc(e)) throw InputError("--edge: unknown edge " + std::to_string(o.edge));
  std::optional<int> radius;
  if (o.radius_offset != 0) radius = std::max(0, cfg.s * cfg.l + o.radius_offset);
  const Ticks v = local_f2_edge(g, e, cfg, radius);
  if (o.out == "json") {
    std::cout << json{{"edge", to_string(e)}, {"value", v}}.dump(1) << '\n';
  } else {
    std::cout << v << '\n';
  }
  return 0;
}

std::optional<std::size_t> sample_count(const Options& o) {
  if (o.sample.empty() || o.sample == "all") return std::nullopt;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(o.sample, &used);
    if (used != o.sample.size()) throw std::invalid_argument(o.sample);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw InputError("--sample: expected a count or 'all'");
  }
}

int cmd_verify_locality(const Options& o) {
  const ColoredGraph g = load_graph(o);
  const RunConfig cfg = run_config(o, g);
  const std::vector<DirectedEdgeRef> sample = sample_edge_refs(g, cfg.seed, sample_count(o));
  LocalityOptions lo;
  lo.threads = thread_count(o);
  if (o.radius_offset != 0) lo.radius = std::max(0, cfg.s * cfg.l + o.radius_offset);
  lo.local_seed = o.local_seed;
  const LocalityReport report = verify_locality(g, cfg, sample, lo);
  if (o.out == "json") {
    json mismatches = json::array();
    for (const auto& m : report.mismatches) {
      mismatches.push_back({{"edge", to_string(m.edge)}, {"global", m.global_value}, {"local", m.local_value}});
    }
    std::cout << json{{"pass", report.pass()}, {"checked", report.checked}, {"mismatches", mismatches}}.dump(1)
              << '\n';
  } else {
    std::cout << (report.pass() ? "pass" : "fail") << " checked=" << report.checked
              << " mismatches=" << report.mismatches.size() << '\n';
    for (const auto& m : report.mismatches) {
      std::cout << "mismatch " << to_string(m.edge) << " global=" << m.global_value
                << " local=" << m.local_value << '\n';
    }
  }
  if (!report.pass()) throw CheckFailed{"locality mismatches found"};
  return 0;
}

int cmd_tester(const Options& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const ColoredGraph g = load_graph(o);
  TesterConfig cfg;
  const RunConfig run = run_config(o, g);
  cfg.l = run.l;
  cfg.s = run.s;
  cfg.interior = run.interior;
  cfg.k = o.k;
  cfg.r = o.r;
  cfg.seeds = parse_seed_list(o.seeds.empty() ? "1..20" : o.seeds);
  cfg.sample_seed = o.seed;
  cfg.threads = thread_count(o);
  if (cfg.k < 1) throw InputError("--k: must be at least 1");
  if (cfg.radius() < cfg.s * cfg.l + 1) throw InputError("--r: must be at least s*l + 1");

  Tester tester(g, cfg);
  const bool exhaustive = o.sample == "all";
  const TesterReport report = exhaustive ? tester.exhaustive() : tester.estimate(cfg.sample_seed, cfg.k);
  if (o.out == "json") {
    json per_sample = json::array();
    for (const auto& s : report.samples) {
      per_sample.push_back({{"vertex", s.vertex}, {"source", s.is_source}, {"contribution", to_string(s.contribution)}});
    }
    json doc = {{"config",
                 {{"k", cfg.k},
                  {"r", cfg.radius()},
                  {"l", cfg.l},
                  {"s", cfg.s},
                  {"seeds", seeds_label(cfg.seeds)},
                  {"sample_seed", cfg.sample_seed},
                  {"exhaustive", exhaustive}}},
                {"estimate", to_string(report.estimate)},
                {"per_sample", per_sample}};
    if (o.timing) {
      doc["wall_time_ms"] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
    std::cout << doc.dump(1) << '\n';
  } else {
    std::cout << to_string(report.estimate) << ' ' << to_decimal(report.estimate, 12) << '\n';
  }
  return 0;
}

int cmd_experiment(const Options& o) {
  const auto instances = experiment_instances(o);
  const int threads = thread_count(o);
  const InteriorPolicy interior = interior_policy(o);
  const std::vector<std::uint64_t> seeds = parse_seed_list(o.seeds.empty() ? "1..5" : o.seeds);
  if (o.experiment == "approx") {
    ApproxOptions ao;
    if (!o.ls.empty()) ao.ls = parse_int_list("--ls", o.ls);
    else if (o.l) ao.ls = {*o.l};
    if (!o.ss.empty()) ao.ss = parse_int_list("--ss", o.ss);
    else ao.ss = {o.s};
    ao.seeds = seeds;
    ao.interior = interior;
    ao.threads = threads;
    ao.timing = o.timing;
    const auto rows = experiment_approx(instances, ao);
    std::cout << approx_csv(rows, o.timing);
    for (const auto& r : rows) {
      if (!r.passed()) throw CheckFailed{"approximation bound failed on " + r.instance};
    }
    return 0;
  }
  if (o.experiment == "chain-tail") {
    ChainTailOptions co;
    co.l = o.l.value_or(6);
    co.seeds = seeds;
    co.interior = interior;
    co.threads = threads;
    std::cout << chain_tail_csv(experiment_chain_tail(instances, co));
    return 0;
  }
  if (o.experiment == "locality") {
    LocalityExperimentOptions lo;
    if (!o.pairs.empty()) {
      lo.ls_pairs.clear();
      std::stringstream ss(o.pairs);
      std::string item;
      while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw InputError("--pairs: expected l:s items");
        const auto l = parse_int_list("--pairs", item.substr(0, colon));
        const auto s = parse_int_list("--pairs", item.substr(colon + 1));
        lo.ls_pairs.emplace_back(l.front(), s.front());
      }
    } else if (o.l) {
      lo.ls_pairs = {{*o.l, o.s}};
    }
    lo.seeds = seeds;
    lo.sample = sample_count(o);
    lo.radius_offset = o.radius_offset;
    lo.interior = interior;
    lo.threads = threads;
    lo.timing = o.timing;
    const auto rows = experiment_locality(instances, lo);
    std::cout << locality_csv(rows, o.timing);
    bool failed = false;
    for (const auto& r : rows) failed |= r.skip_violations > 0 || (o.radius_offset == 0 && r.mismatches > 0);
    if (failed) throw CheckFailed{"locality experiment found violations"};
    return 0;
  }
  throw InputError("experiment: unknown name '" + o.experiment + "' (approx, chain-tail, locality)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local almost-maximum flow: generators, oracle, A1/A2, locality and tester"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;

  app.add_option("--graph", o.graph, "Graph JSON file");
  app.add_option("--seed", o.seed, "Labeling seed (sample seed for tester)");
  app.add_option("--seeds", o.seeds, "Seed list: a,b,c or lo..hi");
  app.add_option("--l", o.l, "Maximum path length");
  app.add_option("--s", o.s, "Chain-depth skip threshold");
  app.add_option("--epsilon", o.epsilon, "Target error; sets l = ceil(2dM/epsilon)");
  app.add_option("--k", o.k, "Tester sample count");
  app.add_option("--r", o.r, "Tester radius (default s*l + 1)");
  app.add_option("--out", o.out, "Output format: text, csv or json");
  app.add_option("--threads", o.threads, "Worker threads (fallback: LOCALFLOW_THREADS)");
  app.add_option("--sample", o.sample, "Edges/vertices to sample: count or all");
  app.add_option("--interior", o.interior, "Interior path colors: any or regular");
  app.add_flag("--timing", o.timing, "Include wall times (breaks byte-identical output)");

  auto* gen = app.add_subcommand("generate", "Generate an instance as graph JSON");
  auto add_instance_flags = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "path_bundle, grid, random_bounded, layered or default");
    sub->add_option("--n", o.n, "Node count");
    sub->add_option("--d", o.d, "Degree bound");
    sub->add_option("--m-ticks", o.m_ticks, "Capacity bound in ticks");
    sub->add_option("--quantum", o.quantum, "Tick quantum p/q");
    sub->add_option("--rho-s", o.rho_s, "Source fraction");
    sub->add_option("--rho-t", o.rho_t, "Target fraction");
    sub->add_option("--min-cap", o.min_cap, "Minimum capacity in ticks");
    sub->add_option("--gen-seed", o.gen_seed, "Generator seed (first seed for --instances)");
    sub->add_option("--bottlenecks", o.bottlenecks, "path_bundle bottlenecks, comma separated");
    sub->add_option("--path-length", o.path_length, "path_bundle edges per path");
    sub->add_option("--width", o.width, "grid width");
    sub->add_option("--height", o.height, "grid height");
    sub->add_option("--rounds", o.rounds, "random_bounded matching rounds");
    sub->add_option("--layers", o.layers, "layered layer count");
  };
  add_instance_flags(gen);

  app.add_subcommand("maxflow", "Exact maximum flow");
  auto* a1 = app.add_subcommand("run-a1", "Label-ordered augmentation");
  a1->add_option("--trace", o.trace_file, "Write the run trace as JSON lines");
  auto* a2 = app.add_subcommand("run-a2", "Label-ordered augmentation with chain skipping");
  a2->add_option("--trace", o.trace_file, "Write the run trace as JSON lines");
  app.add_subcommand("paths", "Dump candidate paths with labels and chain depths (JSON lines)");
  auto* lf2 = app.add_subcommand("local-f2", "A2 flow on one edge computed from h_{s*l}(e)");
  lf2->add_option("--edge", o.edge, "Edge id")->required();
  lf2->add_option("--orientation", o.orientation, "AB or BA");
  lf2->add_option("--radius-offset", o.radius_offset, "Added to the s*l radius");
  auto* vl = app.add_subcommand("verify-locality", "Compare global and local A2 flows edge by edge");
  vl->add_option("--radius-offset", o.radius_offset, "Added to the s*l radius (negative control)");
  vl->add_option("--local-seed", o.local_seed, "Different seed for local runs (negative control)");
  app.add_subcommand("tester", "Sampling estimate of |f*|/n");
  auto* ex = app.add_subcommand("experiment", "Run an experiment: approx, chain-tail, locality");
  ex->add_option("name", o.experiment, "Experiment name")->required();
  add_instance_flags(ex);
  ex->add_option("--instances", o.instances, "Number of generated instances");
  ex->add_option("--ls", o.ls, "approx: l values, comma separated");
  ex->add_option("--ss", o.ss, "approx: s values, comma separated");
  ex->add_option("--pairs", o.pairs, "locality: l:s pairs, comma separated");
  ex->add_option("--radius-offset", o.radius_offset, "locality: added to the s*l radius");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (o.out != "text" && o.out != "csv" && o.out != "json") {
      throw InputError("--out: expected text, csv or json");
    }
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "generate") return cmd_generate(o);
    if (name == "maxflow") return cmd_maxflow(o);
    if (name == "run-a1") return cmd_run(o, false);
    if (name == "run-a2") return cmd_run(o, true);
    if (name == "paths") return cmd_paths(o);
    if (name == "local-f2") return cmd_local_f2(o);
    if (name == "verify-locality") return cmd_verify_locality(o);
    if (name == "tester") return cmd_tester(o);
    if (name == "experiment") return cmd_experiment(o);
  } catch (const CheckFailed& e) {
    std::cerr << "check failed: " << e.message << '\n';
    return 1;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
