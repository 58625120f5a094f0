#include "localflow/estimator.hpp"

#include <algorithm>

#include "localflow/errors.hpp"
#include "localflow/hash.hpp"
#include "localflow/parallel.hpp"

namespace localflow {

void TesterConfig::check() const {
  run_config(0).check();
  if (seeds.empty()) throw PreconditionError("tester needs at least one labeling seed");
  if (k < 1) throw PreconditionError("sample count k must be at least 1");
  if (radius() < s * l + 1) throw PreconditionError("tester radius r must be at least s*l + 1");
}

AveragedFlowValue fbar2_edge(const ColoredGraph& g, const DirectedEdgeRef& e,
                             const TesterConfig& cfg) {
  if (cfg.seeds.empty()) throw PreconditionError("fbar2 needs at least one labeling seed");
  AveragedFlowValue out{0, static_cast<std::int64_t>(cfg.seeds.size())};
  for (const std::uint64_t seed : cfg.seeds) out.sum_ticks += local_f2_edge(g, e, cfg.run_config(seed));
  return out;
}

ScaledFlow assemble_fbar2(const ColoredGraph& g, const TesterConfig& cfg) {
  require_valid(g);
  ScaledFlow out{std::vector<Ticks>(g.edge_count(), 0), static_cast<std::int64_t>(cfg.seeds.size())};
  parallel_for(g.edge_count(), cfg.threads, [&](std::size_t i) {
    out.sum_ab[i] = fbar2_edge(g, {g.edges()[i].id, Orientation::kAB}, cfg).sum_ticks;
  });
  return out;
}

ScaledFlow average_global_f2(const ColoredGraph& g, const TesterConfig& cfg) {
  require_valid(g);
  if (cfg.seeds.empty()) throw PreconditionError("fbar2 needs at least one labeling seed");
  std::vector<Flow> runs(cfg.seeds.size());
  parallel_for(cfg.seeds.size(), cfg.threads, [&](std::size_t j) {
    runs[j] = run_a2(g, cfg.run_config(cfg.seeds[j])).flow;
  });
  ScaledFlow out{std::vector<Ticks>(g.edge_count(), 0), static_cast<std::int64_t>(runs.size())};
  for (const Flow& f : runs) {
    for (std::size_t i = 0; i < g.edge_count(); ++i) out.sum_ab[i] += f.f_ab(i);
  }
  return out;
}

Rational fbar2_value(const ColoredGraph& g, const TesterConfig& cfg) {
  require_valid(g);
  if (cfg.seeds.empty()) throw PreconditionError("fbar2 needs at least one labeling seed");
  std::vector<Ticks> values(cfg.seeds.size(), 0);
  parallel_for(cfg.seeds.size(), cfg.threads, [&](std::size_t j) {
    values[j] = flow_value(g, run_a2(g, cfg.run_config(cfg.seeds[j])).flow);
  });
  Ticks total = 0;
  for (Ticks v : values) total += v;
  return Rational(total, static_cast<std::int64_t>(values.size()));
}

std::vector<NodeIndex> sample_vertices(std::size_t n, std::uint64_t sample_seed, int k) {
  if (n == 0) throw PreconditionError("cannot sample from an empty graph");
  SplitMix64 rng(mix64(sample_seed ^ 0x73616d706c65ULL));
  std::vector<NodeIndex> picks(static_cast<std::size_t>(k));
  for (auto& v : picks) v = static_cast<NodeIndex>(rng.below(n));
  return picks;
}

Tester::Tester(const ColoredGraph& g, TesterConfig cfg)
    : g_(g), cfg_(std::move(cfg)), cache_(g.node_count()) {
  require_valid(g_);
  cfg_.check();
}

AveragedFlowValue Tester::contribution(NodeId v) {
  const auto idx = g_.find_node(v);
  if (!idx) throw PreconditionError("unknown node " + std::to_string(v));
  fill({*idx});
  return {*cache_[*idx], static_cast<std::int64_t>(cfg_.seeds.size())};
}

void Tester::fill(const std::vector<NodeIndex>& picks) {
  std::vector<NodeIndex> todo;
  for (NodeIndex v : picks) {
    if (!cache_[v]) todo.push_back(v);
  }
  std::sort(todo.begin(), todo.end());
  todo.erase(std::unique(todo.begin(), todo.end()), todo.end());
  std::vector<Ticks> sums(todo.size(), 0);
  parallel_for(todo.size(), cfg_.threads, [&](std::size_t k) {
    const NodeIndex v = todo[k];
    if (g_.color(v) != Color::kSource) return;
    // Only h_r(v) is visible from here on.
    const NeighborhoodView hv = neighborhood(g_, g_.node_id(v), cfg_.radius());
    const ColoredGraph& h = hv.subgraph;
    const NodeIndex center = *h.find_node(g_.node_id(v));
    Ticks total = 0;
    for (ArcIndex a : h.arcs_from(center)) total += fbar2_edge(h, h.arc_ref(a), cfg_).sum_ticks;
    sums[k] = total;
  });
  for (std::size_t k = 0; k < todo.size(); ++k) cache_[todo[k]] = sums[k];
}

TesterReport Tester::report_for(const std::vector<NodeIndex>& picks) {
  fill(picks);
  const auto m = static_cast<std::int64_t>(cfg_.seeds.size());
  TesterReport report;
  report.samples.reserve(picks.size());
  Ticks total = 0;
  for (NodeIndex v : picks) {
    const Ticks sum = *cache_[v];
    total += sum;
    report.samples.push_back({g_.node_id(v), g_.color(v) == Color::kSource, Rational(sum, m)});
  }
  report.estimate = Rational(total, m * static_cast<std::int64_t>(picks.size()));
  return report;
}

TesterReport Tester::estimate(std::uint64_t sample_seed, int k) {
  if (k < 1) throw PreconditionError("sample count k must be at least 1");
  return report_for(sample_vertices(g_.node_count(), sample_seed, k));
}

TesterReport Tester::exhaustive() {
  std::vector<NodeIndex> all(g_.node_count());
  for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<NodeIndex>(v);
  return report_for(all);
}

TesterReport tester_g(const ColoredGraph& g, const TesterConfig& cfg) {
  Tester t(g, cfg);
  return t.estimate(cfg.sample_seed, cfg.k);
}

TesterReport tester_g_exhaustive(const ColoredGraph& g, const TesterConfig& cfg) {
  Tester t(g, cfg);
  return t.exhaustive();
}

}  // namespace localflow
