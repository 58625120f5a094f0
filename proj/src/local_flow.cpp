#include "localflow/local_flow.hpp"

#include <algorithm>

#include "localflow/errors.hpp"
#include "localflow/hash.hpp"
#include "localflow/max_flow.hpp"
#include "localflow/parallel.hpp"

namespace localflow {

int RunConfig::length_for_epsilon(const ColoredGraph& g, const Rational& epsilon) {
  if (epsilon <= 0) throw PreconditionError("epsilon must be positive");
  const Rational big_m = g.quantum() * Rational(g.capacity_bound());
  const Rational l = Rational(2 * g.degree_bound()) * big_m / epsilon;
  return static_cast<int>(std::max<std::int64_t>(1, localflow::ceil(l)));
}

void RunConfig::check() const {
  if (l < 1) throw PreconditionError("l must be at least 1");
  if (s < 1) throw PreconditionError("s must be at least 1");
}

const char* to_string(PathAction a) {
  switch (a) {
    case PathAction::kAugmented: return "AUGMENTED";
    case PathAction::kSkippedChain: return "SKIPPED_CHAIN";
    case PathAction::kZeroCapacity: return "ZERO_CAPACITY";
  }
  return "?";
}

namespace {

PreparedRun prepare_labeled(const ColoredGraph& g, LabeledPaths labeled, int l, bool with_depths) {
  PreparedRun prepared;
  prepared.l = l;
  prepared.labeled = std::make_shared<const LabeledPaths>(std::move(labeled));
  if (with_depths) {
    prepared.depths = std::make_shared<const ChainDepthTable>(chain_depth_all(g, *prepared.labeled));
  }
  return prepared;
}

}  // namespace

PreparedRun prepare_run(const ColoredGraph& g, const RunConfig& cfg, bool with_depths) {
  cfg.check();
  return prepare_labeled(g, label_paths(g, enumerate_paths(g, cfg.l, cfg.interior), cfg.seed),
                         cfg.l, with_depths);
}

PreparedRun prepare_run(const ColoredGraph& g, const PathSet& paths, int l, std::uint64_t seed,
                        bool with_depths) {
  if (l < 1) throw PreconditionError("l must be at least 1");
  return prepare_labeled(g, label_paths(g, paths, seed), l, with_depths);
}

RunResult run_prepared(const ColoredGraph& g, const PreparedRun& prepared, int skip_depth,
                       bool audit) {
  if (skip_depth > 0 && !prepared.depths) {
    throw PreconditionError("chain-skipping run needs chain depths");
  }
  RunResult result{Flow(g), {}};
  RunTrace& trace = result.trace;
  const LabeledPaths& labeled = *prepared.labeled;
  trace.entries.reserve(labeled.order.size());

  std::size_t next = 0;
  for (int j = 1; j <= prepared.l; ++j) {
    for (; next < labeled.order.size() && labeled.paths.length(labeled.order[next]) == j; ++next) {
      const std::uint32_t i = labeled.order[next];
      TraceEntry entry{i, PathAction::kZeroCapacity, 0};
      if (skip_depth > 0 && prepared.depths->depth[i] >= skip_depth) {
        entry.action = PathAction::kSkippedChain;
      } else {
        const auto arcs = labeled.paths.arcs(i);
        const Ticks cap = residual_capacity(g, result.flow, arcs);
        if (cap > 0) {
          for (ArcIndex a : arcs) result.flow.push(a, cap);
          entry.action = PathAction::kAugmented;
          entry.amount = cap;
        }
      }
      trace.entries.push_back(entry);
    }
    if (audit && shortest_residual_path_length(g, result.flow, j)) {
      trace.boundary_violations.push_back(j);
    }
  }
  trace.paths = prepared.labeled;
  return result;
}

RunResult run_a1(const ColoredGraph& g, const RunConfig& cfg, bool audit) {
  return run_prepared(g, prepare_run(g, cfg, false), 0, audit);
}

RunResult run_a2(const ColoredGraph& g, const RunConfig& cfg) {
  return run_prepared(g, prepare_run(g, cfg, true), cfg.s, false);
}

Ticks local_f2_edge(const ColoredGraph& g, const DirectedEdgeRef& e, const RunConfig& cfg,
                    std::optional<int> radius) {
  require_valid(g);
  cfg.check();
  if (!g.find_arc(e)) throw PreconditionError("unknown edge " + std::to_string(e.edge));
  const NeighborhoodView h = neighborhood(g, e, radius.value_or(cfg.s * cfg.l));
  const RunResult local = run_a2(h.subgraph, cfg);
  return local.flow.at(h.subgraph, e);
}

std::vector<DirectedEdgeRef> all_edge_refs(const ColoredGraph& g) {
  std::vector<DirectedEdgeRef> refs;
  refs.reserve(g.edge_count());
  for (const auto& e : g.edges()) refs.push_back({e.id, Orientation::kAB});
  return refs;
}

std::vector<DirectedEdgeRef> sample_edge_refs(const ColoredGraph& g, std::uint64_t seed,
                                              std::optional<std::size_t> count) {
  std::vector<DirectedEdgeRef> refs = all_edge_refs(g);
  if (count && *count < refs.size()) {
    SplitMix64 rng(mix64(seed) ^ 0x65646765ULL);
    for (std::size_t i = refs.size(); i > 1; --i) std::swap(refs[i - 1], refs[rng.below(i)]);
    refs.resize(*count);
    std::sort(refs.begin(), refs.end());
  }
  return refs;
}

LocalityReport verify_locality(const ColoredGraph& g, const RunConfig& cfg,
                               const std::vector<DirectedEdgeRef>& edge_sample,
                               const LocalityOptions& options) {
  LocalityReport report;
  report.checked = edge_sample.size();
  if (edge_sample.empty()) return report;
  require_valid(g);
  const RunResult global = run_a2(g, cfg);

  // h(e) = h(-e), so one local run per distinct edge covers both orientations.
  std::vector<EdgeId> distinct;
  for (const auto& e : edge_sample) distinct.push_back(e.edge);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  RunConfig local_cfg = cfg;
  if (options.local_seed) local_cfg.seed = *options.local_seed;
  std::vector<Ticks> local_ab(distinct.size(), 0);
  parallel_for(distinct.size(), options.threads, [&](std::size_t k) {
    local_ab[k] = local_f2_edge(g, {distinct[k], Orientation::kAB}, local_cfg, options.radius);
  });

  for (const auto& e : edge_sample) {
    const auto k = static_cast<std::size_t>(
        std::lower_bound(distinct.begin(), distinct.end(), e.edge) - distinct.begin());
    const Ticks local = e.orientation == Orientation::kAB ? local_ab[k] : -local_ab[k];
    const Ticks glob = global.flow.at(g, e);
    if (local != glob) report.mismatches.push_back({e, glob, local});
  }
  return report;
}

}  // namespace localflow
