#pragma once

// Label-ordered augmentation (A1), its chain-skipping variant (A2), the
// per-edge local evaluation of the A2 flow and the locality verifier.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "localflow/graph.hpp"
#include "localflow/paths.hpp"

namespace localflow {

struct RunConfig {
  int l = 6;
  int s = 3;
  std::uint64_t seed = 0;
  InteriorPolicy interior = InteriorPolicy::kAnyColor;

  // l = ceil(2 d M / epsilon) with M = M_ticks * quantum.
  static int length_for_epsilon(const ColoredGraph& g, const Rational& epsilon);
  void check() const;  // throws PreconditionError unless l >= 1 and s >= 1
};

enum class PathAction : std::uint8_t { kAugmented, kSkippedChain, kZeroCapacity };

const char* to_string(PathAction a);

struct TraceEntry {
  std::uint32_t path = 0;  // index into RunTrace::paths
  PathAction action = PathAction::kZeroCapacity;
  Ticks amount = 0;
};

struct RunTrace {
  std::shared_ptr<const LabeledPaths> paths;
  std::vector<TraceEntry> entries;  // in increasing key order
  // Lengths j at which an augmenting path of length <= j survived the
  // length-j pass. Only filled by audited A1 runs; must stay empty.
  std::vector<int> boundary_violations;
};

struct RunResult {
  Flow flow;
  RunTrace trace;
};

// Paths and chain depths shared between runs on the same (graph, l, seed).
struct PreparedRun {
  std::shared_ptr<const LabeledPaths> labeled;
  std::shared_ptr<const ChainDepthTable> depths;  // null unless requested
  int l = 0;
};

PreparedRun prepare_run(const ColoredGraph& g, const RunConfig& cfg, bool with_depths);
// Relabels an already enumerated path set (enumerate_paths(g, l, ...)).
PreparedRun prepare_run(const ColoredGraph& g, const PathSet& paths, int l, std::uint64_t seed,
                        bool with_depths);

RunResult run_a1(const ColoredGraph& g, const RunConfig& cfg, bool audit = false);
RunResult run_a2(const ColoredGraph& g, const RunConfig& cfg);

// Runs on a prepared path set; `skip_depth` = 0 disables skipping (A1),
// otherwise paths with depth >= skip_depth are skipped (A2).
RunResult run_prepared(const ColoredGraph& g, const PreparedRun& prepared, int skip_depth,
                       bool audit);

// Flow on e of A2 run on h_{radius}(e) alone, radius defaulting to s*l.
Ticks local_f2_edge(const ColoredGraph& g, const DirectedEdgeRef& e, const RunConfig& cfg,
                    std::optional<int> radius = std::nullopt);

struct LocalityMismatch {
  DirectedEdgeRef edge;
  Ticks global_value = 0;
  Ticks local_value = 0;
};

struct LocalityReport {
  std::size_t checked = 0;
  std::vector<LocalityMismatch> mismatches;  // in sample order
  bool pass() const { return mismatches.empty(); }
};

struct LocalityOptions {
  int threads = 1;
  std::optional<int> radius;              // negative controls only
  std::optional<std::uint64_t> local_seed;  // negative controls only
};

LocalityReport verify_locality(const ColoredGraph& g, const RunConfig& cfg,
                               const std::vector<DirectedEdgeRef>& edge_sample,
                               const LocalityOptions& options = {});

// Every edge in its a->b orientation, by edge order. The b->a value is the
// negation, so this is the full edge set for locality checks.
std::vector<DirectedEdgeRef> all_edge_refs(const ColoredGraph& g);
// `count` distinct AB refs drawn with `seed`, sorted; all of them when count is
// nullopt or at least the edge count.
std::vector<DirectedEdgeRef> sample_edge_refs(const ColoredGraph& g, std::uint64_t seed,
                                              std::optional<std::size_t> count);

}  // namespace localflow
