#pragma once

// Monte-Carlo averaged A2 flow over a fixed seed list, and the sampling
// estimator of |f*| / n built on it.

#include <cstdint>
#include <optional>
#include <vector>

#include "localflow/graph.hpp"
#include "localflow/local_flow.hpp"

namespace localflow {

struct AveragedFlowValue {
  Ticks sum_ticks = 0;  // sum of f2(e) over the m seeds
  std::int64_t m = 1;
  Rational value() const { return Rational(sum_ticks, m); }
};

struct TesterConfig {
  int k = 1000;
  std::optional<int> r;  // defaults to s*l + 1
  std::vector<std::uint64_t> seeds;
  std::uint64_t sample_seed = 0;
  int l = 6;
  int s = 3;
  InteriorPolicy interior = InteriorPolicy::kAnyColor;
  int threads = 1;

  int radius() const { return r.value_or(s * l + 1); }
  RunConfig run_config(std::uint64_t seed) const { return {l, s, seed, interior}; }
  void check() const;  // throws PreconditionError
};

// (1/m) sum_j local_f2_edge(g, e, seed_j).
AveragedFlowValue fbar2_edge(const ColoredGraph& g, const DirectedEdgeRef& e,
                             const TesterConfig& cfg);

// The averaged flow on every edge, each value computed locally.
ScaledFlow assemble_fbar2(const ColoredGraph& g, const TesterConfig& cfg);

// The averaged flow assembled from m global A2 runs.
ScaledFlow average_global_f2(const ColoredGraph& g, const TesterConfig& cfg);

// (1/m) sum_j |run_a2(g, seed_j).f2|.
Rational fbar2_value(const ColoredGraph& g, const TesterConfig& cfg);

struct SampleRecord {
  NodeId vertex = 0;
  bool is_source = false;
  Rational contribution{0};  // I(v in S) * sum over out(v) of fbar2(e)
};

struct TesterReport {
  Rational estimate{0};
  std::vector<SampleRecord> samples;
};

// Estimator of |f*|/n from k uniformly sampled radius-r neighborhoods.
// Per-vertex contributions are memoized: a contribution depends only on
// h_r(v) and the seed list, so repeated samples and repeated estimates reuse
// it.
class Tester {
 public:
  Tester(const ColoredGraph& g, TesterConfig cfg);

  // k vertices drawn with replacement from V using sample_seed.
  TesterReport estimate(std::uint64_t sample_seed, int k);
  // Every vertex once (no sampling).
  TesterReport exhaustive();

  // Computed from h_r(v) only.
  AveragedFlowValue contribution(NodeId v);

  const TesterConfig& config() const { return cfg_; }

 private:
  TesterReport report_for(const std::vector<NodeIndex>& picks);
  void fill(const std::vector<NodeIndex>& picks);

  const ColoredGraph& g_;
  TesterConfig cfg_;
  std::vector<std::optional<Ticks>> cache_;  // per node index, sum over seeds
};

TesterReport tester_g(const ColoredGraph& g, const TesterConfig& cfg);
TesterReport tester_g_exhaustive(const ColoredGraph& g, const TesterConfig& cfg);

// Vertex indices drawn uniformly with replacement.
std::vector<NodeIndex> sample_vertices(std::size_t n, std::uint64_t sample_seed, int k);

}  // namespace localflow
