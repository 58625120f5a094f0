#pragma once

// Experiment drivers. Every row is a pure function of (instance, config,
// seeds); wall times are only reported when asked for, so outputs can be
// compared byte for byte.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "localflow/generators.hpp"
#include "localflow/graph.hpp"
#include "localflow/local_flow.hpp"

namespace localflow {

struct NamedInstance {
  std::string id;
  ColoredGraph graph;
  InstanceMetadata meta;
};

NamedInstance make_instance(const InstanceSpec& spec);
// `count` instances of one spec with gen seeds first_seed, first_seed+1, ...
std::vector<NamedInstance> make_instances(InstanceSpec spec, int count, std::uint64_t first_seed);

// The random family the experiments default to: random_bounded, n = 200,
// d = 4, M = 5 ticks, three matching rounds, rho_S = rho_T = 0.05.
InstanceSpec default_random_family(std::uint64_t gen_seed = 1);

std::string seeds_label(const std::vector<std::uint64_t>& seeds);

struct ApproxOptions {
  std::vector<int> ls{2, 4, 6, 8};
  std::vector<int> ss{3};
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
  InteriorPolicy interior = InteriorPolicy::kAnyColor;
  int threads = 1;
  bool timing = false;
};

struct ApproxRow {
  std::string instance;
  std::size_t n = 0;
  int d = 0;
  Ticks m_ticks = 0;
  int l = 0;
  int s = 0;
  std::string seeds;
  Ticks fstar = 0;
  Rational mean_f1{0};
  Rational mean_f2{0};
  Rational mean_gap_f1_f2{0};
  Rational length_bound{0};  // |f*| - d M n / l
  Ticks min_f1 = 0;
  bool length_bound_ok = true;             // every seed: |f1| >= bound
  int residual_short_paths = 0;      // seeds with an augmenting path <= l left
  int boundary_violations = 0;       // length boundaries with a survivor
  int invalid_flows = 0;             // f1/f2/f* failing validate_flow
  double wall_ms = 0;
  bool passed() const {
    return length_bound_ok && residual_short_paths == 0 && boundary_violations == 0 && invalid_flows == 0;
  }
};

std::vector<ApproxRow> experiment_approx(const std::vector<NamedInstance>& instances,
                                         const ApproxOptions& options);
std::string approx_csv(const std::vector<ApproxRow>& rows, bool timing);

struct ChainTailOptions {
  int l = 6;
  std::vector<std::uint64_t> seeds;
  InteriorPolicy interior = InteriorPolicy::kAnyColor;
  int threads = 1;
};

struct ChainTailRow {
  std::string instance;  // "all" for the pooled histogram
  int q = 0;
  std::uint64_t at_least = 0;  // (edge, seed) pairs with max depth >= q
  std::uint64_t total = 0;
  Rational tail() const {
    return total == 0 ? Rational(0)
                      : Rational(static_cast<std::int64_t>(at_least), static_cast<std::int64_t>(total));
  }
};

struct ChainTailResult {
  std::vector<ChainTailRow> rows;    // per instance, q = 1..max+1
  std::vector<ChainTailRow> pooled;  // over all instances
};

// Per (edge, seed): the maximum chain depth over candidate paths through the
// edge (0 when none), tabulated as P(depth >= q).
ChainTailResult experiment_chain_tail(const std::vector<NamedInstance>& instances,
                                      const ChainTailOptions& options);
std::string chain_tail_csv(const ChainTailResult& result);

struct LocalityExperimentOptions {
  std::vector<std::pair<int, int>> ls_pairs{{3, 2}, {4, 3}, {6, 3}};
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
  std::optional<std::size_t> sample;  // edges per run; nullopt = all
  int radius_offset = 0;              // -1 for the s*l - 1 negative control
  InteriorPolicy interior = InteriorPolicy::kAnyColor;
  int threads = 1;
  bool timing = false;
};

struct LocalityRow {
  std::string instance;
  std::size_t n = 0;
  int l = 0;
  int s = 0;
  std::uint64_t seed = 0;
  int radius = 0;
  std::size_t edges_checked = 0;
  std::size_t mismatches = 0;
  std::size_t differing_f1_f2 = 0;  // edges with f1 != f2
  std::size_t skip_violations = 0;  // differing edges with no deep path through them
  double wall_ms = 0;
};

std::vector<LocalityRow> experiment_locality(const std::vector<NamedInstance>& instances,
                                             const LocalityExperimentOptions& options);
std::string locality_csv(const std::vector<LocalityRow>& rows, bool timing);

// Edges where f1 != f2 that no candidate path with chain depth >= s crosses.
// Returned as edge ids; must be empty.
std::vector<EdgeId> skip_structure_violations(const ColoredGraph& g, const PreparedRun& prepared,
                                              const Flow& f1, const Flow& f2, int s);

}  // namespace localflow
