#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "localflow/graph.hpp"
#include "localflow/graph_io.hpp"

namespace localflow {

enum class Family : std::uint8_t { kPathBundle, kGrid, kRandomBounded, kLayered };

const char* to_string(Family f);
Family parse_family(const std::string& name);  // throws InputError

struct InstanceSpec {
  Family family = Family::kRandomBounded;
  int n = 200;
  int d = 4;
  Ticks m_ticks = 5;
  Rational quantum{1};
  double rho_s = 0.2;
  double rho_t = 0.2;
  Ticks min_cap = 0;  // capacities are uniform in [min_cap, m_ticks]
  std::uint64_t gen_seed = 1;

  // path_bundle: one disjoint S..T path per bottleneck, path_length edges each
  std::vector<Ticks> bottlenecks;
  int path_length = 3;
  // grid: width x height (0 picks a near-square shape for n)
  int width = 0;
  int height = 0;
  // random_bounded: number of random matchings (0 means d)
  int rounds = 0;
  // layered: layers of equal width, S in the first, T in the last
  int layers = 0;
};

struct Instance {
  ColoredGraph graph;
  InstanceMetadata meta;
};

// Deterministic in spec.gen_seed. Throws InputError on an infeasible spec.
Instance generate(const InstanceSpec& spec);

}  // namespace localflow
