#pragma once

#include <initializer_list>
#include <string>
#include <tuple>
#include <vector>

#include "localflow/generators.hpp"
#include "localflow/graph.hpp"

namespace testing_support {

using namespace localflow;

// Nodes 0..colors.size()-1 colored by 'R', 'S', 'T'; edges (a, b, cap_ab,
// cap_ba) get ids 0, 1, ... in order.
inline ColoredGraph make_graph(const std::string& colors,
                               std::initializer_list<std::tuple<NodeId, NodeId, Ticks, Ticks>> edges,
                               int d = 4, Ticks m = 5) {
  std::vector<NodeSpec> nodes;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    const Color c = colors[i] == 'S' ? Color::kSource : colors[i] == 'T' ? Color::kTarget : Color::kRegular;
    nodes.push_back({static_cast<NodeId>(i), c});
  }
  std::vector<EdgeSpec> es;
  EdgeId id = 0;
  for (const auto& [a, b, ab, ba] : edges) es.push_back({id++, a, b, ab, ba});
  return ColoredGraph(std::move(nodes), std::move(es), d, m);
}

inline ColoredGraph random_graph(std::uint64_t seed, int n, Ticks m = 5, double rho = 0.2,
                                 int rounds = 0) {
  InstanceSpec spec;
  spec.family = Family::kRandomBounded;
  spec.n = n;
  spec.m_ticks = m;
  spec.rho_s = rho;
  spec.rho_t = rho;
  spec.rounds = rounds;
  spec.gen_seed = seed;
  return generate(spec).graph;
}

}  // namespace testing_support
