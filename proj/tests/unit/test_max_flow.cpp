#include <gtest/gtest.h>

#include "../oracles.hpp"
#include "localflow/errors.hpp"
#include "localflow/max_flow.hpp"
#include "support.hpp"

using namespace localflow;
using testing_support::make_graph;
using testing_support::random_graph;

TEST(MaxFlow, SingleEdge) {
  const auto g = make_graph("ST", {{0, 1, 7, 0}}, 1, 7);
  const auto r = max_flow(g);
  EXPECT_EQ(r.value, 7);
  EXPECT_EQ(r.residual_cut, (std::vector<NodeId>{0}));
}

TEST(MaxFlow, DisjointPathsSumBottlenecks) {
  InstanceSpec spec;
  spec.family = Family::kPathBundle;
  spec.bottlenecks = {3, 1, 4, 2};
  spec.path_length = 4;
  spec.n = 30;
  const auto inst = generate(spec);
  EXPECT_EQ(max_flow(inst.graph).value, 10);
  EXPECT_EQ(inst.meta.known_max_flow, 10);
}

TEST(MaxFlow, NoSourcesOrTargets) {
  EXPECT_EQ(max_flow(make_graph("RRT", {{0, 1, 3, 3}, {1, 2, 3, 3}})).value, 0);
  EXPECT_EQ(max_flow(make_graph("SRR", {{0, 1, 3, 3}, {1, 2, 3, 3}})).value, 0);
}

TEST(MaxFlow, SourcesAndTargetsMayRelay) {
  // S0 -> S1 -> T2 -> T3: flow can pass through a source and a target.
  const auto g = make_graph("SSTT", {{0, 1, 2, 0}, {1, 2, 5, 0}, {2, 3, 1, 0}});
  EXPECT_EQ(max_flow(g).value, 5);
}

TEST(MaxFlow, InvalidGraphThrows) {
  EXPECT_THROW(max_flow(make_graph("ST", {{0, 1, 9, 0}}, 1, 3)), PreconditionError);
}

TEST(MaxFlow, AgreesWithExhaustiveSearchOnTinyGraphs) {
  int checked = 0;
  for (std::uint64_t seed = 1; checked < 40; ++seed) {
    InstanceSpec spec;
    spec.n = 4 + static_cast<int>(seed % 4);
    spec.d = 3;
    spec.m_ticks = 2;
    spec.rho_s = 0.3;
    spec.rho_t = 0.3;
    spec.gen_seed = seed;
    const auto g = generate(spec).graph;
    if (oracle::assignment_count(g) > 200000) continue;
    EXPECT_EQ(max_flow(g).value, oracle::max_flow_exhaustive(g)) << "seed " << seed;
    ++checked;
  }
}

TEST(MaxFlow, CertificatesOnRandomGraphs) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto g = random_graph(seed, 12, 3, 0.25);
    const auto r = max_flow(g);
    EXPECT_TRUE(validate_flow(g, r.flow).ok());
    EXPECT_EQ(r.value, flow_value(g, r.flow));
    EXPECT_EQ(r.value, oracle::min_cut_brute(g)) << "seed " << seed;
    EXPECT_EQ(r.value, cut_capacity(g, r.residual_cut));
    EXPECT_FALSE(shortest_augmenting_path_length(g, r.flow));
  }
}

TEST(MaxFlow, LargerInstanceCertificate) {
  const auto g = random_graph(77, 2000);
  const auto r = max_flow(g);
  EXPECT_TRUE(validate_flow(g, r.flow).ok());
  EXPECT_EQ(r.value, cut_capacity(g, r.residual_cut));
  EXPECT_FALSE(shortest_augmenting_path_length(g, r.flow));
}

TEST(ShortestAugmentingPath, Examples) {
  const auto g = make_graph("SRT", {{0, 1, 2, 0}, {1, 2, 2, 0}});
  EXPECT_EQ(shortest_augmenting_path_length(g, Flow(g)), 2);
  EXPECT_FALSE(shortest_augmenting_path_length(g, Flow(g), 1));

  const auto st = make_graph("ST", {{0, 1, 3, 0}});
  const std::vector<std::pair<EdgeId, Ticks>> full{{0, 3}};
  EXPECT_FALSE(shortest_augmenting_path_length(st, Flow::from_edge_values(st, full)));
}

TEST(ShortestAugmentingPath, UsesReverseResidualArcs) {
  // Pushing along 0-1-2-3 blocks the short routes; the residual path 0-2-1-3
  // uses edge 1 backwards.
  const auto g = make_graph("SRRT", {{0, 1, 1, 0}, {1, 2, 1, 0}, {2, 3, 1, 0}, {0, 2, 1, 0}, {1, 3, 1, 0}});
  const std::vector<std::pair<EdgeId, Ticks>> v{{0, 1}, {1, 1}, {2, 1}};
  const Flow f = Flow::from_edge_values(g, v);
  EXPECT_EQ(shortest_augmenting_path_length(g, f), 3);
  EXPECT_EQ(max_flow(g).value, 2);
}

TEST(ShortestAugmentingPath, RejectsInvalidFlow) {
  const auto g = make_graph("SRT", {{0, 1, 2, 0}, {1, 2, 2, 0}});
  const std::vector<std::pair<EdgeId, Ticks>> v{{0, 1}};
  EXPECT_THROW(shortest_augmenting_path_length(g, Flow::from_edge_values(g, v)), PreconditionError);
}
