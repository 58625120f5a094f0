#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "../oracles.hpp"
#include "localflow/errors.hpp"
#include "localflow/hash.hpp"
#include "support.hpp"

using namespace localflow;
using testing_support::make_graph;
using testing_support::random_graph;

namespace {

bool has_violation(const ValidationReport& r, ViolationKind kind, std::int64_t subject) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const Violation& v) { return v.kind == kind && v.subject == subject; });
}

std::set<NodeId> node_ids(const ColoredGraph& g) {
  std::set<NodeId> out;
  for (const auto& v : g.nodes()) out.insert(v.id);
  return out;
}

}  // namespace

TEST(ValidateGraph, SingleSourceTargetEdgeIsValid) {
  const auto g = make_graph("ST", {{0, 1, 3, 3}}, 2, 3);
  EXPECT_TRUE(validate_graph(g).ok());
  EXPECT_TRUE(g.valid());
}

TEST(ValidateGraph, DegreeBoundExceeded) {
  const auto g = make_graph("RRRR", {{0, 1, 1, 1}, {0, 2, 1, 1}, {0, 3, 1, 1}}, 2, 3);
  const auto r = validate_graph(g);
  ASSERT_FALSE(r.ok());
  EXPECT_TRUE(has_violation(r, ViolationKind::kDegreeExceeded, 0));
  EXPECT_NE(r.summary().find("degree bound exceeded at node 0"), std::string::npos);
}

TEST(ValidateGraph, CapacityAboveBound) {
  const auto g = make_graph("ST", {{0, 1, 4, 0}}, 2, 3);
  const auto r = validate_graph(g);
  EXPECT_TRUE(has_violation(r, ViolationKind::kCapacityAboveBound, 0));
  EXPECT_NE(r.summary().find("capacity above M"), std::string::npos);
}

TEST(ValidateGraph, StructuralViolations) {
  std::vector<NodeSpec> nodes{{0, Color::kSource}, {0, Color::kTarget}, {2, Color::kRegular}};
  std::vector<EdgeSpec> edges{{0, 0, 9, 1, 1}, {1, 2, 2, 1, 1}, {1, 0, 2, -1, 0}};
  const ColoredGraph g(nodes, edges, 4, 5);
  const auto r = validate_graph(g);
  EXPECT_TRUE(has_violation(r, ViolationKind::kDuplicateNode, 0));
  EXPECT_TRUE(has_violation(r, ViolationKind::kUnknownEndpoint, 0));
  EXPECT_TRUE(has_violation(r, ViolationKind::kSelfLoop, 1));
  EXPECT_TRUE(has_violation(r, ViolationKind::kDuplicateEdge, 1));
  EXPECT_TRUE(has_violation(r, ViolationKind::kCapacityNegative, 1));
}

TEST(ValidateGraph, ParallelEdgesAllowed) {
  const auto g = make_graph("ST", {{0, 1, 1, 0}, {0, 1, 2, 0}}, 2, 3);
  EXPECT_TRUE(g.valid());
}

TEST(DirectedEdgeRef, NegationFlipsOrientationOnly) {
  const DirectedEdgeRef e{7, Orientation::kAB};
  EXPECT_EQ((-e).edge, 7);
  EXPECT_EQ((-e).orientation, Orientation::kBA);
  EXPECT_EQ(-(-e), e);
}

TEST(OutEdges, IsolatedNodeHasNone) {
  const auto g = make_graph("SRT", {{0, 2, 1, 1}});
  EXPECT_TRUE(out_edges(g, 1).empty());
}

TEST(OutEdges, StarCenterOrientedOutward) {
  const auto g = make_graph("RSTR", {{1, 0, 1, 1}, {0, 2, 1, 1}, {3, 0, 1, 1}});
  const auto out = out_edges(g, 0);
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out[0], (DirectedEdgeRef{0, Orientation::kBA}));
  EXPECT_EQ(out[1], (DirectedEdgeRef{1, Orientation::kAB}));
  EXPECT_EQ(out[2], (DirectedEdgeRef{2, Orientation::kBA}));
  for (const auto& e : out) EXPECT_EQ(g.tail(*g.find_arc(e)), *g.find_node(0));
}

TEST(OutEdges, UnknownNodeThrows) {
  const auto g = make_graph("ST", {{0, 1, 1, 1}});
  EXPECT_THROW(out_edges(g, 5), PreconditionError);
}

TEST(Neighborhood, RadiusZeroIsCenterOnly) {
  const auto g = make_graph("SRRT", {{0, 1, 1, 1}, {1, 2, 1, 1}, {2, 3, 1, 1}});
  const auto h = neighborhood(g, NodeId{1}, 0);
  EXPECT_EQ(node_ids(h.subgraph), (std::set<NodeId>{1}));
  EXPECT_EQ(h.subgraph.edge_count(), 0u);
}

TEST(Neighborhood, PathRadiusOne) {
  const auto g = make_graph("SRRT", {{0, 1, 1, 1}, {1, 2, 1, 1}, {2, 3, 1, 1}});
  const auto h = neighborhood(g, NodeId{1}, 1);
  EXPECT_EQ(node_ids(h.subgraph), (std::set<NodeId>{0, 1, 2}));
  ASSERT_EQ(h.subgraph.edge_count(), 2u);
  EXPECT_EQ(h.subgraph.edges()[0].id, 0);
  EXPECT_EQ(h.subgraph.edges()[1].id, 1);
}

TEST(Neighborhood, EdgeCenterUsesBothEndpoints) {
  const auto g = make_graph("SRRRT", {{0, 1, 1, 1}, {1, 2, 1, 1}, {2, 3, 1, 1}, {3, 4, 1, 1}});
  const auto h = neighborhood(g, DirectedEdgeRef{1, Orientation::kBA}, 1);
  EXPECT_EQ(node_ids(h.subgraph), (std::set<NodeId>{0, 1, 2, 3}));
  EXPECT_THROW(neighborhood(g, DirectedEdgeRef{9, Orientation::kAB}, 1), PreconditionError);
  EXPECT_THROW(neighborhood(g, NodeId{1}, -1), PreconditionError);
}

TEST(Neighborhood, GridMatchesAllPairsDistances) {
  InstanceSpec spec;
  spec.family = Family::kGrid;
  spec.width = 20;
  spec.height = 20;
  spec.gen_seed = 3;
  const auto g = generate(spec).graph;
  const auto dist = oracle::all_pairs_hops(g);
  SplitMix64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const NodeId c = g.nodes()[rng.below(g.node_count())].id;
    const auto h = neighborhood(g, c, 3);
    std::set<NodeId> expected;
    for (const auto& v : g.nodes()) {
      const auto it = dist.find({c, v.id});
      if (it != dist.end() && it->second <= 3) expected.insert(v.id);
    }
    EXPECT_EQ(node_ids(h.subgraph), expected);
    std::size_t induced = 0;
    for (const auto& e : g.edges()) induced += expected.count(e.a) && expected.count(e.b);
    EXPECT_EQ(h.subgraph.edge_count(), induced);
  }
}

TEST(Neighborhood, SubgraphValidAndMonotoneInRadius) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto g = random_graph(seed, 80);
    const auto dist = oracle::all_pairs_hops(g);
    const auto& e = g.edges()[seed % g.edge_count()];
    std::set<NodeId> previous;
    for (int r = 0; r <= 6; ++r) {
      const auto h = neighborhood(g, DirectedEdgeRef{e.id, Orientation::kAB}, r);
      EXPECT_TRUE(h.subgraph.valid());
      EXPECT_EQ(h.subgraph.degree_bound(), g.degree_bound());
      EXPECT_EQ(h.subgraph.capacity_bound(), g.capacity_bound());
      const auto ids = node_ids(h.subgraph);
      EXPECT_TRUE(std::includes(ids.begin(), ids.end(), previous.begin(), previous.end()));
      for (const auto& v : g.nodes()) {
        int dv = 1 << 20;
        for (NodeId end : {e.a, e.b}) {
          const auto it = dist.find({end, v.id});
          if (it != dist.end()) dv = std::min(dv, it->second);
        }
        EXPECT_EQ(ids.count(v.id) == 1, dv <= r);
      }
      previous = ids;
    }
  }
}

TEST(ValidateFlow, ZeroFlowIsValid) {
  const auto g = random_graph(4, 50);
  EXPECT_TRUE(validate_flow(g, Flow(g)).ok());
  EXPECT_EQ(flow_value(g, Flow(g)), 0);
}

TEST(ValidateFlow, CapacityExceeded) {
  const auto g = make_graph("SRT", {{0, 1, 2, 0}, {1, 2, 5, 0}});
  const std::vector<std::pair<EdgeId, Ticks>> v{{0, 3}, {1, 3}};
  const auto r = validate_flow(g, Flow::from_edge_values(g, v));
  EXPECT_TRUE(has_violation(r, ViolationKind::kCapacityExceeded, 0));
  EXPECT_FALSE(has_violation(r, ViolationKind::kCapacityExceeded, 1));
}

TEST(ValidateFlow, ReverseCapacityChecked) {
  const auto g = make_graph("TS", {{0, 1, 0, 2}});
  const std::vector<std::pair<EdgeId, Ticks>> ok{{0, -2}};
  const std::vector<std::pair<EdgeId, Ticks>> bad{{0, -3}};
  EXPECT_TRUE(validate_flow(g, Flow::from_edge_values(g, ok)).ok());
  EXPECT_FALSE(validate_flow(g, Flow::from_edge_values(g, bad)).ok());
}

TEST(ValidateFlow, UnitFlowThroughRegularNode) {
  const auto g = make_graph("SRT", {{0, 1, 1, 1}, {1, 2, 1, 1}});
  const std::vector<std::pair<EdgeId, Ticks>> v{{0, 1}, {1, 1}};
  const Flow f = Flow::from_edge_values(g, v);
  EXPECT_TRUE(validate_flow(g, f).ok());
  EXPECT_EQ(flow_value(g, f), 1);
}

TEST(ValidateFlow, ConservationAndSignConstraints) {
  const auto g = make_graph("SRT", {{0, 1, 2, 2}, {1, 2, 2, 2}});
  const std::vector<std::pair<EdgeId, Ticks>> leak{{0, 2}, {1, 1}};
  EXPECT_TRUE(has_violation(validate_flow(g, Flow::from_edge_values(g, leak)), ViolationKind::kConservation, 1));
  const std::vector<std::pair<EdgeId, Ticks>> backwards{{0, -1}, {1, -1}};
  const auto r = validate_flow(g, Flow::from_edge_values(g, backwards));
  EXPECT_TRUE(has_violation(r, ViolationKind::kSourceInflow, 0));
  EXPECT_TRUE(has_violation(r, ViolationKind::kTargetOutflow, 2));
}

TEST(ValidateFlow, UnknownOrRepeatedEdgeThrows) {
  const auto g = make_graph("ST", {{0, 1, 1, 1}});
  const std::vector<std::pair<EdgeId, Ticks>> unknown{{4, 1}};
  const std::vector<std::pair<EdgeId, Ticks>> twice{{0, 1}, {0, 1}};
  EXPECT_THROW(Flow::from_edge_values(g, unknown), PreconditionError);
  EXPECT_THROW(Flow::from_edge_values(g, twice), PreconditionError);
  EXPECT_THROW(validate_flow(g, Flow(3)), PreconditionError);
}

TEST(Flow, AntisymmetryIsStructural) {
  const auto g = make_graph("SRT", {{0, 1, 3, 3}, {2, 1, 3, 3}});
  Flow f(g);
  f.push(*g.find_arc({0, Orientation::kAB}), 2);
  f.push(*g.find_arc({1, Orientation::kBA}), 2);
  for (const auto& e : g.edges()) {
    const DirectedEdgeRef ab{e.id, Orientation::kAB};
    EXPECT_EQ(f.at(g, -ab), -f.at(g, ab));
  }
  EXPECT_EQ(f.at(g, {1, Orientation::kAB}), -2);
  EXPECT_TRUE(validate_flow(g, f).ok());
}

TEST(FlowValue, TwoSourcesAddUp) {
  const auto g = make_graph("SSRT", {{0, 2, 2, 0}, {1, 2, 2, 0}, {2, 3, 4, 0}});
  const std::vector<std::pair<EdgeId, Ticks>> v{{0, 2}, {1, 2}, {2, 4}};
  EXPECT_EQ(flow_value(g, Flow::from_edge_values(g, v)), 4);
}

TEST(FlowValue, LinearInTheFlow) {
  const auto g = make_graph("SRRT", {{0, 1, 2, 2}, {0, 2, 2, 2}, {1, 3, 2, 2}, {2, 3, 2, 2}});
  const std::vector<std::pair<EdgeId, Ticks>> a{{0, 1}, {2, 1}};
  const std::vector<std::pair<EdgeId, Ticks>> b{{1, 2}, {3, 2}};
  const std::vector<std::pair<EdgeId, Ticks>> sum{{0, 1}, {1, 2}, {2, 1}, {3, 2}};
  EXPECT_EQ(flow_value(g, Flow::from_edge_values(g, sum)),
            flow_value(g, Flow::from_edge_values(g, a)) + flow_value(g, Flow::from_edge_values(g, b)));
}

TEST(FlowValue, InvalidFlowThrows) {
  const auto g = make_graph("SRT", {{0, 1, 1, 1}, {1, 2, 1, 1}});
  const std::vector<std::pair<EdgeId, Ticks>> v{{0, 1}};
  EXPECT_THROW(flow_value(g, Flow::from_edge_values(g, v)), PreconditionError);
}

TEST(ScaledFlow, CapacitiesScaleWithDenominator) {
  const auto g = make_graph("SRT", {{0, 1, 1, 0}, {1, 2, 1, 0}});
  EXPECT_TRUE(validate_flow(g, ScaledFlow{{3, 3}, 3}).ok());
  EXPECT_FALSE(validate_flow(g, ScaledFlow{{4, 4}, 3}).ok());
  EXPECT_FALSE(validate_flow(g, ScaledFlow{{2, 1}, 3}).ok());
  EXPECT_EQ(flow_value(g, ScaledFlow{{2, 2}, 3}), Rational(2, 3));
}
