#include <gtest/gtest.h>

#include "localflow/errors.hpp"
#include "localflow/experiments.hpp"
#include "localflow/generators.hpp"
#include "localflow/graph_io.hpp"
#include "localflow/max_flow.hpp"

using namespace localflow;

namespace {

int max_degree(const ColoredGraph& g) {
  int best = 0;
  for (NodeIndex v = 0; v < static_cast<NodeIndex>(g.node_count()); ++v) {
    best = std::max(best, static_cast<int>(g.arcs_from(v).size()));
  }
  return best;
}

}  // namespace

TEST(Generate, PathBundleKnownValue) {
  InstanceSpec spec;
  spec.family = Family::kPathBundle;
  spec.bottlenecks = {2, 3, 4};
  const auto inst = generate(spec);
  EXPECT_TRUE(inst.graph.valid());
  ASSERT_TRUE(inst.meta.known_max_flow);
  EXPECT_EQ(*inst.meta.known_max_flow, 9);
  EXPECT_EQ(max_flow(inst.graph).value, 9);
  EXPECT_EQ(inst.graph.count(Color::kSource), 3u);
}

TEST(Generate, RandomBoundedRespectsBounds) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    InstanceSpec spec;
    spec.n = 200;
    spec.d = 4;
    spec.gen_seed = seed;
    const auto g = generate(spec).graph;
    EXPECT_TRUE(g.valid()) << g.validation().summary();
    EXPECT_LE(max_degree(g), 4);
    EXPECT_EQ(g.node_count(), 200u);
    for (const auto& e : g.edges()) {
      EXPECT_LE(e.cap_ab, 5);
      EXPECT_LE(e.cap_ba, 5);
    }
  }
}

TEST(Generate, ColorRatesRoughlyMatch) {
  InstanceSpec spec;
  spec.n = 5000;
  spec.rho_s = 0.2;
  spec.rho_t = 0.1;
  const auto g = generate(spec).graph;
  EXPECT_NEAR(static_cast<double>(g.count(Color::kSource)) / 5000, 0.2, 0.03);
  EXPECT_NEAR(static_cast<double>(g.count(Color::kTarget)) / 5000, 0.1, 0.03);
}

TEST(Generate, EveryFamilyValidAndDeterministic) {
  for (const Family f : {Family::kPathBundle, Family::kGrid, Family::kRandomBounded, Family::kLayered}) {
    InstanceSpec spec;
    spec.family = f;
    spec.n = 120;
    spec.bottlenecks = {1, 5};
    spec.gen_seed = 42;
    const auto a = generate(spec);
    const auto b = generate(spec);
    EXPECT_TRUE(a.graph.valid()) << to_string(f) << ": " << a.graph.validation().summary();
    EXPECT_LE(max_degree(a.graph), spec.d);
    EXPECT_EQ(graph_to_json(a.graph, a.meta).dump(), graph_to_json(b.graph, b.meta).dump());
    spec.gen_seed = 43;
    if (f != Family::kPathBundle) {
      EXPECT_NE(graph_to_json(generate(spec).graph).dump(), graph_to_json(a.graph).dump());
    }
  }
}

TEST(Generate, LayeredPutsSourcesFirstTargetsLast) {
  InstanceSpec spec;
  spec.family = Family::kLayered;
  spec.n = 40;
  spec.layers = 4;
  const auto g = generate(spec).graph;
  EXPECT_EQ(g.count(Color::kSource), 10u);
  EXPECT_EQ(g.count(Color::kTarget), 10u);
  EXPECT_GT(max_flow(g).value, 0);
}

TEST(Generate, InfeasibleSpecs) {
  InstanceSpec spec;
  spec.rho_s = 0.7;
  spec.rho_t = 0.4;
  EXPECT_THROW(generate(spec), InputError);
  spec = InstanceSpec{};
  spec.family = Family::kPathBundle;
  EXPECT_THROW(generate(spec), InputError);
  spec.bottlenecks = {6};
  EXPECT_THROW(generate(spec), InputError);
  spec = InstanceSpec{};
  spec.family = Family::kGrid;
  spec.d = 3;
  EXPECT_THROW(generate(spec), InputError);
  spec = InstanceSpec{};
  spec.m_ticks = 0;
  EXPECT_THROW(generate(spec), InputError);
}

TEST(Generate, FamilyNames) {
  EXPECT_EQ(parse_family("layered"), Family::kLayered);
  EXPECT_STREQ(to_string(Family::kPathBundle), "path_bundle");
  EXPECT_THROW(parse_family("torus"), InputError);
}

TEST(Generate, DefaultRandomFamily) {
  const auto spec = default_random_family(3);
  EXPECT_EQ(spec.family, Family::kRandomBounded);
  EXPECT_EQ(spec.d, 4);
  EXPECT_EQ(spec.m_ticks, 5);
  EXPECT_EQ(spec.gen_seed, 3u);
  EXPECT_TRUE(generate(spec).graph.valid());
}
