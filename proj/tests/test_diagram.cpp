#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "braidcount/diagram.hpp"
#include "braidcount/fuzz.hpp"

using namespace braidcount;

namespace {

// Independent connectivity oracle: follow the curve from c_{0,1} through
// the degree-2 graph and check that it visits every point.
bool walk_oracle(const VirtualCoordinates& c) {
  const ArcGraph g = build_arc_graph(c);
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.node_count()));
  for (const Arc& a : g.arcs) {
    adj[static_cast<std::size_t>(a.u)].push_back(a.v);
    adj[static_cast<std::size_t>(a.v)].push_back(a.u);
  }
  int prev = -1, cur = g.node(0, 1), seen = 1;
  while (true) {
    int next = -1;
    for (int y : adj[static_cast<std::size_t>(cur)]) {
      if (y != prev) next = y;
    }
    if (next < 0 || next == g.node(0, 1)) break;
    prev = cur;
    cur = next;
    ++seen;
    if (seen > g.node_count()) return false;
  }
  return seen == g.node_count();
}

bool has_arc(const ArcGraph& g, NodeRef u, NodeRef v, ArcRule rule) {
  const int x = g.node(u), y = g.node(v);
  return std::any_of(g.arcs.begin(), g.arcs.end(), [&](const Arc& a) {
    return a.rule == rule && ((a.u == x && a.v == y) || (a.u == y && a.v == x));
  });
}

}  // namespace

TEST(ArcGraph, AllZeroIsAPath) {
  const auto g = build_arc_graph(validate(2, {0, 0, 0, 0, 0}));
  EXPECT_EQ(g.node_count(), 3);
  EXPECT_EQ(g.arcs.size(), 2u);
  EXPECT_TRUE(has_arc(g, {0, 1}, {1, 1}, ArcRule::cross));
  EXPECT_TRUE(has_arc(g, {1, 1}, {2, 1}, ArcRule::cross));
  EXPECT_EQ(component_count(g), 1);
}

TEST(ArcGraph, SigmaOneArcs) {
  const auto g = build_arc_graph(validate(2, {0, 0, 1, 1, 0}));
  EXPECT_TRUE(has_arc(g, {1, 1}, {1, 2}, ArcRule::right_box));
  EXPECT_TRUE(has_arc(g, {0, 1}, {1, 3}, ArcRule::cross));
  EXPECT_TRUE(has_arc(g, {1, 1}, {2, 1}, ArcRule::straight));
  EXPECT_TRUE(has_arc(g, {1, 2}, {1, 3}, ArcRule::left_box));
  EXPECT_EQ(g.arcs.size(), 4u);
  EXPECT_EQ(component_count(g), 1);
  EXPECT_TRUE(tightness_check(g));
}

TEST(ArcGraph, ComponentExamples) {
  EXPECT_EQ(component_count(build_arc_graph(validate(2, {0, 1, 1, 1, 0}))), 2);
  EXPECT_EQ(component_count(build_arc_graph(validate(3, {0, 0, 1, 0, 0, 0, 0}))), 2);
  EXPECT_EQ(component_count(build_arc_graph(validate(3, {0, 0, 2, 3, 1, 0, 0}))), 1);
}

TEST(Actuality, TwoStrandExamples) {
  EXPECT_TRUE(is_actual(validate(2, {0, 0, 0, 0, 0})));
  for (int k = 1; k <= 5; ++k) {
    EXPECT_TRUE(is_actual(validate(2, {0, 0, k, 1, 0}))) << k;
    EXPECT_TRUE(is_actual(validate(2, {0, 1, k, 0, 0}))) << k;
    EXPECT_FALSE(is_actual(validate(2, {0, 1, k, 1, 0}))) << k;
    EXPECT_FALSE(is_actual(validate(2, {0, 0, k, 0, 0}))) << k;
  }
}

TEST(Actuality, KernelAgreesWithWalkOracle) {
  std::mt19937_64 rng(5);
  ActualityKernel kernel;
  for (int t = 0; t < 20000; ++t) {
    const auto c = random_coordinates(6, 14, rng);
    const bool a = is_actual(c);
    ASSERT_EQ(a, walk_oracle(c)) << c.to_string();
    ASSERT_EQ(a, kernel.is_actual(c)) << c.to_string();
  }
}

TEST(Actuality, ClosingPreservesComponents) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 3000; ++t) {
    const auto c = random_coordinates(6, 10, rng);
    EXPECT_EQ(component_count(build_arc_graph(c, true)), component_count(build_arc_graph(c, false)))
        << c.to_string();
  }
}

TEST(Structure, FuzzedTuplesSatisfyInvariants) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 5000; ++t) {
    const auto c = random_coordinates(7, 12, rng);
    const auto open = build_arc_graph(c, false);
    const auto closed = build_arc_graph(c, true);
    ASSERT_TRUE(tightness_check(open)) << c.to_string();
    ASSERT_TRUE(tightness_check(closed)) << c.to_string();
    ASSERT_TRUE(degree_check(open)) << c.to_string();
    ASSERT_TRUE(degree_check(closed)) << c.to_string();
    ASSERT_TRUE(non_interleaving(open)) << c.to_string();
    ASSERT_TRUE(non_interleaving(closed)) << c.to_string();
    // open graph: one arc fewer than points
    ASSERT_EQ(static_cast<int>(open.arcs.size()), open.node_count() - 1);
    ASSERT_EQ(closed.arcs.size(), static_cast<std::size_t>(closed.node_count()));
  }
}

TEST(Structure, TightnessVacuousForAllZero) {
  const auto g = build_arc_graph(validate(4, {0, 0, 0, 0, 0, 0, 0, 0, 0}));
  EXPECT_TRUE(tightness_check(g));
  EXPECT_TRUE(std::none_of(g.arcs.begin(), g.arcs.end(),
                           [&](const Arc& a) { return g.nodes[static_cast<std::size_t>(a.u)].line ==
                                                      g.nodes[static_cast<std::size_t>(a.v)].line; }));
}

TEST(Structure, DetectsCorruptedGraphs) {
  auto g = build_arc_graph(validate(2, {0, 0, 1, 1, 0}));
  auto moved = g;
  moved.punctures[0] = moved.punctures[1];
  EXPECT_FALSE(tightness_check(moved));
  auto dropped = g;
  dropped.arcs.pop_back();
  EXPECT_FALSE(degree_check(dropped));
  // two crossing chords in zone 1
  auto crossed = g;
  crossed.arcs.push_back(Arc{g.node(1, 1), g.node(1, 3), 1, ArcRule::right_box});
  crossed.arcs.push_back(Arc{g.node(1, 2), g.node(0, 1), 1, ArcRule::cross});
  EXPECT_FALSE(non_interleaving(crossed));
}

TEST(Structure, ActualityInvariantUnderSymmetries) {
  std::mt19937_64 rng(8);
  ActualityKernel kernel;
  for (int t = 0; t < 20000; ++t) {
    const auto c = random_coordinates(6, 12, rng);
    const bool a = kernel.is_actual(c);
    ASSERT_EQ(a, kernel.is_actual(sym_h(c))) << c.to_string();
    ASSERT_EQ(a, kernel.is_actual(sym_v(c))) << c.to_string();
  }
}

TEST(Partition, UnionFindBasics) {
  Partition p(5);
  EXPECT_EQ(p.components(), 5);
  EXPECT_TRUE(p.unite(0, 1));
  EXPECT_TRUE(p.unite(3, 4));
  EXPECT_FALSE(p.unite(1, 0));
  EXPECT_EQ(p.components(), 3);
  EXPECT_EQ(p.find(0), p.find(1));
  EXPECT_NE(p.find(0), p.find(3));
  p.reset(2);
  EXPECT_EQ(p.components(), 2);
  EXPECT_TRUE(p.unite(0, 1));
}

TEST(ArcRule, Names) {
  EXPECT_STREQ(to_string(ArcRule::left_box), "left-box");
  EXPECT_STREQ(to_string(ArcRule::closure), "closure");
}
