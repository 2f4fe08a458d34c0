#include "mrroute/astar.h"

#include <algorithm>
#include <set>

#include "gtest/gtest.h"
#include "mrroute/oracle.h"
#include "testutil.h"

namespace mrroute {
namespace {

using namespace mrroute::testing;

constexpr double kDiag = 158.11388300841898;

TEST(FindRoute, ChainGoesThroughC) {
  const Scenario s = ChainScenario();
  const LinkGraph g = BuildLinkGraph(s);
  for (MetricKind kind : {MetricKind::kDistance, MetricKind::kBandwidthRatio}) {
    const auto r = FindRoute(s, g, kA, kB, kind);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->Vehicles(), Ids({1, 3, 2}));
    EXPECT_EQ(ArrowNotation(*r), "1→3→2");
    ASSERT_EQ(r->hops.size(), 2u);
    EXPECT_EQ(r->hops[0].radios, (RadioPair{RadioId{2}, RadioId{6}}));
    EXPECT_EQ(r->hops[1].radios, (RadioPair{RadioId{5}, RadioId{3}}));
    EXPECT_EQ(r->stats.hops, 2);
    EXPECT_EQ(r->stats.total_distance, 300.0);
    EXPECT_TRUE(CheckRoute(s, g, *r).empty());
  }
}

TEST(FindRoute, ChainWithoutCIsDisconnected) {
  const Scenario s = WithoutVehicle(ChainScenario(), kC);
  const LinkGraph g = BuildLinkGraph(s);
  EXPECT_FALSE(FindRoute(s, g, kA, kB, MetricKind::kDistance).has_value());
  EXPECT_FALSE(FindRoute(s, g, kA, kB, MetricKind::kBandwidthRatio).has_value());
}

TEST(FindRoute, DiamondTradeOff) {
  const Scenario s = DiamondScenario();
  const LinkGraph g = BuildLinkGraph(s);

  const auto shortest = FindRoute(s, g, kS, kT, MetricKind::kDistance);
  ASSERT_TRUE(shortest.has_value());
  EXPECT_EQ(shortest->Vehicles(), Ids({1, 2, 4}));
  EXPECT_EQ(shortest->stats.total_distance, 300.0);
  EXPECT_EQ(shortest->stats.avg_bandwidth, 6.0);

  const auto ratio = FindRoute(s, g, kS, kT, MetricKind::kBandwidthRatio);
  ASSERT_TRUE(ratio.has_value());
  EXPECT_EQ(ratio->Vehicles(), Ids({1, 3, 4}));
  EXPECT_NEAR(ratio->stats.p_value, 15.8114, 1e-4);
  EXPECT_EQ(ratio->stats.avg_bandwidth, 10.0);
}

TEST(FindRoute, SourceEqualsDestination) {
  const Scenario s = ChainScenario();
  const LinkGraph g = BuildLinkGraph(s);
  const auto r = FindRoute(s, g, kB, kB, MetricKind::kBandwidthRatio);
  ASSERT_TRUE(r.has_value());
  EXPECT_TRUE(r->hops.empty());
  EXPECT_EQ(r->stats.total_distance, 0.0);
  EXPECT_EQ(r->stats.hops, 0);
}

TEST(FindRoute, UnknownIdIsInputError) {
  const Scenario s = ChainScenario();
  const LinkGraph g = BuildLinkGraph(s);
  EXPECT_THROW(FindRoute(s, g, kA, VehicleId{77}, MetricKind::kDistance), InputError);
  EXPECT_THROW(FindRoute(s, g, VehicleId{77}, kA, MetricKind::kDistance), InputError);
}

TEST(FindRoute, RatioSearchReopensCheaperOpenEntry) {
  // Expanding M2 gives M1 a smaller f than the direct S->M1 entry.
  const Scenario s = DiamondScenario();
  const LinkGraph g = BuildLinkGraph(s);
  SearchTrace trace;
  FindRoute(s, g, kS, kT, MetricKind::kBandwidthRatio, &trace);
  EXPECT_EQ(trace.reopen_updates, 1);
  EXPECT_EQ(trace.closed_order, Ids({1, 3, 4}));
}

TEST(Expand, DiamondSourceUnderRatio) {
  const Scenario s = DiamondScenario();
  const LinkGraph g = BuildLinkGraph(s);
  SearchNode start;
  start.vehicle = kS;
  const auto children = Expand(s, g, start, kT, MetricKind::kBandwidthRatio);
  ASSERT_EQ(children.size(), 2u);
  EXPECT_EQ(children[0].vehicle, kM1);
  EXPECT_EQ(children[0].f_value, 150.0);
  EXPECT_EQ(children[1].vehicle, kM2);
  EXPECT_NEAR(children[1].f_value, 31.6228, 1e-4);
  EXPECT_EQ(children[1].acc, (PathAccumulator{kDiag, 10.0, 1}));
  EXPECT_EQ(children[1].parent, kS);
}

TEST(Expand, ChainSourceHasOneChild) {
  const Scenario s = ChainScenario();
  const LinkGraph g = BuildLinkGraph(s);
  SearchNode start;
  start.vehicle = kA;
  const auto children = Expand(s, g, start, kB, MetricKind::kDistance);
  ASSERT_EQ(children.size(), 1u);
  EXPECT_EQ(children[0].vehicle, kC);
}

TEST(Expand, IsolatedVehicleHasNoChildren) {
  const Scenario s = WithoutVehicle(ChainScenario(), kC);
  const LinkGraph g = BuildLinkGraph(s);
  SearchNode start;
  start.vehicle = kA;
  EXPECT_TRUE(Expand(s, g, start, kB, MetricKind::kDistance).empty());
}

TEST(SelectHop, PrefersReceivingBandwidthThenLowestId) {
  Scenario s;
  s.area = {100, 100};
  s.comm_range = 100;
  s.vehicles = {
      {VehicleId{1}, {0, 0}, {{RadioId{1}, Frequency{1}, 1}, {RadioId{2}, Frequency{2}, 1},
                              {RadioId{3}, Frequency{3}, 1}}},
      {VehicleId{2}, {10, 0}, {{RadioId{9}, Frequency{1}, 4}, {RadioId{4}, Frequency{2}, 8},
                               {RadioId{5}, Frequency{3}, 8}}},
  };
  const LinkGraph g = BuildLinkGraph(s);
  const Hop hop = SelectHop(s, *g.FindLink(VehicleId{1}, VehicleId{2}));
  EXPECT_EQ(hop.radios, (RadioPair{RadioId{2}, RadioId{4}}));
  EXPECT_EQ(hop.bandwidth, 8.0);
  EXPECT_EQ(hop.distance, 10.0);
}

// Property suites over seeded random scenarios.

GenSpec PropertySpec(std::uint64_t seed) {
  GenSpec spec = SmallSpec(seed, 6 + static_cast<int>(seed % 5));
  spec.radios_per_vehicle = 1 + static_cast<int>(seed % 2);
  spec.frequency_pool = {Frequency{1}, Frequency{2}};
  return spec;
}

TEST(FindRouteProperties, FeasibleSimpleDeterministic) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const Scenario s = GenerateScenario(PropertySpec(seed));
    const LinkGraph g = BuildLinkGraph(s);
    for (VehicleId a : g.vehicles()) {
      for (VehicleId b : g.vehicles()) {
        for (MetricKind kind : {MetricKind::kDistance, MetricKind::kBandwidthRatio}) {
          SearchTrace trace;
          const auto r = FindRoute(s, g, a, b, kind, &trace);
          const auto again = FindRoute(s, g, a, b, kind);
          ASSERT_EQ(r, again);
          std::set<VehicleId> closed(trace.closed_order.begin(), trace.closed_order.end());
          ASSERT_EQ(closed.size(), trace.closed_order.size()) << "vehicle closed twice";
          const bool reachable = !g.ComponentOf(a).empty() &&
                                 std::ranges::count(g.ComponentOf(a), b) == 1;
          ASSERT_EQ(r.has_value(), reachable);
          if (r) ASSERT_TRUE(CheckRoute(s, g, *r).empty()) << "seed " << seed;
        }
      }
    }
  }
}

TEST(FindRouteProperties, DistanceMatchesOracle) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const Scenario s = GenerateScenario(PropertySpec(seed));
    const LinkGraph g = BuildLinkGraph(s);
    for (VehicleId a : g.vehicles()) {
      for (VehicleId b : g.vehicles()) {
        if (a == b) continue;
        const auto best = BestRoute(EnumerateAllPaths(s, g, a, b), MetricKind::kDistance);
        const auto found = FindRoute(s, g, a, b, MetricKind::kDistance);
        ASSERT_EQ(best.has_value(), found.has_value());
        if (best) {
          ASSERT_NEAR(found->stats.total_distance, best->stats.total_distance, 1e-9)
              << "seed " << seed;
        }
      }
    }
  }
}

}  // namespace
}  // namespace mrroute
