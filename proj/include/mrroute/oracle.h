#ifndef MRROUTE_ORACLE_H_
#define MRROUTE_ORACLE_H_

#include <optional>
#include <vector>

#include "mrroute/metrics.h"
#include "mrroute/model.h"
#include "mrroute/route.h"
#include "mrroute/topology.h"

namespace mrroute {

// Largest scenario the exhaustive checks accept.
inline constexpr int kOracleMaxVehicles = 10;

struct PathSet {
  VehicleId source{};
  VehicleId destination{};
  int max_hops = 0;
  std::vector<Route> routes;  // lexicographic by vehicle-id sequence
};

// Every simple path source -> dest with at most max_hops edges, found by
// depth-first search over the link graph, each materialized with the same hop
// selection and statistics the search uses. Throws std::invalid_argument if
// max_hops < 1.
PathSet EnumeratePaths(const Scenario& s, const LinkGraph& g, VehicleId source, VehicleId dest,
                       int max_hops);

// The route minimizing RouteCost(kind); ties go to the lexicographically
// smaller vehicle sequence. nullopt for an empty set.
std::optional<Route> BestRoute(const PathSet& ps, MetricKind kind);

// Enumerates with max_hops = vehicle_count - 1 after checking the scenario
// against kOracleMaxVehicles; throws InputError when it is too large rather
// than truncating.
PathSet EnumerateAllPaths(const Scenario& s, const LinkGraph& g, VehicleId source,
                          VehicleId dest);

}  // namespace mrroute

#endif  // MRROUTE_ORACLE_H_
