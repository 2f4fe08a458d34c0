#ifndef MRROUTE_ASTAR_H_
#define MRROUTE_ASTAR_H_

#include <optional>
#include <vector>

#include "mrroute/metrics.h"
#include "mrroute/model.h"
#include "mrroute/route.h"
#include "mrroute/topology.h"

namespace mrroute {

// An entry of the OPEN or CLOSED table. The search state is the vehicle alone;
// the radio pair used to arrive is an annotation of the incoming edge.
struct SearchNode {
  VehicleId vehicle{};
  PathAccumulator acc;
  double f_value = 0.0;
  std::optional<VehicleId> parent;  // back pointer, absent at the source
  std::optional<Hop> incoming;      // absent at the source
};

// Optional bookkeeping, filled when passed to FindRoute.
struct SearchTrace {
  std::vector<VehicleId> closed_order;  // vehicles in the order they were closed
  int reopen_updates = 0;               // OPEN entries replaced by a smaller f
};

// Picks the radio pair that realizes `link` for a search: the one whose
// receiving radio has the highest bandwidth, ties to the lowest receiving
// radio id, then the lowest sending radio id.
Hop SelectHop(const Scenario& s, const Link& link);

// One child per graph neighbor of `node`, each with its accumulator extended
// over the selected hop and its f recomputed against `goal`.
std::vector<SearchNode> Expand(const Scenario& s, const LinkGraph& g, const SearchNode& node,
                               VehicleId goal, MetricKind kind);

// Best-first search over OPEN/CLOSED tables ordered by (f, vehicle id).
//
// A CLOSED vehicle is never reopened. Rediscovering a vehicle that is still in
// OPEN keeps whichever entry has the smaller f and moves the back pointer with
// it. Under kDistance the straight-line estimate is consistent, so the result
// is a minimum-distance route. Under kBandwidthRatio the key is the ratio
// itself, which is not additive along a path, and the result is the best route
// this procedure finds rather than a proven optimum.
//
// Returns nullopt when OPEN empties without reaching `dest`. source == dest
// yields a zero-hop route. Throws InputError for ids absent from `s`.
std::optional<Route> FindRoute(const Scenario& s, const LinkGraph& g, VehicleId source,
                               VehicleId dest, MetricKind kind, SearchTrace* trace = nullptr);

}  // namespace mrroute

#endif  // MRROUTE_ASTAR_H_
