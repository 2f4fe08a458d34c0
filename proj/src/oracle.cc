#include "mrroute/oracle.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "mrroute/astar.h"

namespace mrroute {

namespace {

struct Dfs {
  const Scenario& s;
  const LinkGraph& g;
  VehicleId dest;
  int max_hops;
  Route current;
  std::set<VehicleId> on_path;
  std::vector<Route>* out;

  void Visit(VehicleId v) {
    if (v == dest) {
      Route r = current;
      r.stats = ComputeRouteStats(r);
      out->push_back(std::move(r));
      return;
    }
    if (static_cast<int>(current.hops.size()) >= max_hops) return;
    // Neighbor lists are sorted by id, so paths come out in lexicographic
    // order.
    for (const Link& link : g.Neighbors(v)) {
      if (on_path.contains(link.to)) continue;
      on_path.insert(link.to);
      current.hops.push_back(SelectHop(s, link));
      Visit(link.to);
      current.hops.pop_back();
      on_path.erase(link.to);
    }
  }
};

}  // namespace

PathSet EnumeratePaths(const Scenario& s, const LinkGraph& g, VehicleId source, VehicleId dest,
                       int max_hops) {
  if (max_hops < 1) throw std::invalid_argument("max_hops must be at least 1");
  s.At(source);
  s.At(dest);
  PathSet ps{source, dest, max_hops, {}};
  if (source == dest) return ps;

  Dfs dfs{s, g, dest, max_hops, {}, {source}, &ps.routes};
  dfs.current.source = source;
  dfs.current.destination = dest;
  dfs.Visit(source);
  return ps;
}

std::optional<Route> BestRoute(const PathSet& ps, MetricKind kind) {
  const Route* best = nullptr;
  for (const Route& r : ps.routes) {
    // Enumeration order is lexicographic, so strict improvement keeps the
    // lexicographically first of any tied routes.
    if (best == nullptr || RouteCost(kind, r.stats) < RouteCost(kind, best->stats)) best = &r;
  }
  if (best == nullptr) return std::nullopt;
  return *best;
}

PathSet EnumerateAllPaths(const Scenario& s, const LinkGraph& g, VehicleId source,
                          VehicleId dest) {
  const int n = static_cast<int>(s.vehicles.size());
  if (n > kOracleMaxVehicles) {
    throw InputError("scenario has " + std::to_string(n) + " vehicles; exhaustive check supports at most " +
                     std::to_string(kOracleMaxVehicles));
  }
  return EnumeratePaths(s, g, source, dest, std::max(1, n - 1));
}

}  // namespace mrroute
