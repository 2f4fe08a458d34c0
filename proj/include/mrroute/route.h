#ifndef MRROUTE_ROUTE_H_
#define MRROUTE_ROUTE_H_

#include <string>
#include <vector>

#include "mrroute/model.h"
#include "mrroute/topology.h"

namespace mrroute {

// One traversed edge, recorded at the vehicle it arrives at.
struct Hop {
  VehicleId vehicle{};
  RadioPair radios;
  double distance = 0.0;   // meters
  double bandwidth = 0.0;  // of the receiving radio, kb/s

  friend bool operator==(const Hop&, const Hop&) = default;
};

struct RouteStats {
  double total_distance = 0.0;
  double avg_bandwidth = 0.0;
  double p_value = 0.0;
  int hops = 0;

  friend bool operator==(const RouteStats&, const RouteStats&) = default;
};

struct Route {
  VehicleId source{};
  VehicleId destination{};
  std::vector<Hop> hops;  // empty when source == destination
  RouteStats stats;

  // source followed by every hop's vehicle.
  std::vector<VehicleId> Vehicles() const;

  friend bool operator==(const Route&, const Route&) = default;
};

// "1→6→10→7".
std::string ArrowNotation(const Route& r);
std::string ArrowNotation(const std::vector<VehicleId>& vehicles);

// Checks the structural route invariants against the graph it was found on:
// hops follow links, every radio pair shares a frequency, no vehicle repeats,
// the recorded distances and bandwidths match the scenario. Returns the list
// of problems, empty when the route is sound.
std::vector<std::string> CheckRoute(const Scenario& s, const LinkGraph& g, const Route& r);

}  // namespace mrroute

#endif  // MRROUTE_ROUTE_H_
