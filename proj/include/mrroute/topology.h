#ifndef MRROUTE_TOPOLOGY_H_
#define MRROUTE_TOPOLOGY_H_

#include <map>
#include <span>
#include <vector>

#include "mrroute/model.h"

namespace mrroute {

struct RadioPair {
  RadioId tx{};  // radio on the sending vehicle
  RadioId rx{};  // radio on the receiving vehicle

  friend bool operator==(const RadioPair&, const RadioPair&) = default;
  friend auto operator<=>(const RadioPair&, const RadioPair&) = default;
};

// A directed view of a symmetric vehicle-to-vehicle link. `radio_pairs` lists
// every equal-frequency radio pair that can realize it, from the perspective of
// `from`.
struct Link {
  VehicleId from{};
  VehicleId to{};
  double distance = 0.0;  // meters
  std::vector<RadioPair> radio_pairs;

  friend bool operator==(const Link&, const Link&) = default;
};

// Vehicle-granularity adjacency. Hand-off between radios of one vehicle is
// free, so the vertex is the vehicle and the radio pairs annotate the edges.
class LinkGraph {
 public:
  LinkGraph() = default;

  // Vehicles in ascending id order.
  const std::vector<VehicleId>& vehicles() const { return vehicles_; }

  // Links leaving `v`, sorted by ascending neighbor id. Empty for unknown ids.
  std::span<const Link> Neighbors(VehicleId v) const;

  // Returns nullptr if `a` and `b` are not adjacent.
  const Link* FindLink(VehicleId a, VehicleId b) const;

  bool Contains(VehicleId v) const { return adjacency_.contains(v); }
  std::size_t LinkCount() const;  // undirected

  // Vehicles reachable from `v`, including `v`, in ascending id order.
  std::vector<VehicleId> ComponentOf(VehicleId v) const;

  friend bool operator==(const LinkGraph&, const LinkGraph&) = default;

 private:
  friend LinkGraph BuildLinkGraph(const Scenario& s);

  std::vector<VehicleId> vehicles_;
  std::map<VehicleId, std::vector<Link>> adjacency_;
};

double Euclid(const Position& p, const Position& q);

// All cross-vehicle radio pairs with equal frequency, ordered by a's radio
// order then b's radio order.
std::vector<RadioPair> SharedFrequencyPairs(const Vehicle& a, const Vehicle& b);

// Two vehicles are neighbors iff they are within comm_range (inclusive) and
// share at least one frequency. Expects a scenario that passes
// ValidateScenario.
LinkGraph BuildLinkGraph(const Scenario& s);

}  // namespace mrroute

#endif  // MRROUTE_TOPOLOGY_H_
