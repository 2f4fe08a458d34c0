#include "mrroute/route.h"

#include <set>

namespace mrroute {

std::vector<VehicleId> Route::Vehicles() const {
  std::vector<VehicleId> out{source};
  for (const Hop& h : hops) out.push_back(h.vehicle);
  return out;
}

std::string ArrowNotation(const std::vector<VehicleId>& vehicles) {
  std::string out;
  for (std::size_t i = 0; i < vehicles.size(); ++i) {
    if (i > 0) out += "→";
    out += std::to_string(ToInt(vehicles[i]));
  }
  return out;
}

std::string ArrowNotation(const Route& r) { return ArrowNotation(r.Vehicles()); }

namespace {

const Radio* FindRadio(const Vehicle& v, RadioId id) {
  for (const Radio& r : v.radios) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

}  // namespace

std::vector<std::string> CheckRoute(const Scenario& s, const LinkGraph& g, const Route& r) {
  std::vector<std::string> problems;
  const std::vector<VehicleId> seq = r.Vehicles();
  if (seq.back() != r.destination) problems.push_back("route does not end at destination");

  std::set<VehicleId> seen;
  for (VehicleId v : seq) {
    if (!seen.insert(v).second) {
      problems.push_back("vehicle " + std::to_string(ToInt(v)) + " repeats");
    }
  }

  for (std::size_t i = 0; i < r.hops.size(); ++i) {
    const Hop& hop = r.hops[i];
    const VehicleId from = seq[i];
    const std::string tag = "hop " + ArrowNotation(std::vector<VehicleId>{from, hop.vehicle}) + ": ";
    const Link* link = g.FindLink(from, hop.vehicle);
    if (link == nullptr) {
      problems.push_back(tag + "vehicles are not adjacent");
      continue;
    }
    if (link->distance != hop.distance) problems.push_back(tag + "distance mismatch");
    const Vehicle* tx_vehicle = s.Find(from);
    const Vehicle* rx_vehicle = s.Find(hop.vehicle);
    if (tx_vehicle == nullptr || rx_vehicle == nullptr) {
      problems.push_back(tag + "vehicle missing from scenario");
      continue;
    }
    const Radio* tx = FindRadio(*tx_vehicle, hop.radios.tx);
    const Radio* rx = FindRadio(*rx_vehicle, hop.radios.rx);
    if (tx == nullptr || rx == nullptr) {
      problems.push_back(tag + "unknown radio");
      continue;
    }
    if (tx->frequency != rx->frequency) problems.push_back(tag + "frequency mismatch");
    if (rx->bandwidth != hop.bandwidth) problems.push_back(tag + "bandwidth mismatch");
  }
  return problems;
}

}  // namespace mrroute
