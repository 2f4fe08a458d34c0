#include "mrroute/astar.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace mrroute {

namespace {

double RadioBandwidth(const Vehicle& v, RadioId id) {
  for (const Radio& r : v.radios) {
    if (r.id == id) return r.bandwidth;
  }
  throw std::logic_error("link references unknown radio " + std::to_string(ToInt(id)));
}

}  // namespace

Hop SelectHop(const Scenario& s, const Link& link) {
  if (link.radio_pairs.empty()) throw std::logic_error("link without radio pairs");
  const Vehicle& rx_vehicle = s.At(link.to);
  const RadioPair* best = nullptr;
  double best_bw = 0.0;
  for (const RadioPair& pair : link.radio_pairs) {
    const double bw = RadioBandwidth(rx_vehicle, pair.rx);
    const bool better =
        best == nullptr || bw > best_bw ||
        (bw == best_bw && std::pair(pair.rx, pair.tx) < std::pair(best->rx, best->tx));
    if (better) {
      best = &pair;
      best_bw = bw;
    }
  }
  return {link.to, *best, link.distance, best_bw};
}

std::vector<SearchNode> Expand(const Scenario& s, const LinkGraph& g, const SearchNode& node,
                               VehicleId goal, MetricKind kind) {
  const Position& goal_pos = s.At(goal).position;
  std::vector<SearchNode> children;
  for (const Link& link : g.Neighbors(node.vehicle)) {
    SearchNode child;
    child.vehicle = link.to;
    Hop hop = SelectHop(s, link);
    child.acc = Extend(node.acc, hop.distance, hop.bandwidth);
    child.f_value = EvalF(kind, child.acc, s.At(link.to).position, goal_pos);
    child.parent = node.vehicle;
    child.incoming = hop;
    children.push_back(std::move(child));
  }
  return children;
}

std::optional<Route> FindRoute(const Scenario& s, const LinkGraph& g, VehicleId source,
                               VehicleId dest, MetricKind kind, SearchTrace* trace) {
  const Vehicle& src_vehicle = s.At(source);
  const Vehicle& dst_vehicle = s.At(dest);
  if (!g.Contains(source) || !g.Contains(dest)) {
    throw InputError("link graph does not match scenario");
  }

  if (source == dest) {
    Route r;
    r.source = source;
    r.destination = dest;
    return r;
  }

  using Key = std::pair<double, VehicleId>;  // (f, id): equal f pops lower id
  std::set<Key> open_order;
  std::map<VehicleId, SearchNode> open;
  std::map<VehicleId, SearchNode> closed;

  SearchNode start;
  start.vehicle = source;
  start.f_value = EvalF(kind, start.acc, src_vehicle.position, dst_vehicle.position);
  open_order.insert({start.f_value, source});
  open.emplace(source, start);

  while (!open_order.empty()) {
    const VehicleId current_id = open_order.begin()->second;
    open_order.erase(open_order.begin());
    auto open_it = open.find(current_id);
    SearchNode current = std::move(open_it->second);
    open.erase(open_it);
    if (trace != nullptr) trace->closed_order.push_back(current_id);
    const SearchNode& closed_node = closed.emplace(current_id, std::move(current)).first->second;

    if (current_id == dest) {
      Route r;
      r.source = source;
      r.destination = dest;
      for (const SearchNode* n = &closed_node; n->parent.has_value();
           n = &closed.at(*n->parent)) {
        r.hops.push_back(*n->incoming);
      }
      std::reverse(r.hops.begin(), r.hops.end());
      r.stats = ComputeRouteStats(r);
      return r;
    }

    for (SearchNode& child : Expand(s, g, closed_node, dest, kind)) {
      if (closed.contains(child.vehicle)) continue;
      auto existing = open.find(child.vehicle);
      if (existing == open.end()) {
        open_order.insert({child.f_value, child.vehicle});
        open.emplace(child.vehicle, std::move(child));
      } else if (child.f_value < existing->second.f_value) {
        open_order.erase({existing->second.f_value, child.vehicle});
        open_order.insert({child.f_value, child.vehicle});
        existing->second = std::move(child);
        if (trace != nullptr) ++trace->reopen_updates;
      }
    }
  }
  return std::nullopt;
}

}  // namespace mrroute
