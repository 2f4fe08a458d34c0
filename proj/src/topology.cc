#include "mrroute/topology.h"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>

namespace mrroute {

double Euclid(const Position& p, const Position& q) {
  return std::hypot(p.x - q.x, p.y - q.y);
}

std::vector<RadioPair> SharedFrequencyPairs(const Vehicle& a, const Vehicle& b) {
  std::vector<RadioPair> pairs;
  for (const Radio& ra : a.radios) {
    for (const Radio& rb : b.radios) {
      if (ra.frequency == rb.frequency) pairs.push_back({ra.id, rb.id});
    }
  }
  return pairs;
}

std::span<const Link> LinkGraph::Neighbors(VehicleId v) const {
  auto it = adjacency_.find(v);
  if (it == adjacency_.end()) return {};
  return it->second;
}

const Link* LinkGraph::FindLink(VehicleId a, VehicleId b) const {
  for (const Link& l : Neighbors(a)) {
    if (l.to == b) return &l;
  }
  return nullptr;
}

std::size_t LinkGraph::LinkCount() const {
  std::size_t directed = 0;
  for (const auto& [v, links] : adjacency_) directed += links.size();
  return directed / 2;
}

std::vector<VehicleId> LinkGraph::ComponentOf(VehicleId v) const {
  if (!Contains(v)) return {};
  std::set<VehicleId> seen{v};
  std::queue<VehicleId> frontier;
  frontier.push(v);
  while (!frontier.empty()) {
    const VehicleId cur = frontier.front();
    frontier.pop();
    for (const Link& l : Neighbors(cur)) {
      if (seen.insert(l.to).second) frontier.push(l.to);
    }
  }
  return {seen.begin(), seen.end()};
}

LinkGraph BuildLinkGraph(const Scenario& s) {
  std::vector<const Vehicle*> sorted;
  sorted.reserve(s.vehicles.size());
  for (const Vehicle& v : s.vehicles) sorted.push_back(&v);
  std::sort(sorted.begin(), sorted.end(),
            [](const Vehicle* a, const Vehicle* b) { return a->id < b->id; });

  LinkGraph g;
  for (const Vehicle* v : sorted) {
    g.vehicles_.push_back(v->id);
    g.adjacency_[v->id];
  }
  // Iterating in ascending id order keeps every neighbor list sorted.
  for (const Vehicle* a : sorted) {
    for (const Vehicle* b : sorted) {
      if (a == b) continue;
      // Same expression both ways round, so mirrored links carry equal
      // distances.
      const Vehicle* lo = a->id < b->id ? a : b;
      const Vehicle* hi = a->id < b->id ? b : a;
      const double d = Euclid(lo->position, hi->position);
      if (d > s.comm_range) continue;
      std::vector<RadioPair> pairs = SharedFrequencyPairs(*a, *b);
      if (pairs.empty()) continue;
      g.adjacency_[a->id].push_back({a->id, b->id, d, std::move(pairs)});
    }
  }
  return g;
}

}  // namespace mrroute
