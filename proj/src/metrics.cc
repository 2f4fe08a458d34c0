#include "mrroute/metrics.h"

#include <stdexcept>

#include "mrroute/topology.h"

namespace mrroute {

std::string_view MetricName(MetricKind kind) {
  switch (kind) {
    case MetricKind::kDistance:
      return "distance";
    case MetricKind::kBandwidthRatio:
      return "bandwidth";
  }
  return "?";
}

std::optional<MetricKind> ParseMetric(std::string_view name) {
  if (name == "distance") return MetricKind::kDistance;
  if (name == "bandwidth") return MetricKind::kBandwidthRatio;
  return std::nullopt;
}

PathAccumulator Extend(const PathAccumulator& acc, double link_distance, double receiving_bw) {
  if (!(receiving_bw > 0.0)) {
    throw std::invalid_argument("receiving bandwidth must be positive");
  }
  if (!(link_distance >= 0.0)) {
    throw std::invalid_argument("link distance must be non-negative");
  }
  return {acc.dist_sum + link_distance, acc.bw_sum + receiving_bw, acc.hop_count + 1};
}

double EvalF(MetricKind kind, const PathAccumulator& acc, const Position& current,
             const Position& goal) {
  const double to_go = Euclid(current, goal);
  switch (kind) {
    case MetricKind::kDistance:
      return acc.dist_sum + to_go;
    case MetricKind::kBandwidthRatio:
      if (acc.hop_count == 0) return 0.0;
      if (!(acc.bw_sum > 0.0)) {
        throw std::logic_error("bandwidth-ratio metric with zero accumulated bandwidth");
      }
      return (acc.dist_sum + to_go) / acc.bw_sum;
  }
  return 0.0;
}

PathAccumulator Accumulate(const Route& r) {
  PathAccumulator acc;
  for (const Hop& h : r.hops) acc = Extend(acc, h.distance, h.bandwidth);
  return acc;
}

RouteStats ComputeRouteStats(const Route& r) {
  if (r.hops.empty()) throw std::invalid_argument("route stats need at least one hop");
  const PathAccumulator acc = Accumulate(r);
  RouteStats st;
  st.total_distance = acc.dist_sum;
  st.avg_bandwidth = acc.bw_sum / acc.hop_count;
  // Same expression EvalF uses at the goal, where the remaining estimate is 0.
  st.p_value = (acc.dist_sum + 0.0) / acc.bw_sum;
  st.hops = acc.hop_count;
  return st;
}

double RouteCost(MetricKind kind, const RouteStats& stats) {
  return kind == MetricKind::kDistance ? stats.total_distance : stats.p_value;
}

}  // namespace mrroute
