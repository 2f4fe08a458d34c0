#ifndef MRROUTE_METRICS_H_
#define MRROUTE_METRICS_H_

#include <optional>
#include <string_view>

#include "mrroute/model.h"
#include "mrroute/route.h"

namespace mrroute {

enum class MetricKind {
  kDistance,        // shortest total distance
  kBandwidthRatio,  // (distance so far + distance to go) / bandwidth so far
};

std::string_view MetricName(MetricKind kind);  // "distance" | "bandwidth"
std::optional<MetricKind> ParseMetric(std::string_view name);

// Every packet has this size. Reported only; p does not depend on it.
inline constexpr int kPacketSizeBytes = 1024;

// Sums over the edges of a partial path v0..vn. Both sums have one term per
// edge: the edge length and the bandwidth of the radio receiving on it, so
// the source vehicle contributes no bandwidth.
struct PathAccumulator {
  double dist_sum = 0.0;
  double bw_sum = 0.0;
  int hop_count = 0;

  friend bool operator==(const PathAccumulator&, const PathAccumulator&) = default;
};

// Throws std::invalid_argument unless receiving_bw > 0 and link_distance >= 0.
PathAccumulator Extend(const PathAccumulator& acc, double link_distance, double receiving_bw);

// The A* ordering key for a path ending at `current`.
//   Distance:        f = dist_sum + |current, goal|
//   BandwidthRatio:  f = (dist_sum + |current, goal|) / bw_sum, and 0 at the
//                    source (hop_count == 0).
// Throws std::logic_error for a BandwidthRatio path with hops but no
// bandwidth, which a valid scenario cannot produce.
double EvalF(MetricKind kind, const PathAccumulator& acc, const Position& current,
             const Position& goal);

// Accumulates the hops of `r` in order. Shares Extend with the search so the
// two agree to the last bit.
PathAccumulator Accumulate(const Route& r);

// Throws std::invalid_argument for a zero-hop route.
RouteStats ComputeRouteStats(const Route& r);

// The cost `kind` minimizes: total distance or p.
double RouteCost(MetricKind kind, const RouteStats& stats);

}  // namespace mrroute

#endif  // MRROUTE_METRICS_H_
