#ifndef MRROUTE_EXPERIMENT_H_
#define MRROUTE_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mrroute/metrics.h"
#include "mrroute/model.h"
#include "mrroute/route.h"
#include "mrroute/topology.h"

namespace mrroute {

// Both metrics on one (scenario, source, destination) query.
struct CompareReport {
  VehicleId source{};
  VehicleId destination{};
  std::optional<Route> distance;
  std::optional<Route> bandwidth;

  bool BothFound() const { return distance.has_value() && bandwidth.has_value(); }
  // bandwidth-metric avg bandwidth minus distance-metric avg bandwidth.
  double AvgBandwidthDelta() const;
  double DistanceDelta() const;
  // p(bandwidth route) <= p(distance route). Only meaningful when BothFound().
  bool RatioNotWorse() const;
};

CompareReport Compare(const Scenario& s, const LinkGraph& g, VehicleId source, VehicleId dest);

// The lowest (a, b) with a < b, in lexicographic id order, such that b is
// reachable from a.
std::optional<std::pair<VehicleId, VehicleId>> FirstConnectedPair(const LinkGraph& g);

// One CSV line per (round, metric).
struct SweepRow {
  int round = 0;
  std::uint64_t seed = 0;
  MetricKind metric = MetricKind::kDistance;
  bool found = false;
  RouteStats stats;  // meaningless unless found
};

inline constexpr const char* kSweepCsvHeader =
    "round,seed,metric,found,hops,total_distance,avg_bandwidth,p_value";

std::string FormatCsvRow(const SweepRow& row);
std::string FormatCsv(const std::vector<SweepRow>& rows);  // header + rows, LF

struct SweepConfig {
  GenSpec gen;  // gen.seed is the base seed; round r uses base + r
  int rounds = 30;
  std::optional<Scenario> fixed_scenario;  // replaces generation when set
  std::optional<VehicleId> source;
  std::optional<VehicleId> destination;
};

struct SweepRound {
  int round = 0;
  std::uint64_t seed = 0;
  CompareReport report;
  // Set when the queried pair sits in a component small enough for the
  // exhaustive oracle; then true iff both searches reached the oracle optima
  // within kMatchTolerance.
  std::optional<bool> oracle_agrees;
};

struct MetricSummary {
  int found = 0;
  double mean_avg_bandwidth = 0.0;
  double mean_total_distance = 0.0;
  double mean_hops = 0.0;
};

struct SweepResult {
  std::vector<SweepRound> rounds;
  std::vector<SweepRow> rows;  // two per round, distance first
  MetricSummary distance;
  MetricSummary bandwidth;
};

// Rounds are independent and run on up to `jobs` threads; the output is in
// round order regardless. Throws InputError for bad config or unknown ids.
SweepResult RunSweep(const SweepConfig& config, int jobs = 1);

// Search and oracle costs closer than this count as the same optimum.
inline constexpr double kMatchTolerance = 1e-9;

struct MatchStats {
  int pairs = 0;      // connected ordered pairs checked
  int matched = 0;    // search cost within kMatchTolerance of the oracle optimum
  int identical = 0;  // search returned the very route the oracle picked
  double worst_relative_gap = 0.0;     // max (search - oracle) / oracle cost
  double max_matched_cost_diff = 0.0;  // max |search - oracle| over matched pairs
  int infeasible_routes = 0;           // routes failing CheckRoute

  double MatchRate() const { return pairs == 0 ? 1.0 : static_cast<double>(matched) / pairs; }
  void Merge(const MatchStats& other);
};

struct ValidationSummary {
  int scenarios = 0;
  MatchStats distance;
  MatchStats bandwidth;

  void Merge(const ValidationSummary& other);
};

// Search vs oracle for both metrics over every connected ordered pair of `s`.
// Throws InputError above kOracleMaxVehicles.
ValidationSummary ValidateAgainstOracle(const Scenario& s);

}  // namespace mrroute

#endif  // MRROUTE_EXPERIMENT_H_
