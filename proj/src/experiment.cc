#include "mrroute/experiment.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <thread>

#include "mrroute/astar.h"
#include "mrroute/oracle.h"

namespace mrroute {

double CompareReport::AvgBandwidthDelta() const {
  if (!BothFound()) return 0.0;
  return bandwidth->stats.avg_bandwidth - distance->stats.avg_bandwidth;
}

double CompareReport::DistanceDelta() const {
  if (!BothFound()) return 0.0;
  return bandwidth->stats.total_distance - distance->stats.total_distance;
}

bool CompareReport::RatioNotWorse() const {
  if (!BothFound()) return false;
  return bandwidth->stats.p_value <= distance->stats.p_value;
}

CompareReport Compare(const Scenario& s, const LinkGraph& g, VehicleId source, VehicleId dest) {
  CompareReport report;
  report.source = source;
  report.destination = dest;
  report.distance = FindRoute(s, g, source, dest, MetricKind::kDistance);
  report.bandwidth = FindRoute(s, g, source, dest, MetricKind::kBandwidthRatio);
  return report;
}

std::optional<std::pair<VehicleId, VehicleId>> FirstConnectedPair(const LinkGraph& g) {
  for (VehicleId a : g.vehicles()) {
    for (VehicleId b : g.ComponentOf(a)) {
      if (a < b) return std::pair(a, b);
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// CSV

namespace {

std::string Fixed4(double v) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(4) << v;
  return out.str();
}

}  // namespace

std::string FormatCsvRow(const SweepRow& row) {
  std::string line = std::to_string(row.round) + "," + std::to_string(row.seed) + "," +
                     std::string(MetricName(row.metric)) + "," + (row.found ? "true" : "false");
  if (row.found) {
    line += "," + std::to_string(row.stats.hops) + "," + Fixed4(row.stats.total_distance) + "," +
            Fixed4(row.stats.avg_bandwidth) + "," + Fixed4(row.stats.p_value);
  } else {
    line += ",,,,";
  }
  return line;
}

std::string FormatCsv(const std::vector<SweepRow>& rows) {
  std::string out = std::string(kSweepCsvHeader) + "\n";
  for (const SweepRow& row : rows) out += FormatCsvRow(row) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Sweep

namespace {

bool SameCost(MetricKind kind, const std::optional<Route>& a, const std::optional<Route>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a.has_value() ||
         std::abs(RouteCost(kind, a->stats) - RouteCost(kind, b->stats)) <= kMatchTolerance;
}

SweepRound RunRound(const SweepConfig& config, int round) {
  SweepRound out;
  out.round = round;
  out.seed = config.gen.seed + static_cast<std::uint64_t>(round);

  Scenario scenario;
  if (config.fixed_scenario.has_value()) {
    scenario = *config.fixed_scenario;
  } else {
    GenSpec spec = config.gen;
    spec.seed = out.seed;
    scenario = GenerateScenario(spec);
  }
  const LinkGraph graph = BuildLinkGraph(scenario);

  std::optional<std::pair<VehicleId, VehicleId>> query;
  if (config.source.has_value()) {
    query = std::pair(*config.source, *config.destination);
  } else {
    query = FirstConnectedPair(graph);
  }
  if (!query.has_value()) return out;

  out.report = Compare(scenario, graph, query->first, query->second);
  if (graph.ComponentOf(query->first).size() <= static_cast<std::size_t>(kOracleMaxVehicles)) {
    const PathSet ps = EnumeratePaths(scenario, graph, query->first, query->second,
                                      std::max(1, kOracleMaxVehicles - 1));
    out.oracle_agrees =
        SameCost(MetricKind::kDistance, out.report.distance,
                 BestRoute(ps, MetricKind::kDistance)) &&
        SameCost(MetricKind::kBandwidthRatio, out.report.bandwidth,
                 BestRoute(ps, MetricKind::kBandwidthRatio));
  }
  return out;
}

void Summarize(const std::vector<SweepRow>& rows, MetricKind kind, MetricSummary* summary) {
  double bw = 0.0, dist = 0.0, hops = 0.0;
  for (const SweepRow& row : rows) {
    if (row.metric != kind || !row.found) continue;
    ++summary->found;
    bw += row.stats.avg_bandwidth;
    dist += row.stats.total_distance;
    hops += row.stats.hops;
  }
  if (summary->found > 0) {
    summary->mean_avg_bandwidth = bw / summary->found;
    summary->mean_total_distance = dist / summary->found;
    summary->mean_hops = hops / summary->found;
  }
}

SweepRow MakeRow(const SweepRound& round, MetricKind kind, const std::optional<Route>& route) {
  SweepRow row;
  row.round = round.round;
  row.seed = round.seed;
  row.metric = kind;
  row.found = route.has_value();
  if (route.has_value()) row.stats = route->stats;
  return row;
}

}  // namespace

SweepResult RunSweep(const SweepConfig& config, int jobs) {
  if (config.rounds < 1) throw InputError("rounds must be at least 1");
  if (config.source.has_value() != config.destination.has_value()) {
    throw InputError("--src and --dst must be given together");
  }
  if (config.fixed_scenario.has_value()) {
    ValidationReport report = ValidateScenario(*config.fixed_scenario);
    if (!report.empty()) throw ValidationError(std::move(report));
    if (config.source.has_value()) {
      config.fixed_scenario->At(*config.source);
      config.fixed_scenario->At(*config.destination);
    }
  } else {
    // Surfaces GenSpec errors before any thread starts.
    GenSpec probe = config.gen;
    probe.vehicle_count = std::min(probe.vehicle_count, 1);
    GenerateScenario(probe);
    if (config.source.has_value()) {
      const auto in_range = [&](VehicleId id) {
        return ToInt(id) >= 1 && ToInt(id) <= static_cast<std::uint32_t>(config.gen.vehicle_count);
      };
      if (!in_range(*config.source) || !in_range(*config.destination)) {
        throw InputError("--src/--dst outside generated vehicle ids 1.." +
                         std::to_string(config.gen.vehicle_count));
      }
    }
  }

  SweepResult result;
  result.rounds.resize(static_cast<std::size_t>(config.rounds));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int r = next++; r < config.rounds; r = next++) {
      result.rounds[static_cast<std::size_t>(r)] = RunRound(config, r);
    }
  };
  const int threads = std::clamp(jobs, 1, config.rounds);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (const SweepRound& round : result.rounds) {
    result.rows.push_back(MakeRow(round, MetricKind::kDistance, round.report.distance));
    result.rows.push_back(MakeRow(round, MetricKind::kBandwidthRatio, round.report.bandwidth));
  }
  Summarize(result.rows, MetricKind::kDistance, &result.distance);
  Summarize(result.rows, MetricKind::kBandwidthRatio, &result.bandwidth);
  return result;
}

// ---------------------------------------------------------------------------
// Oracle validation

void MatchStats::Merge(const MatchStats& other) {
  pairs += other.pairs;
  matched += other.matched;
  identical += other.identical;
  worst_relative_gap = std::max(worst_relative_gap, other.worst_relative_gap);
  max_matched_cost_diff = std::max(max_matched_cost_diff, other.max_matched_cost_diff);
  infeasible_routes += other.infeasible_routes;
}

void ValidationSummary::Merge(const ValidationSummary& other) {
  scenarios += other.scenarios;
  distance.Merge(other.distance);
  bandwidth.Merge(other.bandwidth);
}

namespace {

void CheckOne(const Scenario& s, const LinkGraph& g, const PathSet& ps, MetricKind kind,
              MatchStats* stats) {
  const std::optional<Route> best = BestRoute(ps, kind);
  if (!best.has_value()) return;
  ++stats->pairs;
  const std::optional<Route> found = FindRoute(s, g, ps.source, ps.destination, kind);
  if (!found.has_value()) {
    // Connected pair but no route: count it as the worst possible outcome.
    stats->worst_relative_gap = INFINITY;
    return;
  }
  if (!CheckRoute(s, g, *found).empty()) ++stats->infeasible_routes;
  const double oracle_cost = RouteCost(kind, best->stats);
  const double search_cost = RouteCost(kind, found->stats);
  const double gap = oracle_cost > 0.0 ? (search_cost - oracle_cost) / oracle_cost
                                       : search_cost - oracle_cost;
  stats->worst_relative_gap = std::max(stats->worst_relative_gap, gap);
  if (found->Vehicles() == best->Vehicles()) ++stats->identical;
  const double diff = std::abs(search_cost - oracle_cost);
  if (diff <= kMatchTolerance) {
    ++stats->matched;
    stats->max_matched_cost_diff = std::max(stats->max_matched_cost_diff, diff);
  }
}

}  // namespace

ValidationSummary ValidateAgainstOracle(const Scenario& s) {
  if (static_cast<int>(s.vehicles.size()) > kOracleMaxVehicles) {
    throw InputError("scenario has " + std::to_string(s.vehicles.size()) +
                     " vehicles; oracle validation supports at most " +
                     std::to_string(kOracleMaxVehicles));
  }
  ValidationSummary summary;
  summary.scenarios = 1;
  const LinkGraph g = BuildLinkGraph(s);
  for (VehicleId a : g.vehicles()) {
    for (VehicleId b : g.vehicles()) {
      if (a == b) continue;
      const PathSet ps = EnumerateAllPaths(s, g, a, b);
      CheckOne(s, g, ps, MetricKind::kDistance, &summary.distance);
      CheckOne(s, g, ps, MetricKind::kBandwidthRatio, &summary.bandwidth);
    }
  }
  return summary;
}

}  // namespace mrroute
