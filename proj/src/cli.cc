#include "mrroute/cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "mrroute/astar.h"
#include "mrroute/experiment.h"
#include "mrroute/metrics.h"
#include "mrroute/model.h"
#include "mrroute/oracle.h"
#include "mrroute/topology.h"

namespace mrroute {

namespace {

// Flags describing a generated scenario, shared by gen, sweep and validate.
struct GenFlags {
  std::uint64_t seed = 0;
  int vehicles = 30;
  std::vector<double> area{1000.0, 1000.0};
  double range = 200.0;
  int radios = 1;
  std::vector<std::int64_t> freqs{1};
  std::vector<double> bw{2.0, 10.0};

  GenSpec ToSpec() const {
    GenSpec spec;
    spec.seed = seed;
    spec.vehicle_count = vehicles;
    spec.area = {area[0], area[1]};
    spec.comm_range = range;
    spec.radios_per_vehicle = radios;
    spec.frequency_pool.clear();
    for (std::int64_t f : freqs) spec.frequency_pool.push_back(Frequency{f});
    spec.bandwidth_min = bw[0];
    spec.bandwidth_max = bw[1];
    return spec;
  }
};

void AddGenFlags(CLI::App* cmd, GenFlags* flags) {
  cmd->add_option("--seed", flags->seed, "Base random seed")->capture_default_str();
  cmd->add_option("--vehicles", flags->vehicles, "Vehicle count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--area", flags->area, "Area width and height (m)")
      ->expected(2)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--range", flags->range, "Communication range (m)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--radios", flags->radios, "Radios per vehicle")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--freqs", flags->freqs, "Frequency pool, comma separated")
      ->delimiter(',')
      ->capture_default_str();
  cmd->add_option("--bw", flags->bw, "Bandwidth range min max (kb/s)")
      ->expected(2)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

struct QueryFlags {
  std::string scenario;
  std::uint32_t src = 0;
  std::uint32_t dst = 0;
};

void AddQueryFlags(CLI::App* cmd, QueryFlags* flags) {
  cmd->add_option("--scenario", flags->scenario, "Scenario file")->required();
  cmd->add_option("--src", flags->src, "Source vehicle id")->required();
  cmd->add_option("--dst", flags->dst, "Destination vehicle id")->required();
}

std::string Fixed(double v, int digits = 4) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(digits) << v;
  return out.str();
}

std::string Signed(double v) { return (v >= 0.0 ? "+" : "") + Fixed(v); }

// setw counts bytes; the arrows are three bytes each.
std::string PadRight(const std::string& text, std::size_t width) {
  std::size_t cols = 0;
  for (unsigned char c : text) cols += (c & 0xC0) != 0x80;
  return text + std::string(cols < width ? width - cols : 1, ' ');
}

std::string StatsLine(const RouteStats& st) {
  return "hops=" + std::to_string(st.hops) + " total_distance=" + Fixed(st.total_distance) +
         " m avg_bandwidth=" + Fixed(st.avg_bandwidth) + " kb/s p=" + Fixed(st.p_value);
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw InputError("cannot write " + path);
  f << text;
  if (!f) throw InputError("write failed for " + path);
}

// ---------------------------------------------------------------------------

int CmdGen(const GenFlags& flags, const std::string& out_path, bool force, std::ostream& out) {
  if (!force && std::filesystem::exists(out_path)) {
    throw InputError(out_path + " exists; pass --force to overwrite");
  }
  const Scenario s = GenerateScenario(flags.ToSpec());
  SaveScenarioFile(s, out_path);
  out << "wrote " << out_path << " (" << s.vehicles.size() << " vehicles)\n";
  return kExitOk;
}

int CmdRoute(const QueryFlags& q, MetricKind kind, std::ostream& out) {
  const Scenario s = LoadScenarioFile(q.scenario);
  const LinkGraph g = BuildLinkGraph(s);
  const std::optional<Route> route = FindRoute(s, g, VehicleId{q.src}, VehicleId{q.dst}, kind);
  if (!route.has_value()) {
    out << "NO ROUTE\n";
    return kExitNoRoute;
  }
  out << ArrowNotation(*route) << "\n";
  out << "metric=" << MetricName(kind) << " " << StatsLine(route->stats) << "\n";
  if (!route->hops.empty()) {
    out << "radios:";
    VehicleId from = route->source;
    for (const Hop& h : route->hops) {
      out << " " << ToInt(from) << ".r" << ToInt(h.radios.tx) << "→" << ToInt(h.vehicle) << ".r"
          << ToInt(h.radios.rx);
      from = h.vehicle;
    }
    out << "\n";
  }
  return kExitOk;
}

void PrintCompareRow(std::ostream& out, MetricKind kind, const std::optional<Route>& r) {
  out << std::left << std::setw(10) << MetricName(kind);
  if (!r.has_value()) {
    out << "NO ROUTE\n";
    return;
  }
  out << PadRight(ArrowNotation(*r), 24) << std::right << std::setw(5) << r->stats.hops
      << std::setw(14) << Fixed(r->stats.total_distance) << std::setw(12)
      << Fixed(r->stats.avg_bandwidth) << std::setw(12) << Fixed(r->stats.p_value) << "\n"
      << std::left;
}

int CmdCompare(const QueryFlags& q, const std::string& csv_path, std::uint64_t seed,
               std::ostream& out) {
  const Scenario s = LoadScenarioFile(q.scenario);
  const LinkGraph g = BuildLinkGraph(s);
  const CompareReport report = Compare(s, g, VehicleId{q.src}, VehicleId{q.dst});

  out << std::left << std::setw(10) << "metric" << std::setw(24) << "route" << std::right
      << std::setw(5) << "hops" << std::setw(14) << "total_m" << std::setw(12) << "avg_bw"
      << std::setw(12) << "p" << "\n"
      << std::left;
  PrintCompareRow(out, MetricKind::kDistance, report.distance);
  PrintCompareRow(out, MetricKind::kBandwidthRatio, report.bandwidth);

  if (!csv_path.empty()) {
    std::vector<SweepRow> rows;
    for (auto [kind, route] : {std::pair{MetricKind::kDistance, &report.distance},
                               std::pair{MetricKind::kBandwidthRatio, &report.bandwidth}}) {
      SweepRow row;
      row.seed = seed;
      row.metric = kind;
      row.found = route->has_value();
      if (row.found) row.stats = (*route)->stats;
      rows.push_back(row);
    }
    WriteTextFile(csv_path, FormatCsv(rows));
  }

  if (!report.distance.has_value() && !report.bandwidth.has_value()) {
    out << "NO ROUTE\n";
    return kExitNoRoute;
  }
  if (!report.BothFound()) {
    out << "only the " << (report.distance ? "distance" : "bandwidth")
        << " metric found a route\n";
    return kExitOk;
  }
  out << "delta avg_bw: " << Signed(report.AvgBandwidthDelta())
      << "  delta distance: " << Signed(report.DistanceDelta()) << "\n";
  out << "p(bandwidth) <= p(distance): " << (report.RatioNotWorse() ? "yes" : "NO") << "\n";
  out << "packet size: " << kPacketSizeBytes << " B\n";
  return kExitOk;
}

int CmdSweep(SweepConfig config, const std::string& scenario_path, const std::string& csv_path,
             int jobs, std::ostream& out, std::ostream& err) {
  if (!scenario_path.empty()) config.fixed_scenario = LoadScenarioFile(scenario_path);
  const SweepResult result = RunSweep(config, jobs);
  const std::string csv = FormatCsv(result.rows);

  std::ostream& summary = csv_path.empty() ? err : out;
  if (csv_path.empty()) {
    out << csv;
  } else {
    WriteTextFile(csv_path, csv);
    summary << "wrote " << csv_path << " (" << result.rows.size() << " rows)\n";
  }
  int verified = 0, agreeing = 0;
  for (const SweepRound& r : result.rounds) {
    if (!r.oracle_agrees.has_value()) continue;
    ++verified;
    if (*r.oracle_agrees) ++agreeing;
  }
  summary << "rounds=" << config.rounds << " found distance=" << result.distance.found
          << " bandwidth=" << result.bandwidth.found << "\n";
  summary << "mean avg_bandwidth distance=" << Fixed(result.distance.mean_avg_bandwidth)
          << " bandwidth=" << Fixed(result.bandwidth.mean_avg_bandwidth) << "\n";
  summary << "mean total_distance distance=" << Fixed(result.distance.mean_total_distance)
          << " bandwidth=" << Fixed(result.bandwidth.mean_total_distance) << "\n";
  summary << "oracle-checkable rounds=" << verified << " agreeing=" << agreeing << "\n";
  summary << "packet size: " << kPacketSizeBytes << " B\n";
  return kExitOk;
}

void PrintMatch(std::ostream& out, MetricKind kind, const MatchStats& m) {
  out << std::left << std::setw(10) << MetricName(kind) << std::right << std::setw(8) << m.pairs
      << std::setw(9) << m.matched << std::setw(11) << (Fixed(100.0 * m.MatchRate(), 2) + "%")
      << std::setw(16) << std::scientific << std::setprecision(3) << m.worst_relative_gap
      << std::setw(16) << m.max_matched_cost_diff << std::defaultfloat << std::setw(12)
      << m.infeasible_routes << "\n"
      << std::left;
}

int CmdValidate(const std::string& scenario_path, const GenFlags& gen, int rounds,
                int vehicles_max, std::ostream& out) {
  ValidationSummary summary;
  if (!scenario_path.empty()) {
    summary = ValidateAgainstOracle(LoadScenarioFile(scenario_path));
  } else {
    const int lo = gen.vehicles;
    const int hi = std::max(lo, vehicles_max);
    if (hi > kOracleMaxVehicles) {
      throw InputError("validate supports at most " + std::to_string(kOracleMaxVehicles) +
                       " vehicles per scenario");
    }
    for (int r = 0; r < rounds; ++r) {
      GenSpec spec = gen.ToSpec();
      spec.seed = gen.seed + static_cast<std::uint64_t>(r);
      spec.vehicle_count = lo + r % (hi - lo + 1);
      summary.Merge(ValidateAgainstOracle(GenerateScenario(spec)));
    }
  }

  out << "scenarios: " << summary.scenarios << "\n";
  out << std::left << std::setw(10) << "metric" << std::right << std::setw(8) << "pairs"
      << std::setw(9) << "matched" << std::setw(11) << "rate" << std::setw(16) << "worst_rel_gap"
      << std::setw(16) << "matched_diff" << std::setw(12) << "infeasible" << "\n"
      << std::left;
  PrintMatch(out, MetricKind::kDistance, summary.distance);
  PrintMatch(out, MetricKind::kBandwidthRatio, summary.bandwidth);
  out << "distance match rate: " << Fixed(100.0 * summary.distance.MatchRate(), 2) << "%\n";
  out << "bandwidth match rate: " << Fixed(100.0 * summary.bandwidth.MatchRate(), 2) << "%\n";

  const bool sound = summary.distance.matched == summary.distance.pairs &&
                     summary.distance.infeasible_routes == 0 &&
                     summary.bandwidth.infeasible_routes == 0;
  return sound ? kExitOk : kExitNoRoute;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-radio route planning and experiment harness", "mrroute"};
  app.require_subcommand(1);

  GenFlags gen;
  std::string out_path;
  bool force = false;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a random scenario file");
  AddGenFlags(gen_cmd, &gen);
  gen_cmd->add_option("--out", out_path, "Output scenario file")->required();
  gen_cmd->add_flag("--force", force, "Overwrite an existing file");

  QueryFlags query;
  std::string metric_name = "distance";
  CLI::App* route_cmd = app.add_subcommand("route", "Find one route");
  AddQueryFlags(route_cmd, &query);
  route_cmd->add_option("--metric", metric_name, "distance | bandwidth")
      ->check(CLI::IsMember({"distance", "bandwidth"}))
      ->capture_default_str();

  std::string csv_path;
  std::uint64_t compare_seed = 0;
  CLI::App* compare_cmd = app.add_subcommand("compare", "Run both metrics on one query");
  AddQueryFlags(compare_cmd, &query);
  compare_cmd->add_option("--csv", csv_path, "Write the two rows as CSV");
  compare_cmd->add_option("--seed", compare_seed, "Seed value recorded in the CSV");

  SweepConfig sweep;
  GenFlags sweep_gen;
  std::string sweep_scenario;
  std::optional<std::uint32_t> sweep_src, sweep_dst;
  int jobs = 1;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Multi-round metric comparison");
  AddGenFlags(sweep_cmd, &sweep_gen);
  sweep_cmd->add_option("--rounds", sweep.rounds, "Number of rounds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep_cmd->add_option("--scenario", sweep_scenario, "Use this scenario in every round");
  sweep_cmd->add_option("--src", sweep_src, "Source vehicle id");
  sweep_cmd->add_option("--dst", sweep_dst, "Destination vehicle id");
  sweep_cmd->add_option("--csv", csv_path, "CSV output file (default: stdout)");
  sweep_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  GenFlags val_gen;
  val_gen.vehicles = kOracleMaxVehicles;
  std::string val_scenario;
  int val_rounds = 1;
  int vehicles_max = 0;
  CLI::App* validate_cmd =
      app.add_subcommand("validate", "Check search results against exhaustive enumeration");
  AddGenFlags(validate_cmd, &val_gen);
  validate_cmd->add_option("--scenario", val_scenario, "Scenario file (else generate a batch)");
  validate_cmd->add_option("--rounds", val_rounds, "Generated scenarios in the batch")
      ->check(CLI::PositiveNumber);
  validate_cmd->add_option("--vehicles-max", vehicles_max,
                           "Cycle vehicle counts from --vehicles up to this value");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitBadInput;
  }

  try {
    if (*gen_cmd) return CmdGen(gen, out_path, force, out);
    if (*route_cmd) return CmdRoute(query, *ParseMetric(metric_name), out);
    if (*compare_cmd) return CmdCompare(query, csv_path, compare_seed, out);
    if (*sweep_cmd) {
      sweep.gen = sweep_gen.ToSpec();
      if (sweep_src) sweep.source = VehicleId{*sweep_src};
      if (sweep_dst) sweep.destination = VehicleId{*sweep_dst};
      return CmdSweep(sweep, sweep_scenario, csv_path, jobs, out, err);
    }
    if (*validate_cmd) return CmdValidate(val_scenario, val_gen, val_rounds, vehicles_max, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}

}  // namespace mrroute
