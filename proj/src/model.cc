#include "mrroute/model.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"

namespace mrroute {

using Json = nlohmann::ordered_json;

const Vehicle* Scenario::Find(VehicleId id) const {
  for (const Vehicle& v : vehicles) {
    if (v.id == id) return &v;
  }
  return nullptr;
}

const Vehicle& Scenario::At(VehicleId id) const {
  const Vehicle* v = Find(id);
  if (v == nullptr) {
    throw InputError("unknown vehicle_id " + std::to_string(ToInt(id)));
  }
  return *v;
}

namespace {

std::string JoinViolations(const std::vector<std::string>& violations) {
  std::string out = "invalid scenario:";
  for (const std::string& v : violations) out += "\n  " + v;
  return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> violations)
    : InputError(JoinViolations(violations)), violations_(std::move(violations)) {}

ValidationReport ValidateScenario(const Scenario& s) {
  ValidationReport report;
  if (!(s.area.width > 0.0) || !(s.area.height > 0.0)) {
    report.push_back("area dimensions > 0 violated");
  }
  if (!(s.comm_range > 0.0)) report.push_back("comm_range > 0 violated");

  std::set<VehicleId> seen;
  std::set<VehicleId> reported;
  for (const Vehicle& v : s.vehicles) {
    const std::string tag = "vehicle " + std::to_string(ToInt(v.id));
    if (!seen.insert(v.id).second && reported.insert(v.id).second) {
      report.push_back("duplicate vehicle_id " + std::to_string(ToInt(v.id)));
    }
    const Position& p = v.position;
    if (!(p.x >= 0.0 && p.x <= s.area.width && p.y >= 0.0 && p.y <= s.area.height)) {
      std::ostringstream msg;
      msg << tag << ": position (" << p.x << ", " << p.y << ") out of bounds";
      report.push_back(msg.str());
    }
    if (v.radios.empty()) {
      report.push_back(tag + ": empty radio list");
      continue;
    }
    std::set<RadioId> radio_ids;
    for (const Radio& r : v.radios) {
      const std::string rtag = tag + " radio " + std::to_string(ToInt(r.id));
      if (!radio_ids.insert(r.id).second) {
        report.push_back(tag + ": duplicate radio_id " + std::to_string(ToInt(r.id)));
      }
      if (!(r.bandwidth > 0.0) || !std::isfinite(r.bandwidth)) {
        std::ostringstream msg;
        msg << rtag << ": bandwidth > 0 violated (" << r.bandwidth << ")";
        report.push_back(msg.str());
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Generation

namespace {

// The standard distributions are implementation-defined, so draws are made
// directly from the engine output to keep scenarios identical across
// toolchains.
double UnitDraw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t IndexDraw(std::mt19937_64& rng, std::size_t n) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<std::size_t>(x % n);
}

}  // namespace

Scenario GenerateScenario(const GenSpec& spec) {
  if (spec.frequency_pool.empty()) throw InputError("frequency_pool is empty");
  if (spec.vehicle_count < 1) throw InputError("vehicle_count must be positive");
  if (spec.radios_per_vehicle < 1) throw InputError("radios_per_vehicle must be positive");
  if (!(spec.area.width > 0.0) || !(spec.area.height > 0.0)) {
    throw InputError("area dimensions must be positive");
  }
  if (!(spec.comm_range > 0.0)) throw InputError("comm_range must be positive");
  if (!(spec.bandwidth_min > 0.0) || !(spec.bandwidth_min <= spec.bandwidth_max)) {
    throw InputError("bandwidth range must satisfy 0 < min <= max");
  }

  std::mt19937_64 rng(spec.seed);
  Scenario s;
  s.area = spec.area;
  s.comm_range = spec.comm_range;
  s.vehicles.reserve(static_cast<std::size_t>(spec.vehicle_count));
  for (int i = 0; i < spec.vehicle_count; ++i) {
    Vehicle v;
    v.id = VehicleId{static_cast<std::uint32_t>(i + 1)};
    v.position.x = UnitDraw(rng) * spec.area.width;
    v.position.y = UnitDraw(rng) * spec.area.height;
    for (int k = 0; k < spec.radios_per_vehicle; ++k) {
      Radio r;
      r.id = RadioId{static_cast<std::uint32_t>(k + 1)};
      r.frequency = spec.frequency_pool[IndexDraw(rng, spec.frequency_pool.size())];
      const double raw = spec.bandwidth_min +
                         UnitDraw(rng) * (spec.bandwidth_max - spec.bandwidth_min);
      // Rounding must not produce a zero bandwidth for tiny ranges.
      r.bandwidth = std::max(std::round(raw * 10.0) / 10.0, 0.1);
      v.radios.push_back(r);
    }
    s.vehicles.push_back(std::move(v));
  }
  return s;
}

// ---------------------------------------------------------------------------
// Persistence

namespace {

void CheckKeys(const Json& obj, std::initializer_list<const char*> allowed,
               const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw ParseError(where + ": unknown field \"" + key + "\"");
  }
  for (const char* a : allowed) {
    if (!obj.contains(a)) throw ParseError(where + ": missing field \"" + a + "\"");
  }
}

double GetNumber(const Json& obj, const char* key, const std::string& where) {
  const Json& v = obj.at(key);
  if (!v.is_number()) {
    throw ParseError(where + "." + key + ": expected a number");
  }
  return v.get<double>();
}

std::int64_t GetInteger(const Json& obj, const char* key, const std::string& where) {
  const Json& v = obj.at(key);
  if (!v.is_number_integer()) {
    throw ParseError(where + "." + key + ": expected an integer");
  }
  return v.get<std::int64_t>();
}

std::uint32_t GetId(const Json& obj, const char* key, const std::string& where) {
  const std::int64_t id = GetInteger(obj, key, where);
  if (id < 0 || id > std::numeric_limits<std::uint32_t>::max()) {
    throw ParseError(where + "." + key + ": id out of range");
  }
  return static_cast<std::uint32_t>(id);
}

}  // namespace

std::string SaveScenario(const Scenario& s) {
  Json doc;
  doc["area"] = {{"width", s.area.width}, {"height", s.area.height}};
  doc["comm_range"] = s.comm_range;
  Json vehicles = Json::array();
  for (const Vehicle& v : s.vehicles) {
    Json radios = Json::array();
    for (const Radio& r : v.radios) {
      radios.push_back({{"id", ToInt(r.id)}, {"freq", ToInt(r.frequency)}, {"bw", r.bandwidth}});
    }
    vehicles.push_back({{"id", ToInt(v.id)},
                        {"x", v.position.x},
                        {"y", v.position.y},
                        {"radios", std::move(radios)}});
  }
  doc["vehicles"] = std::move(vehicles);
  return doc.dump(2) + "\n";
}

Scenario LoadScenario(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed scenario document: ") + e.what());
  }

  Scenario s;
  CheckKeys(doc, {"area", "comm_range", "vehicles"}, "document");
  CheckKeys(doc["area"], {"width", "height"}, "area");
  s.area.width = GetNumber(doc["area"], "width", "area");
  s.area.height = GetNumber(doc["area"], "height", "area");
  s.comm_range = GetNumber(doc, "comm_range", "document");

  const Json& vehicles = doc["vehicles"];
  if (!vehicles.is_array()) throw ParseError("vehicles: expected an array");
  for (std::size_t i = 0; i < vehicles.size(); ++i) {
    const std::string where = "vehicles[" + std::to_string(i) + "]";
    const Json& jv = vehicles[i];
    CheckKeys(jv, {"id", "x", "y", "radios"}, where);
    Vehicle v;
    v.id = VehicleId{GetId(jv, "id", where)};
    v.position = {GetNumber(jv, "x", where), GetNumber(jv, "y", where)};
    const Json& radios = jv["radios"];
    if (!radios.is_array()) throw ParseError(where + ".radios: expected an array");
    for (std::size_t k = 0; k < radios.size(); ++k) {
      const std::string rwhere = where + ".radios[" + std::to_string(k) + "]";
      const Json& jr = radios[k];
      CheckKeys(jr, {"id", "freq", "bw"}, rwhere);
      v.radios.push_back({RadioId{GetId(jr, "id", rwhere)},
                          Frequency{GetInteger(jr, "freq", rwhere)},
                          GetNumber(jr, "bw", rwhere)});
    }
    s.vehicles.push_back(std::move(v));
  }

  ValidationReport report = ValidateScenario(s);
  if (!report.empty()) throw ValidationError(std::move(report));
  return s;
}

Scenario LoadScenarioFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open scenario file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return LoadScenario(buf.str());
}

void SaveScenarioFile(const Scenario& s, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write scenario file " + path);
  out << SaveScenario(s);
  if (!out) throw InputError("write failed for " + path);
}

}  // namespace mrroute
