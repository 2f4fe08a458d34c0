#ifndef MRROUTE_MODEL_H_
#define MRROUTE_MODEL_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mrroute {

// Identifiers are distinct types so a radio id can never be passed where a
// vehicle id is expected.
enum class VehicleId : std::uint32_t {};
enum class RadioId : std::uint32_t {};
// Operating channel. Opaque: two radios communicate iff their channels are
// equal, the numeric value is never used arithmetically.
enum class Frequency : std::int64_t {};

constexpr std::uint32_t ToInt(VehicleId id) { return static_cast<std::uint32_t>(id); }
constexpr std::uint32_t ToInt(RadioId id) { return static_cast<std::uint32_t>(id); }
constexpr std::int64_t ToInt(Frequency f) { return static_cast<std::int64_t>(f); }

struct Position {
  double x = 0.0;  // meters
  double y = 0.0;  // meters

  friend bool operator==(const Position&, const Position&) = default;
};

struct Radio {
  RadioId id{};
  Frequency frequency{};
  double bandwidth = 0.0;  // kilobits per second, > 0

  friend bool operator==(const Radio&, const Radio&) = default;
};

struct Vehicle {
  VehicleId id{};
  Position position;
  std::vector<Radio> radios;

  friend bool operator==(const Vehicle&, const Vehicle&) = default;
};

struct Area {
  double width = 0.0;
  double height = 0.0;

  friend bool operator==(const Area&, const Area&) = default;
};

// The full world: bounds, link threshold and the vehicle set. Immutable once
// built; searches share it by const reference.
struct Scenario {
  Area area;
  double comm_range = 0.0;
  std::vector<Vehicle> vehicles;

  // Returns nullptr if no vehicle carries `id`.
  const Vehicle* Find(VehicleId id) const;
  // Throws InputError if no vehicle carries `id`.
  const Vehicle& At(VehicleId id) const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

// Bad caller input: unknown ids, bad flags, files that cannot be read.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A scenario document that is not well-formed or does not follow the schema.
class ParseError : public InputError {
 public:
  using InputError::InputError;
};

// Well-formed data that breaks a scenario invariant.
class ValidationError : public InputError {
 public:
  ValidationError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

using ValidationReport = std::vector<std::string>;

// Lists every invariant violation in `s`. An empty report means the scenario
// is valid; other modules accept a scenario only in that case.
ValidationReport ValidateScenario(const Scenario& s);

// Parameters of a random scenario. Defaults are the 30-vehicle,
// 1000 m x 1000 m, 200 m range field setup.
struct GenSpec {
  std::uint64_t seed = 0;
  int vehicle_count = 30;
  Area area{1000.0, 1000.0};
  double comm_range = 200.0;
  int radios_per_vehicle = 1;
  std::vector<Frequency> frequency_pool{Frequency{1}};
  double bandwidth_min = 2.0;
  double bandwidth_max = 10.0;
};

// Draws a scenario from `spec`. Positions are uniform over the area,
// frequencies uniform over the pool and bandwidths uniform over the range,
// rounded to one decimal. Vehicles get ids 1..n and radios 1..k.
// The result depends on `spec` alone, bit for bit, on every platform.
// Throws InputError if `spec` is inconsistent.
Scenario GenerateScenario(const GenSpec& spec);

// Scenario document (JSON) persistence. LoadScenario throws ParseError on a
// malformed or non-conforming document and ValidationError if the scenario it
// describes is invalid.
std::string SaveScenario(const Scenario& s);
Scenario LoadScenario(std::string_view text);

Scenario LoadScenarioFile(const std::string& path);
void SaveScenarioFile(const Scenario& s, const std::string& path);

}  // namespace mrroute

#endif  // MRROUTE_MODEL_H_
