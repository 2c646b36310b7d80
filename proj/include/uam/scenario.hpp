#pragma once

// World description for one UAM fleet-scheduling episode: network geometry,
// fleet, demand model, prices and the seed that drives every stochastic draw.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace uam {

class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Half-open clock window [begin, end) in clock-minutes.
struct TimeWindow {
  double begin = 0.0;
  double end = 0.0;
  bool contains(double t) const { return t >= begin && t < end; }
};

/// Scalar operating parameters. Units are in the field names' comments.
struct Params {
  int seat_capacity = 4;              // passengers
  int park_capacity = 10;             // slots per vertiport
  int charge_capacity = 6;            // charging stations per non-vertistop
  double area_side = 50.0;            // miles
  double base_fare = 5.0;             // dollars
  double elec_price = 0.2;            // dollars / kWh
  double op_cost_per_mile = 0.64;     // dollars / mile
  double cost_attribution = 1.0;      // divisor turning vehicle cost into per-passenger R
  double cruise_speed = 74.5;         // mph
  double battery_max = 110.0;         // kWh
  double energy_per_mile = 1.0;       // kWh / mile
  double charge_rate = 110.0 / 30.0;  // kWh / minute
  double wait_time = 15.0;            // minutes
  double t_start = 360.0;             // 6:00
  double t_end = 1080.0;              // 18:00
  double corridor_separation = 2.0;   // minutes
  double max_takeoff_delay = 30.0;    // minutes
  double takeoff_delay_std = 6.0;     // minutes
};

struct Vertiport {
  int id = 0;
  double x = 0.0;
  double y = 0.0;
  bool is_vertistop = false;
  double expected_takeoff_delay = 0.0;  // minutes, <= 6
  int n_charging_stations = 0;
};

/// Static per-aircraft attributes. Dynamic state lives in the simulator.
struct EvtolSpec {
  int id = 0;
  double fail_prob = 0.0;  // per takeoff, <= 0.005
};

struct DemandModel {
  std::vector<std::vector<double>> base_demand;  // passengers / hour, N x N
  std::vector<int> high_demand;                  // V_B
  TimeWindow peak1{480.0, 540.0};
  TimeWindow peak2{960.0, 1020.0};
  double peak_multiplier = 4.0;
};

struct RouteNetwork {
  std::vector<std::vector<int>> adjacency;         // A, symmetric 0/1
  std::vector<std::vector<double>> closure_prob;   // per hour, <= 0.05
};

struct ScenarioConfig {
  Params params;
  std::vector<Vertiport> vertiports;
  std::vector<EvtolSpec> evtols;
  DemandModel demand;
  RouteNetwork routes;
  std::uint64_t seed = 0;

  int n_vertiports() const { return static_cast<int>(vertiports.size()); }
  int n_evtols() const { return static_cast<int>(evtols.size()); }
  bool is_high_demand(int i) const;

  /// Number of whole-or-partial hours between t_start and t_end.
  int n_hours() const;

  /// Throws ScenarioError describing the first violated invariant.
  void validate() const;
};

}  // namespace uam
