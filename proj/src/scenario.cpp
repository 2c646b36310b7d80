#include "uam/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace uam {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ScenarioError("invalid scenario: " + what);
}

template <typename T>
void require_square(const std::vector<std::vector<T>>& m, int n, const std::string& name) {
  require(static_cast<int>(m.size()) == n, name + " must have " + std::to_string(n) + " rows");
  for (const auto& row : m)
    require(static_cast<int>(row.size()) == n, name + " must have " + std::to_string(n) + " columns");
}

}  // namespace

bool ScenarioConfig::is_high_demand(int i) const {
  return std::find(demand.high_demand.begin(), demand.high_demand.end(), i) !=
         demand.high_demand.end();
}

int ScenarioConfig::n_hours() const {
  return static_cast<int>(std::ceil((params.t_end - params.t_start) / 60.0));
}

void ScenarioConfig::validate() const {
  const Params& p = params;
  require(p.seat_capacity >= 1, "seat_capacity must be >= 1");
  require(p.park_capacity >= 1, "park_capacity must be >= 1");
  require(p.charge_capacity >= 1, "charge_capacity must be >= 1");
  require(p.area_side > 0, "area_side must be > 0");
  require(p.base_fare > 0, "base_fare must be > 0");
  require(p.elec_price > 0, "elec_price must be > 0");
  require(p.op_cost_per_mile > 0, "op_cost_per_mile must be > 0");
  require(p.cost_attribution > 0, "cost_attribution must be > 0");
  require(p.cruise_speed > 0, "cruise_speed must be > 0");
  require(p.battery_max > 0, "battery_max must be > 0");
  require(p.energy_per_mile > 0, "energy_per_mile must be > 0");
  require(p.charge_rate > 0, "charge_rate must be > 0");
  require(p.wait_time > 0, "wait_time must be > 0");
  require(p.t_start < p.t_end, "t_start must precede t_end");
  require(p.corridor_separation > 0, "corridor_separation must be > 0");
  require(p.max_takeoff_delay > 0, "max_takeoff_delay must be > 0");
  require(p.takeoff_delay_std > 0, "takeoff_delay_std must be > 0");
  require(p.energy_per_mile * p.area_side * std::sqrt(2.0) <= p.battery_max,
          "the area diagonal must be reachable on a full charge");

  const int n = n_vertiports();
  require(n >= 1, "at least one vertiport required");
  for (int i = 0; i < n; ++i) {
    const Vertiport& v = vertiports[i];
    require(v.id == i, "vertiport ids must be 0..N-1 in order");
    require(v.x >= 0 && v.x <= p.area_side && v.y >= 0 && v.y <= p.area_side,
            "vertiport " + std::to_string(i) + " lies outside the area");
    require(v.expected_takeoff_delay >= 0 && v.expected_takeoff_delay <= 6.0,
            "expected_takeoff_delay must be in [0, 6]");
    require(v.n_charging_stations >= 0, "n_charging_stations must be >= 0");
    require(!v.is_vertistop || v.n_charging_stations == 0,
            "vertistop " + std::to_string(i) + " cannot have charging stations");
  }

  require(n_evtols() >= 1, "at least one eVTOL required");
  require(n_evtols() <= n * p.park_capacity, "fleet exceeds total parking capacity");
  for (int k = 0; k < n_evtols(); ++k) {
    require(evtols[k].id == k, "eVTOL ids must be 0..N_K-1 in order");
    require(evtols[k].fail_prob >= 0 && evtols[k].fail_prob <= 0.005,
            "fail_prob must be in [0, 0.005]");
  }

  require_square(demand.base_demand, n, "base_demand");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      require(demand.base_demand[i][j] >= 0, "base_demand must be nonnegative");
      require(i != j || demand.base_demand[i][j] == 0, "base_demand diagonal must be zero");
    }
  for (int b : demand.high_demand) require(b >= 0 && b < n, "high_demand index out of range");
  require(demand.peak_multiplier > 0, "peak_multiplier must be > 0");

  require_square(routes.adjacency, n, "adjacency");
  require_square(routes.closure_prob, n, "closure_prob");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int a = routes.adjacency[i][j];
      require(a == 0 || a == 1, "adjacency entries must be 0 or 1");
      require(a == routes.adjacency[j][i], "adjacency must be symmetric");
      require(i != j || a == 0, "adjacency diagonal must be zero");
      const double pc = routes.closure_prob[i][j];
      require(pc >= 0 && pc <= 0.05, "closure_prob must be in [0, 0.05]");
      require(pc == routes.closure_prob[j][i], "closure_prob must be symmetric");
    }
}

}  // namespace uam
