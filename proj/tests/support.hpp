#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "uam/harness/scenario_gen.hpp"
#include "uam/scenario.hpp"

namespace uam::testing {

/// Fully connected scenario with deterministic operations (no closures,
/// failures or expected delay) at the given coordinates.
inline ScenarioConfig small_scenario(const std::vector<std::pair<double, double>>& coords, int n_evtols,
                                     double demand = 5.0) {
  ScenarioConfig cfg;
  const int n = static_cast<int>(coords.size());
  for (int i = 0; i < n; ++i) {
    Vertiport v;
    v.id = i;
    v.x = coords[i].first;
    v.y = coords[i].second;
    v.n_charging_stations = cfg.params.charge_capacity;
    cfg.vertiports.push_back(v);
  }
  for (int k = 0; k < n_evtols; ++k) cfg.evtols.push_back({k, 0.0});
  cfg.demand.base_demand.assign(n, std::vector<double>(n, demand));
  cfg.routes.adjacency.assign(n, std::vector<int>(n, 1));
  cfg.routes.closure_prob.assign(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    cfg.demand.base_demand[i][i] = 0.0;
    cfg.routes.adjacency[i][i] = 0;
  }
  cfg.seed = 42;
  cfg.validate();
  return cfg;
}

inline std::shared_ptr<const ScenarioConfig> shared(ScenarioConfig cfg) {
  return std::make_shared<const ScenarioConfig>(std::move(cfg));
}

/// Toy-template scenario (4 vertiports, 6 aircraft) with the given index.
inline ScenarioConfig toy_scenario(int index, std::uint64_t master = 2024) {
  const auto tmpl = harness::ScenarioTemplate::toy();
  return harness::make_scenario(harness::make_world(tmpl, master), master, harness::Split::Seen, index,
                                tmpl.fail_max);
}

inline ScenarioConfig standard_scenario(int index, std::uint64_t master = 2024) {
  const auto tmpl = harness::ScenarioTemplate::standard();
  return harness::make_scenario(harness::make_world(tmpl, master), master, harness::Split::Seen, index,
                                tmpl.fail_max);
}

}  // namespace uam::testing
