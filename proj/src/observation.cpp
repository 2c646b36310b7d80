#include "uam/observation.hpp"

#include <stdexcept>
#include <string>

namespace uam {

Observation observe(const SimState& state, int acting_evtol) {
  const ScenarioConfig& cfg = *state.config;
  const double t0 = cfg.params.t_start;
  const int n = cfg.n_vertiports();
  const int nk = cfg.n_evtols();

  Observation o;
  o.n_vertiports = n;
  o.n_evtols = nk;
  o.acting_evtol = acting_evtol;

  o.vertiport_features.reserve(static_cast<std::size_t>(n) * kVertiportFeatures);
  for (int i = 0; i < n; ++i) {
    const Vertiport& v = cfg.vertiports[i];
    o.vertiport_features.insert(o.vertiport_features.end(),
                                {v.x, v.y, static_cast<double>(state.occupancy(i)),
                                 state.charge_free_time(i) - t0, v.expected_takeoff_delay,
                                 v.is_vertistop ? 1.0 : 0.0});
  }

  o.evtol_features.reserve(static_cast<std::size_t>(nk) * kEvtolFeatures);
  for (int k = 0; k < nk; ++k) {
    const AircraftState& a = state.fleet[k];
    const Vertiport& dest = cfg.vertiports[a.location];
    const double next_decision = a.failed ? cfg.params.t_end - t0 : a.next_decision - t0;
    o.evtol_features.insert(o.evtol_features.end(),
                            {dest.x, dest.y, a.battery, a.takeoff_time - t0, next_decision,
                             cfg.evtols[k].fail_prob});
  }

  o.vertiport_adjacency.resize(static_cast<std::size_t>(n) * n);
  o.demand.resize(o.vertiport_adjacency.size());
  o.fare.resize(o.vertiport_adjacency.size());
  o.cost.resize(o.vertiport_adjacency.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::size_t at = static_cast<std::size_t>(i) * n + j;
      o.vertiport_adjacency[at] = (1.0 - cfg.routes.closure_prob[i][j]) * cfg.routes.adjacency[i][j];
      o.demand[at] = demand_forecast(cfg, i, j, state.clock);
      o.fare[at] = i == j ? 0.0 : to_dollars(passenger_fare(cfg, i, j, state.clock));
      o.cost[at] = to_dollars(operation_cost(cfg, i, j));
    }

  o.evtol_adjacency.assign(static_cast<std::size_t>(nk) * nk, 1.0);
  for (int k = 0; k < nk; ++k) o.evtol_adjacency[static_cast<std::size_t>(k) * nk + k] = 0.0;

  o.corridor.reserve(state.corridor.size());
  for (double t : state.corridor) o.corridor.push_back(t - t0);
  return o;
}

nlohmann::json observation_to_json(const Observation& o) {
  return {{"schema", kObservationSchema},
          {"n_vertiports", o.n_vertiports},
          {"n_evtols", o.n_evtols},
          {"acting_evtol", o.acting_evtol},
          {"vertiport_features", o.vertiport_features},
          {"evtol_features", o.evtol_features},
          {"vertiport_adjacency", o.vertiport_adjacency},
          {"evtol_adjacency", o.evtol_adjacency},
          {"demand", o.demand},
          {"fare", o.fare},
          {"cost", o.cost},
          {"corridor", o.corridor}};
}

Observation observation_from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.value("schema", "") != kObservationSchema)
    throw std::invalid_argument("observation: unsupported schema");
  Observation o;
  try {
    o.n_vertiports = j.at("n_vertiports").get<int>();
    o.n_evtols = j.at("n_evtols").get<int>();
    o.acting_evtol = j.at("acting_evtol").get<int>();
    o.vertiport_features = j.at("vertiport_features").get<std::vector<double>>();
    o.evtol_features = j.at("evtol_features").get<std::vector<double>>();
    o.vertiport_adjacency = j.at("vertiport_adjacency").get<std::vector<double>>();
    o.evtol_adjacency = j.at("evtol_adjacency").get<std::vector<double>>();
    o.demand = j.at("demand").get<std::vector<double>>();
    o.fare = j.at("fare").get<std::vector<double>>();
    o.cost = j.at("cost").get<std::vector<double>>();
    o.corridor = j.at("corridor").get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("observation: ") + e.what());
  }
  const std::size_t n = o.n_vertiports, nk = o.n_evtols;
  if (o.vertiport_features.size() != n * kVertiportFeatures ||
      o.evtol_features.size() != nk * kEvtolFeatures || o.vertiport_adjacency.size() != n * n ||
      o.evtol_adjacency.size() != nk * nk || o.demand.size() != n * n || o.fare.size() != n * n ||
      o.cost.size() != n * n || o.corridor.size() != 2 * n * n)
    throw std::invalid_argument("observation: array shapes disagree with dimensions");
  return o;
}

}  // namespace uam
