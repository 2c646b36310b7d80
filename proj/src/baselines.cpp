#include "uam/baselines.hpp"

#include <algorithm>

#include "uam/rng.hpp"

namespace uam {

int random_policy(const SimState& state, int evtol, std::mt19937_64& rng) {
  const auto options = feasible_actions(state, evtol);
  std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
  return options[pick(rng)];
}

double flight_margin(const SimState& state, int evtol, int dest) {
  const ScenarioConfig& cfg = *state.config;
  const int here = state.fleet[evtol].location;
  const double q = demand_forecast(cfg, here, dest, state.clock);
  const double pax = std::min(static_cast<double>(cfg.params.seat_capacity), q);
  const double fare = static_cast<double>(passenger_fare(cfg, here, dest, state.clock));
  const double r = static_cast<double>(operation_cost(cfg, here, dest));
  const double elec = static_cast<double>(energy_cost(cfg, trip_energy(cfg, here, dest)));
  return pax * fare - (pax * r + elec);
}

int greedy_policy(const SimState& state, int evtol) {
  const int here = state.fleet[evtol].location;
  int best = here;
  double best_margin = 0.0;
  for (int j = 0; j < state.n_vertiports(); ++j) {
    if (j == here || !is_feasible(state, evtol, j)) continue;
    const double m = flight_margin(state, evtol, j);
    if (m > best_margin) {
      best_margin = m;
      best = j;
    }
  }
  return best;
}

void RandomPolicy::reset(const SimState& initial) {
  rng_ = make_rng(initial.config->seed, Stream::Policy);
}

int RandomPolicy::decide(const SimState& state, const Event& event) {
  return random_policy(state, event.evtol, rng_);
}

}  // namespace uam
