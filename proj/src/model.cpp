#include "uam/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace uam {

Cents to_cents(double dollars) { return std::llround(dollars * 100.0); }
double to_dollars(Cents cents) { return static_cast<double>(cents) / 100.0; }

double distance(const ScenarioConfig& cfg, int i, int j) {
  const Vertiport& a = cfg.vertiports.at(i);
  const Vertiport& b = cfg.vertiports.at(j);
  return std::hypot(a.x - b.x, a.y - b.y);
}

double flight_minutes(double miles, double speed_mph) { return miles / speed_mph * 60.0; }

double flight_time(const ScenarioConfig& cfg, int i, int j) {
  if (i == j) throw std::domain_error("flight_time: origin equals destination");
  return flight_minutes(distance(cfg, i, j), cfg.params.cruise_speed);
}

double trip_energy_for(double miles, double energy_per_mile) { return miles * energy_per_mile; }

double trip_energy(const ScenarioConfig& cfg, int i, int j) {
  if (i == j) throw std::domain_error("trip_energy: origin equals destination");
  return trip_energy_for(distance(cfg, i, j), cfg.params.energy_per_mile);
}

double q_factor(double q) {
  if (q <= 0.0) return 1.0;
  return std::max(std::log(q / 10.0), 1.0);
}

Cents operation_cost(const ScenarioConfig& cfg, int i, int j) {
  const Params& p = cfg.params;
  return to_cents(distance(cfg, i, j) * p.op_cost_per_mile / p.cost_attribution);
}

Cents fare_for(Cents base_fare, Cents op_cost, double q) {
  return base_fare + std::llround(static_cast<double>(op_cost) * q_factor(q));
}

Cents passenger_fare(const ScenarioConfig& cfg, int i, int j, double t) {
  return fare_for(to_cents(cfg.params.base_fare), operation_cost(cfg, i, j),
                  demand_forecast(cfg, i, j, t));
}

Cents energy_cost(const ScenarioConfig& cfg, double kwh) {
  return to_cents(cfg.params.elec_price * kwh);
}

double demand_forecast(const ScenarioConfig& cfg, int i, int j, double t) {
  if (i == j) return 0.0;
  const DemandModel& d = cfg.demand;
  const double base = d.base_demand.at(i).at(j);
  const bool in1 = d.peak1.contains(t);
  const bool in2 = d.peak2.contains(t);
  const bool bi = cfg.is_high_demand(i);
  const bool bj = cfg.is_high_demand(j);
  const bool peak = (in1 && bj && !bi) || (in2 && bi && !bj) || ((in1 || in2) && bi && bj);
  return peak ? base * d.peak_multiplier : base;
}

int sample_actual_demand(const ScenarioConfig& cfg, int i, int j, double t,
                         std::mt19937_64& rng) {
  const double mean = demand_forecast(cfg, i, j, t);
  if (mean <= 0.0) return 0;
  std::poisson_distribution<int> dist(mean);
  return dist(rng);
}

int hour_index(const ScenarioConfig& cfg, double t) {
  const int h = static_cast<int>(std::floor((t - cfg.params.t_start) / 60.0));
  return std::clamp(h, 0, cfg.n_hours() - 1);
}

double hour_start(const ScenarioConfig& cfg, int h) { return cfg.params.t_start + 60.0 * h; }

}  // namespace uam
