#pragma once

// Closed-form network quantities: geometry, flight time, energy, fares,
// per-passenger operating cost and the demand forecast.

#include <cstdint>
#include <random>

#include "uam/scenario.hpp"

namespace uam {

/// Money is carried in integer cents so that accounting identities are exact.
using Cents = std::int64_t;

Cents to_cents(double dollars);
double to_dollars(Cents cents);

double distance(const ScenarioConfig& cfg, int i, int j);

/// Minutes to cover `miles` at `speed_mph`.
double flight_minutes(double miles, double speed_mph);
/// Throws std::domain_error when i == j: staying put is not a flight.
double flight_time(const ScenarioConfig& cfg, int i, int j);

/// kWh drawn by a flight of `miles` (B^charge).
double trip_energy_for(double miles, double energy_per_mile);
/// Throws std::domain_error when i == j.
double trip_energy(const ScenarioConfig& cfg, int i, int j);

/// max(ln(q / 10), 1).
double q_factor(double q);

/// Per-passenger operating cost R_ij in cents.
Cents operation_cost(const ScenarioConfig& cfg, int i, int j);

/// Total ticket price in cents: base fare + R_ij * q_factor(q).
Cents fare_for(Cents base_fare, Cents op_cost, double q);
Cents passenger_fare(const ScenarioConfig& cfg, int i, int j, double t);

/// Electricity cost in cents for `kwh` at the configured price.
Cents energy_cost(const ScenarioConfig& cfg, double kwh);

/// Forecast passengers per hour from i to j at clock t, peak rule applied.
double demand_forecast(const ScenarioConfig& cfg, int i, int j, double t);

/// Realized demand for one hourly bucket: Poisson with the forecast as mean.
int sample_actual_demand(const ScenarioConfig& cfg, int i, int j, double t,
                         std::mt19937_64& rng);

/// Hour bucket of clock t, clamped to [0, n_hours - 1].
int hour_index(const ScenarioConfig& cfg, double t);
/// Clock-minute at which hour bucket h starts.
double hour_start(const ScenarioConfig& cfg, int h);

}  // namespace uam
