#pragma once

// Event-driven episode engine. Every aircraft that is ready for takeoff
// produces an event; the caller picks a destination (or the current
// vertiport to wait) and the engine books the consequences.
//
// All stochasticity is fixed by the scenario seed:
//   - realized hourly demand and route closures are drawn at episode start,
//   - failure and takeoff delay of the l-th takeoff attempt of aircraft k
//     come from a stream keyed by (seed, k, l).
// A state therefore replays identically from any clone regardless of how
// other clones were advanced.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "uam/model.hpp"
#include "uam/scenario.hpp"

namespace uam {

struct AircraftState {
  int location = 0;            // vertiport parked at, or heading to
  int origin = 0;              // vertiport held until takeoff_time
  double takeoff_time = 0.0;   // T^flight: latest scheduled takeoff
  double next_decision = 0.0;  // T^dec
  double battery = 0.0;        // kWh
  int legs = 0;                // takeoff attempts so far
  bool failed = false;
};

/// Episode-level draws fixed at init: realized demand and route closures per hour.
struct Realization {
  int n = 0;
  int hours = 0;
  std::vector<int> actual_demand;  // [h][i][j]
  std::vector<std::uint8_t> closed;  // [h][i][j], symmetric

  std::size_t index(int h, int i, int j) const {
    return (static_cast<std::size_t>(h) * n + i) * n + j;
  }
  bool is_closed(int h, int i, int j) const { return closed[index(h, i, j)] != 0; }
};

Realization sample_realization(const ScenarioConfig& cfg);

struct Event {
  double time = 0.0;
  int evtol = 0;
  friend bool operator==(const Event&, const Event&) = default;
};

/// Mutable episode state. Copying yields an independent episode branch.
struct SimState {
  std::shared_ptr<const ScenarioConfig> config;
  std::shared_ptr<const Realization> draws;

  double clock = 0.0;
  std::vector<AircraftState> fleet;
  std::vector<std::vector<double>> charger_free;  // earliest-free time per station
  std::vector<double> corridor;                   // T^cor [i][j][c]
  std::vector<int> demand_left;                   // unserved Q_act [h][i][j]

  Cents revenue = 0;
  Cents operating_cost = 0;
  Cents energy_cost = 0;
  int idle_decisions = 0;
  int flight_decisions = 0;
  int failures = 0;

  int n_vertiports() const { return config->n_vertiports(); }
  int n_evtols() const { return config->n_evtols(); }
  Cents profit() const { return revenue - operating_cost - energy_cost; }

  double corridor_time(int i, int j, int c) const {
    return corridor[(static_cast<std::size_t>(i) * n_vertiports() + j) * 2 + c];
  }
  /// Slots held at vertiport i at the current clock: aircraft parked there,
  /// aircraft with a reservation inbound, and aircraft not yet departed.
  int occupancy(int i) const;
  /// Earliest time a charging station at i is free; t_end for vertistops.
  double charge_free_time(int i) const;
  bool route_open(int i, int j) const;
};

enum class DecisionKind { Wait, Flight, Failure };

const char* to_string(DecisionKind kind);
DecisionKind decision_kind_from_string(const std::string& s);

/// One decision and, for flights, the journey it produced.
struct DecisionRecord {
  double event_time = 0.0;
  int evtol = 0;
  int origin = 0;
  int action = 0;
  DecisionKind kind = DecisionKind::Wait;
  int corridor = -1;
  double delay = 0.0;
  double takeoff = 0.0;
  double landing = 0.0;
  int passengers = 0;
  Cents fare = 0;         // per passenger, total ticket price
  Cents op_cost = 0;      // R_ij per passenger
  double energy = 0.0;    // kWh
  Cents energy_cost = 0;
  double battery_before = 0.0;
  double battery_after = 0.0;

  friend bool operator==(const DecisionRecord&, const DecisionRecord&) = default;
};

struct ProfitBreakdown {
  Cents revenue = 0;
  Cents operating_cost = 0;
  Cents energy_cost = 0;
  Cents net() const { return revenue - operating_cost - energy_cost; }
  friend bool operator==(const ProfitBreakdown&, const ProfitBreakdown&) = default;
};

struct EpisodeLog {
  std::vector<int> initial_locations;
  std::vector<DecisionRecord> decisions;
  int idle_decisions = 0;
  int flight_decisions = 0;
  ProfitBreakdown totals;  // running totals reported by the engine

  std::vector<DecisionRecord> journeys() const;
  friend bool operator==(const EpisodeLog&, const EpisodeLog&) = default;
};

SimState init_episode(std::shared_ptr<const ScenarioConfig> config);
SimState init_episode(const ScenarioConfig& config);

/// Earliest (T^dec, id) active aircraft with T^dec <= t_end.
std::optional<Event> next_event(const SimState& state);

bool is_feasible(const SimState& state, int evtol, int dest);
/// Mask over vertiports; the aircraft's own vertiport is always feasible.
std::vector<std::uint8_t> feasible_mask(const SimState& state, int evtol);
std::vector<int> feasible_actions(const SimState& state, int evtol);

/// Advances the clock to the aircraft's event and books the decision.
/// Throws std::invalid_argument if `evtol` is not the acting aircraft or
/// `dest` is infeasible.
DecisionRecord apply_decision(SimState& state, int evtol, int dest);

/// Recomputes revenue and costs from the decision records alone.
ProfitBreakdown profit(const EpisodeLog& log);

/// Sum of forecast demand times fare over all ordered pairs and hours, dollars.
double max_possible_profit(const ScenarioConfig& cfg);

/// Net profit over max_possible_profit.
double episode_reward(const EpisodeLog& log, const ScenarioConfig& cfg);

/// Wraps a state and its log; the usual way to drive a whole episode.
class Episode {
 public:
  explicit Episode(std::shared_ptr<const ScenarioConfig> config);

  const SimState& state() const { return state_; }
  const EpisodeLog& log() const { return log_; }
  std::optional<Event> next() const { return next_event(state_); }
  bool done() const { return !next().has_value(); }

  /// Infeasible destinations are coerced to waiting; returns true if coerced.
  bool step(int dest);
  const ScenarioConfig& config() const { return *state_.config; }

 private:
  SimState state_;
  EpisodeLog log_;
};

}  // namespace uam
