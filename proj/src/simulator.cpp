#include "uam/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "uam/rng.hpp"

namespace uam {

Realization sample_realization(const ScenarioConfig& cfg) {
  Realization r;
  r.n = cfg.n_vertiports();
  r.hours = cfg.n_hours();
  const std::size_t size = static_cast<std::size_t>(r.hours) * r.n * r.n;
  r.actual_demand.assign(size, 0);
  r.closed.assign(size, 0);

  auto demand_rng = make_rng(cfg.seed, Stream::Demand);
  auto closure_rng = make_rng(cfg.seed, Stream::Closure);
  for (int h = 0; h < r.hours; ++h) {
    const double t = hour_start(cfg, h);
    for (int i = 0; i < r.n; ++i)
      for (int j = 0; j < r.n; ++j)
        if (i != j) r.actual_demand[r.index(h, i, j)] = sample_actual_demand(cfg, i, j, t, demand_rng);
    for (int i = 0; i < r.n; ++i)
      for (int j = i + 1; j < r.n; ++j) {
        std::bernoulli_distribution closed(cfg.routes.closure_prob[i][j]);
        const std::uint8_t c = closed(closure_rng) ? 1 : 0;
        r.closed[r.index(h, i, j)] = c;
        r.closed[r.index(h, j, i)] = c;
      }
  }
  return r;
}

int SimState::occupancy(int i) const {
  int count = 0;
  for (const AircraftState& a : fleet) {
    if (a.location == i) ++count;
    else if (a.origin == i && a.takeoff_time > clock) ++count;
  }
  return count;
}

double SimState::charge_free_time(int i) const {
  const auto& stations = charger_free[i];
  if (stations.empty()) return config->params.t_end;
  return *std::min_element(stations.begin(), stations.end());
}

bool SimState::route_open(int i, int j) const {
  return config->routes.adjacency[i][j] == 1 &&
         !draws->is_closed(hour_index(*config, clock), i, j);
}

const char* to_string(DecisionKind kind) {
  switch (kind) {
    case DecisionKind::Wait: return "wait";
    case DecisionKind::Flight: return "flight";
    case DecisionKind::Failure: return "failure";
  }
  return "?";
}

DecisionKind decision_kind_from_string(const std::string& s) {
  if (s == "wait") return DecisionKind::Wait;
  if (s == "flight") return DecisionKind::Flight;
  if (s == "failure") return DecisionKind::Failure;
  throw std::invalid_argument("unknown decision kind '" + s + "'");
}

std::vector<DecisionRecord> EpisodeLog::journeys() const {
  std::vector<DecisionRecord> out;
  for (const auto& d : decisions)
    if (d.kind == DecisionKind::Flight) out.push_back(d);
  return out;
}

SimState init_episode(std::shared_ptr<const ScenarioConfig> config) {
  config->validate();
  const ScenarioConfig& cfg = *config;
  const int n = cfg.n_vertiports();

  SimState s;
  s.config = config;
  s.draws = std::make_shared<const Realization>(sample_realization(cfg));
  s.clock = cfg.params.t_start;

  s.fleet.resize(cfg.n_evtols());
  for (int k = 0; k < cfg.n_evtols(); ++k) {
    AircraftState& a = s.fleet[k];
    a.location = a.origin = k % n;
    a.takeoff_time = cfg.params.t_start;
    a.next_decision = cfg.params.t_start;
    a.battery = cfg.params.battery_max;
  }
  s.charger_free.resize(n);
  for (int i = 0; i < n; ++i)
    s.charger_free[i].assign(cfg.vertiports[i].is_vertistop ? 0 : cfg.vertiports[i].n_charging_stations,
                             cfg.params.t_start);
  s.corridor.assign(static_cast<std::size_t>(n) * n * 2, cfg.params.t_start);
  s.demand_left = s.draws->actual_demand;
  return s;
}

SimState init_episode(const ScenarioConfig& config) {
  return init_episode(std::make_shared<const ScenarioConfig>(config));
}

std::optional<Event> next_event(const SimState& state) {
  const double horizon = state.config->params.t_end;
  std::optional<Event> best;
  for (int k = 0; k < state.n_evtols(); ++k) {
    const AircraftState& a = state.fleet[k];
    if (a.failed || a.next_decision > horizon) continue;
    if (!best || a.next_decision < best->time) best = Event{a.next_decision, k};
  }
  return best;
}

bool is_feasible(const SimState& state, int evtol, int dest) {
  const ScenarioConfig& cfg = *state.config;
  const AircraftState& a = state.fleet.at(evtol);
  if (dest < 0 || dest >= cfg.n_vertiports()) return false;
  const int here = a.location;
  if (dest == here) return true;
  return state.route_open(here, dest) && a.battery > trip_energy(cfg, here, dest) &&
         state.occupancy(dest) < cfg.params.park_capacity;
}

std::vector<std::uint8_t> feasible_mask(const SimState& state, int evtol) {
  std::vector<std::uint8_t> mask(state.n_vertiports(), 0);
  for (int j = 0; j < state.n_vertiports(); ++j) mask[j] = is_feasible(state, evtol, j) ? 1 : 0;
  return mask;
}

std::vector<int> feasible_actions(const SimState& state, int evtol) {
  std::vector<int> out;
  for (int j = 0; j < state.n_vertiports(); ++j)
    if (is_feasible(state, evtol, j)) out.push_back(j);
  return out;
}

namespace {

double sample_delay(std::mt19937_64& rng, double mean, double std_dev, double cap) {
  std::normal_distribution<double> dist(mean, std_dev);
  for (int attempt = 0; attempt < 64; ++attempt) {
    const double d = dist(rng);
    if (d >= 0.0 && d <= cap) return d;
  }
  return std::clamp(mean, 0.0, cap);
}

void wait_and_charge(SimState& s, AircraftState& a, DecisionRecord& rec) {
  const Params& p = s.config->params;
  auto& stations = s.charger_free[a.location];
  if (!stations.empty() && a.battery < p.battery_max) {
    auto slot = std::min_element(stations.begin(), stations.end());
    if (*slot <= s.clock) {
      const double minutes = std::min(p.wait_time, (p.battery_max - a.battery) / p.charge_rate);
      a.battery = std::min(p.battery_max, a.battery + p.charge_rate * minutes);
      *slot = s.clock + minutes;
    }
  }
  a.next_decision = s.clock + p.wait_time;
  rec.kind = DecisionKind::Wait;
  ++s.idle_decisions;
}

}  // namespace

namespace {

DecisionRecord book_decision(SimState& s, int evtol, int dest) {
  const auto ev = next_event(s);
  if (!ev || ev->evtol != evtol)
    throw std::invalid_argument("apply_decision: eVTOL " + std::to_string(evtol) +
                                " is not the acting aircraft");
  s.clock = ev->time;
  if (!is_feasible(s, evtol, dest))
    throw std::invalid_argument("apply_decision: destination " + std::to_string(dest) +
                                " is infeasible for eVTOL " + std::to_string(evtol));

  const ScenarioConfig& cfg = *s.config;
  const Params& p = cfg.params;
  AircraftState& a = s.fleet[evtol];
  const int here = a.location;

  DecisionRecord rec;
  rec.event_time = s.clock;
  rec.evtol = evtol;
  rec.origin = here;
  rec.action = dest;
  rec.battery_before = a.battery;

  if (dest == here) {
    wait_and_charge(s, a, rec);
    rec.battery_after = a.battery;
    return rec;
  }

  ++s.flight_decisions;
  auto rng = make_rng(cfg.seed, Stream::Takeoff,
                      {static_cast<std::uint64_t>(evtol), static_cast<std::uint64_t>(a.legs)});
  ++a.legs;
  std::bernoulli_distribution fails(cfg.evtols[evtol].fail_prob);
  if (fails(rng)) {
    a.failed = true;
    a.origin = here;
    ++s.failures;
    rec.kind = DecisionKind::Failure;
    rec.battery_after = a.battery;
    return rec;
  }

  const double delay = sample_delay(rng, cfg.vertiports[here].expected_takeoff_delay,
                                    p.takeoff_delay_std, p.max_takeoff_delay);
  const std::size_t base = (static_cast<std::size_t>(here) * cfg.n_vertiports() + dest) * 2;
  const int lane = s.corridor[base + 1] < s.corridor[base] ? 1 : 0;
  const double takeoff = std::max(s.clock + delay, s.corridor[base + lane]);
  s.corridor[base + lane] = takeoff + p.corridor_separation;

  const double energy = trip_energy(cfg, here, dest);
  int& left = s.demand_left[s.draws->index(hour_index(cfg, takeoff), here, dest)];
  const int pax = std::min(p.seat_capacity, left);
  left -= pax;

  rec.kind = DecisionKind::Flight;
  rec.corridor = lane;
  rec.delay = delay;
  rec.takeoff = takeoff;
  rec.landing = takeoff + flight_time(cfg, here, dest);
  rec.passengers = pax;
  rec.fare = passenger_fare(cfg, here, dest, takeoff);
  rec.op_cost = operation_cost(cfg, here, dest);
  rec.energy = energy;
  rec.energy_cost = energy_cost(cfg, energy);

  s.revenue += rec.passengers * rec.fare;
  s.operating_cost += rec.passengers * rec.op_cost;
  s.energy_cost += rec.energy_cost;

  a.battery -= energy;
  a.origin = here;
  a.location = dest;
  a.takeoff_time = takeoff;
  a.next_decision = rec.landing;
  rec.battery_after = a.battery;
  return rec;
}

}  // namespace

DecisionRecord apply_decision(SimState& state, int evtol, int dest) {
  DecisionRecord rec = book_decision(state, evtol, dest);
  // Park the clock on the next pending event so feasibility queries made
  // between decisions see the instant the next decision happens at.
  if (const auto ev = next_event(state)) state.clock = std::max(state.clock, ev->time);
  return rec;
}

ProfitBreakdown profit(const EpisodeLog& log) {
  ProfitBreakdown out;
  for (const DecisionRecord& d : log.decisions) {
    if (d.kind != DecisionKind::Flight) continue;
    out.revenue += static_cast<Cents>(d.passengers) * d.fare;
    out.operating_cost += static_cast<Cents>(d.passengers) * d.op_cost;
    out.energy_cost += d.energy_cost;
  }
  return out;
}

double max_possible_profit(const ScenarioConfig& cfg) {
  double cents = 0.0;
  const int n = cfg.n_vertiports();
  for (int h = 0; h < cfg.n_hours(); ++h) {
    const double t = hour_start(cfg, h);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        cents += demand_forecast(cfg, i, j, t) * static_cast<double>(passenger_fare(cfg, i, j, t));
      }
  }
  return cents / 100.0;
}

double episode_reward(const EpisodeLog& log, const ScenarioConfig& cfg) {
  const double envelope = max_possible_profit(cfg);
  if (!(envelope > 0.0)) throw std::domain_error("episode_reward: zero maximum possible profit");
  return to_dollars(profit(log).net()) / envelope;
}

Episode::Episode(std::shared_ptr<const ScenarioConfig> config) : state_(init_episode(std::move(config))) {
  for (const AircraftState& a : state_.fleet) log_.initial_locations.push_back(a.location);
}

bool Episode::step(int dest) {
  const auto ev = next_event(state_);
  if (!ev) throw std::logic_error("Episode::step: episode is over");
  bool coerced = false;
  if (!is_feasible(state_, ev->evtol, dest)) {
    dest = state_.fleet[ev->evtol].location;
    coerced = true;
  }
  log_.decisions.push_back(apply_decision(state_, ev->evtol, dest));
  log_.idle_decisions = state_.idle_decisions;
  log_.flight_decisions = state_.flight_decisions;
  log_.totals = {state_.revenue, state_.operating_cost, state_.energy_cost};
  return coerced;
}

}  // namespace uam
