#include "uam/constraints.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <sstream>
#include <tuple>

namespace uam {

std::size_t AuditReport::count(const std::string& rule) const {
  return static_cast<std::size_t>(std::count_if(violations.begin(), violations.end(),
                                                [&](const Violation& v) { return v.rule == rule; }));
}

namespace {

constexpr std::size_t kWholeLog = std::numeric_limits<std::size_t>::max();

struct Hold {
  int vertiport;
  double from;
  double until;  // exclusive
};

}  // namespace

AuditReport audit_episode(const ScenarioConfig& cfg, const EpisodeLog& log) {
  AuditReport report;
  auto flag = [&](const char* rule, std::size_t idx, const std::string& detail) {
    report.violations.push_back({rule, idx, detail});
  };
  const Params& p = cfg.params;
  const int n_k = cfg.n_evtols();
  const Realization draws = sample_realization(cfg);
  constexpr double kForever = std::numeric_limits<double>::infinity();

  if (static_cast<int>(log.initial_locations.size()) != n_k) {
    flag("continuity", kWholeLog, "initial placement missing");
    return report;
  }

  std::vector<int> location = log.initial_locations;
  std::vector<bool> failed(n_k, false);
  std::vector<Hold> holds;
  std::vector<std::size_t> open_hold(n_k);
  for (int k = 0; k < n_k; ++k) {
    open_hold[k] = holds.size();
    holds.push_back({location[k], p.t_start, kForever});
  }
  std::map<std::tuple<int, int, int>, double> last_lane_takeoff;
  std::vector<std::pair<std::size_t, int>> reservations;  // (decision, destination)
  double last_time = p.t_start;
  int idle = 0, flights = 0;

  for (std::size_t idx = 0; idx < log.decisions.size(); ++idx) {
    const DecisionRecord& d = log.decisions[idx];
    std::ostringstream why;
    if (d.evtol < 0 || d.evtol >= n_k) {
      flag("continuity", idx, "unknown eVTOL");
      continue;
    }
    if (d.event_time < last_time) flag("timing", idx, "decision clock went backwards");
    if (d.event_time > p.t_end) flag("timing", idx, "decision after end of horizon");
    last_time = std::max(last_time, d.event_time);
    if (failed[d.evtol]) flag("continuity", idx, "failed aircraft decided again");
    if (d.origin != location[d.evtol]) flag("continuity", idx, "origin differs from aircraft location");
    if (d.battery_before < 0 || d.battery_before > p.battery_max || d.battery_after < 0 ||
        d.battery_after > p.battery_max)
      flag("battery", idx, "battery outside [0, B_max]");

    if (d.kind == DecisionKind::Wait) {
      ++idle;
      if (d.action != d.origin) flag("continuity", idx, "wait with a different destination");
      if (d.battery_after < d.battery_before) flag("battery", idx, "battery dropped while waiting");
      continue;
    }
    ++flights;
    if (d.action == d.origin || d.action < 0 || d.action >= cfg.n_vertiports()) {
      flag("continuity", idx, "flight to invalid destination");
      continue;
    }
    const int i = d.origin, j = d.action;
    if (cfg.routes.adjacency[i][j] != 1 || draws.is_closed(hour_index(cfg, d.event_time), i, j))
      flag("route", idx, "flight over a closed route");
    const double need = trip_energy(cfg, i, j);
    if (!(d.battery_before > need)) {
      why << "battery " << d.battery_before << " not above trip energy " << need;
      flag("battery", idx, why.str());
    }
    if (d.kind == DecisionKind::Failure) {
      failed[d.evtol] = true;
      continue;
    }

    if (d.passengers < 0 || d.passengers > p.seat_capacity) flag("seats", idx, "passengers above seat capacity");
    if (d.energy != need) flag("battery", idx, "energy differs from trip energy");
    if (d.battery_after != d.battery_before - need) flag("battery", idx, "battery not reduced by trip energy");
    if (d.delay < 0 || d.delay > p.max_takeoff_delay) flag("timing", idx, "takeoff delay out of bounds");
    if (d.takeoff < d.event_time + d.delay) flag("timing", idx, "takeoff before delay elapsed");
    if (d.landing != d.takeoff + flight_time(cfg, i, j)) flag("timing", idx, "landing time mismatch");
    if (d.corridor != 0 && d.corridor != 1) {
      flag("corridor", idx, "invalid corridor");
    } else {
      const auto lane = std::make_tuple(i, j, d.corridor);
      if (auto it = last_lane_takeoff.find(lane); it != last_lane_takeoff.end() &&
                                                  d.takeoff < it->second + p.corridor_separation)
        flag("corridor", idx, "launch separation violated");
      last_lane_takeoff[lane] = d.takeoff;
    }

    holds[open_hold[d.evtol]].until = d.takeoff;
    open_hold[d.evtol] = holds.size();
    holds.push_back({j, d.event_time, kForever});
    reservations.emplace_back(idx, j);
    location[d.evtol] = j;
  }

  for (const auto& [idx, j] : reservations) {
    const double t = log.decisions[idx].event_time;
    int occupied = 0;
    for (const Hold& h : holds)
      if (h.vertiport == j && h.from <= t && t < h.until) ++occupied;
    if (occupied > p.park_capacity) {
      std::ostringstream why;
      why << "vertiport " << j << " holds " << occupied << " aircraft";
      flag("parking", idx, why.str());
    }
  }

  if (idle != log.idle_decisions || flights != log.flight_decisions)
    flag("accounting", kWholeLog, "decision counts disagree with records");
  if (profit(log) != log.totals) flag("accounting", kWholeLog, "running totals disagree with records");
  return report;
}

}  // namespace uam
