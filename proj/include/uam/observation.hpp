#pragma once

// Flat numeric encoding of the scheduling state handed to learning code and
// embedded in demonstration files. All arrays are row-major float64; clock
// values are minutes after t_start.
//
//   vertiport_features  N   x 6  [x, y, parked, charger_free_at, expected_delay, is_vertistop]
//   evtol_features      N_K x 6  [dest_x, dest_y, battery, next_flight, next_decision, fail_prob]
//   vertiport_adjacency N   x N  (1 - closure_prob) * A
//   evtol_adjacency     N_K x N_K  all ones, zero diagonal
//   demand, fare, cost  N   x N  forecast passengers/h, ticket dollars, R dollars
//   corridor            N * N * 2  safe-launch time per directed corridor [i][j][c]
//
// Failed aircraft report next_decision = t_end - t_start.

#include <vector>

#include <json.hpp>

#include "uam/simulator.hpp"

namespace uam {

inline constexpr const char* kObservationSchema = "uam-obs/1";
inline constexpr int kVertiportFeatures = 6;
inline constexpr int kEvtolFeatures = 6;

struct Observation {
  int n_vertiports = 0;
  int n_evtols = 0;
  int acting_evtol = -1;
  std::vector<double> vertiport_features;
  std::vector<double> evtol_features;
  std::vector<double> vertiport_adjacency;
  std::vector<double> evtol_adjacency;
  std::vector<double> demand;
  std::vector<double> fare;
  std::vector<double> cost;
  std::vector<double> corridor;

  friend bool operator==(const Observation&, const Observation&) = default;
};

Observation observe(const SimState& state, int acting_evtol);

nlohmann::json observation_to_json(const Observation& obs);
/// Throws std::invalid_argument on schema or shape mismatch.
Observation observation_from_json(const nlohmann::json& j);

}  // namespace uam
