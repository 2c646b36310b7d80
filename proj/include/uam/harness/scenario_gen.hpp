#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "uam/scenario.hpp"

namespace uam::harness {

/// Shape of a generated world. Geometry, demand and route statistics are
/// drawn once per master seed; individual scenarios differ in their seed and
/// per-aircraft failure probabilities.
struct ScenarioTemplate {
  int n_vertiports = 8;
  int n_vertistops = 2;
  int n_evtols = 40;
  int n_high_demand = 2;
  double demand_min = 2.0;  // passengers / hour, off-peak base
  double demand_max = 10.0;
  double closure_max = 0.05;
  double fail_max = 0.005;
  Params params;

  static ScenarioTemplate standard();  // 8 vertiports (2 vertistops), 40 aircraft
  static ScenarioTemplate toy();    // 4 vertiports (1 vertistop), 6 aircraft
  void validate() const;
};

enum class Split { Seen, Unseen };

Split split_from_string(const std::string& s);
const char* to_string(Split s);

/// Seeds of the two splits differ in their lowest bit, so they never overlap.
std::uint64_t scenario_seed(std::uint64_t master_seed, Split split, int index);

/// The shared world: everything except the per-scenario seed and fail_probs.
ScenarioConfig make_world(const ScenarioTemplate& tmpl, std::uint64_t master_seed);
ScenarioConfig make_scenario(const ScenarioConfig& world, std::uint64_t master_seed, Split split,
                             int index, double fail_max);

std::string scenario_filename(Split split, int index);

/// Writes n scenario files into out_dir and returns their paths.
std::vector<std::filesystem::path> gen_scenarios(int n, std::uint64_t master_seed,
                                                 const ScenarioTemplate& tmpl,
                                                 const std::filesystem::path& out_dir,
                                                 Split split = Split::Seen);

/// Scenario files (*.json) in a directory, sorted by name.
std::vector<std::filesystem::path> list_scenarios(const std::filesystem::path& dir);

}  // namespace uam::harness
