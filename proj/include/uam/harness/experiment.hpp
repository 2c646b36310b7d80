#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uam/ga.hpp"
#include "uam/harness/stats.hpp"

namespace uam::harness {

struct RunRecord {
  std::string scenario_id;
  std::string policy;
  double profit = 0.0;  // dollars, exact to the cent
  double reward = 0.0;
  int idle_decisions = 0;
  int flight_decisions = 0;
  double wall_seconds = 0.0;  // decision computation only
  std::size_t violations = 0;
  std::string error;          // non-empty when the episode could not run
};

struct ExperimentResult {
  std::vector<RunRecord> records;  // ordered by scenario id
  std::map<std::string, Summary> aggregates;  // profit, reward, idle, flights, wall_seconds

  std::size_t total_violations() const;
  std::size_t failed_runs() const;
};

struct ExperimentOptions {
  std::string policy = "greedy";  // ga | greedy | random | replay | external
  GAParams ga;
  int threads = 1;
  std::optional<std::filesystem::path> episodes_dir;  // write one episode file per scenario
  std::optional<std::filesystem::path> replay_dir;    // source episodes for policy=replay
  std::string external_command;                       // for policy=external
  bool embed_observations = false;                    // demo format
};

std::string scenario_id(const std::filesystem::path& scenario);

/// One episode per scenario; failures are recorded on the record and the run
/// continues. Every finished episode is audited against the constraints.
ExperimentResult run_experiment(const std::vector<std::filesystem::path>& scenarios,
                                const ExperimentOptions& options);

/// Recomputes aggregates from records (errored records excluded).
std::map<std::string, Summary> aggregate(const std::vector<RunRecord>& records);

void write_results_csv(const std::filesystem::path& path, const std::vector<RunRecord>& records);
std::vector<RunRecord> read_results_csv(const std::filesystem::path& path);
void write_summary_json(const std::filesystem::path& path, const ExperimentResult& result);

/// Runs `policy` over the scenarios and writes one demonstration file each.
ExperimentResult export_demonstrations(const std::vector<std::filesystem::path>& scenarios,
                                       const std::filesystem::path& out_dir, ExperimentOptions options);

struct ComparisonRow {
  std::string scenario_id;
  double a = 0.0;
  double b = 0.0;
  double delta = 0.0;  // a - b
};

struct Comparison {
  std::vector<ComparisonRow> rows;  // scenarios present in both, by id
  int a_wins = 0;
  int b_wins = 0;
  int ties = 0;
  std::optional<TTestResult> t_test;  // absent with fewer than two rows
};

Comparison compare_results(const std::vector<RunRecord>& a, const std::vector<RunRecord>& b);

}  // namespace uam::harness
