#pragma once

// JSONL episode records. Line 1 is a header; every further line is one
// decision. Demonstration files use the same layout with the pre-decision
// observation embedded in each line.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "uam/observation.hpp"
#include "uam/scenario.hpp"
#include "uam/simulator.hpp"

namespace uam::harness {

inline constexpr const char* kEpisodeFormat = "uam-episode/1";
inline constexpr const char* kDemoFormat = "uam-demo/1";

class ReplayError : public std::runtime_error {
 public:
  ReplayError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct EpisodeHeader {
  std::string format = kEpisodeFormat;
  std::string scenario;  // path of the scenario file, as given when written
  std::string scenario_hash;
  std::uint64_t seed = 0;
  std::string policy;
};

struct EpisodeFile {
  EpisodeHeader header;
  std::vector<DecisionRecord> decisions;
  std::vector<std::optional<Observation>> observations;  // parallel to decisions
};

nlohmann::json decision_to_json(const DecisionRecord& d);
DecisionRecord decision_from_json(const nlohmann::json& j);

/// Writes a header line and one line per decision. When `observations` is
/// non-empty it must be parallel to the decisions and the demo format is used.
void write_episode(const std::filesystem::path& path, const EpisodeHeader& header,
                   const EpisodeLog& log, const std::vector<Observation>& observations = {});
std::string episode_to_string(const EpisodeHeader& header, const EpisodeLog& log,
                              const std::vector<Observation>& observations = {});

EpisodeFile read_episode(const std::filesystem::path& path);
EpisodeFile parse_episode(const std::string& text);

/// Re-executes the recorded actions and checks every recorded field (and
/// embedded observation) against the simulation. Throws ReplayError with the
/// offending line number on any mismatch or hash disagreement.
EpisodeLog replay(const EpisodeFile& file, const ScenarioConfig& cfg);

/// Loads the scenario named in the header unless `scenario` is given.
/// Relative header paths are resolved against the episode file's directory
/// first, then the working directory.
EpisodeLog replay_file(const std::filesystem::path& path,
                       const std::optional<std::filesystem::path>& scenario = {});

}  // namespace uam::harness
