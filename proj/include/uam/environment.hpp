#pragma once

// Single-agent reset/step interface over the episode engine. One step is one
// decision for the aircraft that is ready next. Reward is zero until the
// episode ends, then the normalized episode profit.

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <vector>

#include "uam/observation.hpp"

namespace uam {

struct StepResult {
  std::optional<Observation> observation;  // empty once done
  double reward = 0.0;
  bool done = false;
  bool coerced = false;                      // requested action was infeasible
  std::vector<std::uint8_t> action_mask;     // for the next acting aircraft
};

class Environment {
 public:
  Observation reset(std::shared_ptr<const ScenarioConfig> config);
  /// Loads a scenario file; `seed` replaces the file's seed when given.
  Observation reset(const std::filesystem::path& scenario, std::optional<std::uint64_t> seed = {});

  /// Throws std::out_of_range for actions outside [0, N) and std::logic_error
  /// when called without an active episode.
  StepResult step(int action);

  Observation observe() const;
  std::vector<std::uint8_t> action_mask() const;
  bool done() const;
  const EpisodeLog& log() const;
  int action_space_size() const;

 private:
  std::optional<Episode> episode_;
};

}  // namespace uam
