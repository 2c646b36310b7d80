#pragma once

#include <functional>
#include <memory>
#include <string>

#include "uam/simulator.hpp"

namespace uam {

/// Chooses a destination for the aircraft that is ready for takeoff.
class Policy {
 public:
  virtual ~Policy() = default;
  virtual std::string name() const = 0;
  /// Called once with the initial state of every episode.
  virtual void reset(const SimState& /*initial*/) {}
  virtual int decide(const SimState& state, const Event& event) = 0;
  /// Called once the episode has no events left.
  virtual void finish(const SimState& /*final_state*/, const EpisodeLog& /*log*/) {}
};

/// Sees the state before each decision is applied, with the effective action.
using DecisionObserver = std::function<void(const SimState&, const Event&, int action)>;

struct EpisodeResult {
  EpisodeLog log;
  double decision_seconds = 0.0;  // time spent inside Policy::decide
  int coerced_actions = 0;        // infeasible choices turned into waits
};

/// Drives one episode to completion. Infeasible choices are coerced to
/// waiting, the same repair the genetic scheduler applies during rollouts.
EpisodeResult run_episode(std::shared_ptr<const ScenarioConfig> config, Policy& policy,
                          const DecisionObserver& observer = {});

}  // namespace uam
