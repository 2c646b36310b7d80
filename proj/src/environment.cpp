#include "uam/environment.hpp"

#include <stdexcept>
#include <string>

#include "uam/scenario_io.hpp"

namespace uam {

Observation Environment::reset(std::shared_ptr<const ScenarioConfig> config) {
  episode_.emplace(std::move(config));
  return observe();
}

Observation Environment::reset(const std::filesystem::path& scenario, std::optional<std::uint64_t> seed) {
  auto cfg = std::make_shared<ScenarioConfig>(load_scenario(scenario));
  if (seed) cfg->seed = *seed;
  return reset(std::shared_ptr<const ScenarioConfig>(std::move(cfg)));
}

Observation Environment::observe() const {
  if (!episode_) throw std::logic_error("Environment: reset() has not been called");
  const auto ev = episode_->next();
  return uam::observe(episode_->state(), ev ? ev->evtol : -1);
}

std::vector<std::uint8_t> Environment::action_mask() const {
  if (!episode_) throw std::logic_error("Environment: reset() has not been called");
  const auto ev = episode_->next();
  if (!ev) return std::vector<std::uint8_t>(episode_->state().n_vertiports(), 0);
  return feasible_mask(episode_->state(), ev->evtol);
}

bool Environment::done() const { return !episode_ || episode_->done(); }

const EpisodeLog& Environment::log() const {
  if (!episode_) throw std::logic_error("Environment: reset() has not been called");
  return episode_->log();
}

int Environment::action_space_size() const {
  if (!episode_) throw std::logic_error("Environment: reset() has not been called");
  return episode_->state().n_vertiports();
}

StepResult Environment::step(int action) {
  if (!episode_ || episode_->done()) throw std::logic_error("Environment: no active episode");
  if (action < 0 || action >= action_space_size())
    throw std::out_of_range("Environment: action " + std::to_string(action) + " out of range");

  StepResult r;
  r.coerced = episode_->step(action);
  r.done = episode_->done();
  if (r.done) {
    r.reward = episode_reward(episode_->log(), episode_->config());
  } else {
    r.observation = observe();
  }
  r.action_mask = action_mask();
  return r;
}

}  // namespace uam
