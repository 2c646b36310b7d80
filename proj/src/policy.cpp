#include "uam/policy.hpp"

#include <chrono>

namespace uam {

EpisodeResult run_episode(std::shared_ptr<const ScenarioConfig> config, Policy& policy,
                          const DecisionObserver& observer) {
  using clock = std::chrono::steady_clock;
  Episode episode(std::move(config));
  policy.reset(episode.state());

  EpisodeResult result;
  clock::duration thinking{};
  while (const auto ev = episode.next()) {
    const auto t0 = clock::now();
    int action = policy.decide(episode.state(), *ev);
    thinking += clock::now() - t0;

    if (!is_feasible(episode.state(), ev->evtol, action)) {
      action = episode.state().fleet[ev->evtol].location;
      ++result.coerced_actions;
    }
    if (observer) observer(episode.state(), *ev, action);
    episode.step(action);
  }
  policy.finish(episode.state(), episode.log());
  result.log = episode.log();
  result.decision_seconds = std::chrono::duration<double>(thinking).count();
  return result;
}

}  // namespace uam
