#pragma once

#include <random>

#include "uam/policy.hpp"

namespace uam {

/// Uniform draw over the feasible destinations (waiting included).
int random_policy(const SimState& state, int evtol, std::mt19937_64& rng);

/// Expected one-leg margin in cents of flying `evtol` to `dest` now, using
/// forecast demand: min(C, Q) * (fare - R) - electricity.
double flight_margin(const SimState& state, int evtol, int dest);

/// Most profitable feasible flight by flight_margin; waits when no margin is
/// positive. Ties go to the lowest vertiport index.
int greedy_policy(const SimState& state, int evtol);

class RandomPolicy final : public Policy {
 public:
  std::string name() const override { return "random"; }
  void reset(const SimState& initial) override;
  int decide(const SimState& state, const Event& event) override;

 private:
  std::mt19937_64 rng_;
};

class GreedyPolicy final : public Policy {
 public:
  std::string name() const override { return "greedy"; }
  int decide(const SimState& state, const Event& event) override {
    return greedy_policy(state, event.evtol);
  }
};

}  // namespace uam
