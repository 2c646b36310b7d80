#pragma once

// Elitist genetic scheduler. A chromosome assigns destinations to the next
// `batch_size` ready-for-takeoff events in the order they occur during a
// rollout from the batch-start state. The episode is scheduled by solving a
// batch, committing its decisions, and solving again from the new state.

#include <deque>
#include <memory>
#include <random>
#include <span>
#include <vector>

#include "uam/policy.hpp"

namespace uam {

struct GAParams {
  int population = 100;
  int max_iterations = 100;
  double mutation_prob = 0.1;
  double elite_ratio = 0.01;
  double crossover_prob = 0.5;
  int batch_size = 60;
  int threads = 1;  // fitness evaluation workers

  /// max(1, ceil(elite_ratio * population)).
  int elite_count() const;
  void validate() const;
};

/// Destination vertiport index (0-based) per upcoming event.
using Chromosome = std::vector<int>;

/// Incremental net profit (cents) of rolling `chrom` out from `state`.
/// Infeasible genes are replaced by waiting; genes past the episode end are
/// ignored. `state` is not modified.
Cents evaluate_chromosome(const Chromosome& chrom, const SimState& state);

/// Elites copied unchanged, then binary-tournament parents, single-point
/// crossover and per-gene uniform mutation until the population is full.
std::vector<Chromosome> evolve_generation(const std::vector<Chromosome>& population,
                                          std::span<const Cents> fitness, const GAParams& params,
                                          int n_vertiports, std::mt19937_64& rng);

struct BatchSolution {
  Chromosome best;
  Cents fitness = 0;
  /// Best fitness of generation 0..max_iterations.
  std::vector<Cents> best_per_generation;
};

BatchSolution solve_batch(const SimState& state, const GAParams& params, std::mt19937_64& rng);

/// Plans a batch whenever its queue runs dry and hands out the planned genes.
class GaPolicy final : public Policy {
 public:
  struct BatchTrace {
    Cents start_profit = 0;
    Cents fitness = 0;
    std::vector<Cents> best_per_generation;
  };

  explicit GaPolicy(GAParams params) : params_(params) { params_.validate(); }

  std::string name() const override { return "ga"; }
  void reset(const SimState& initial) override;
  int decide(const SimState& state, const Event& event) override;

  const std::vector<BatchTrace>& batches() const { return batches_; }

 private:
  GAParams params_;
  std::deque<int> planned_;
  std::vector<BatchTrace> batches_;
};

/// Receding-horizon episode: solve, commit, repeat until no events remain.
/// The GA stream for batch b is derived from (scenario seed, b).
EpisodeResult receding_horizon_schedule(std::shared_ptr<const ScenarioConfig> config,
                                        const GAParams& params,
                                        std::vector<GaPolicy::BatchTrace>* trace = nullptr);

}  // namespace uam
