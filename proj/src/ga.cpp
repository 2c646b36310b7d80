#include "uam/ga.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "uam/parallel.hpp"
#include "uam/rng.hpp"

namespace uam {

int GAParams::elite_count() const {
  return std::max(1, static_cast<int>(std::ceil(elite_ratio * population)));
}

void GAParams::validate() const {
  auto prob = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (population < 2) throw std::invalid_argument("GA population must be >= 2");
  if (max_iterations < 0) throw std::invalid_argument("GA max_iterations must be >= 0");
  if (batch_size < 1) throw std::invalid_argument("GA batch_size must be >= 1");
  if (!prob(mutation_prob) || !prob(crossover_prob) || !prob(elite_ratio))
    throw std::invalid_argument("GA probabilities must lie in [0, 1]");
  if (elite_count() > population) throw std::invalid_argument("GA elite count exceeds population");
}

Cents evaluate_chromosome(const Chromosome& chrom, const SimState& state) {
  SimState rollout = state;
  for (int gene : chrom) {
    const auto ev = next_event(rollout);
    if (!ev) break;
    const int dest = is_feasible(rollout, ev->evtol, gene) ? gene : rollout.fleet[ev->evtol].location;
    apply_decision(rollout, ev->evtol, dest);
  }
  return rollout.profit() - state.profit();
}

std::vector<Chromosome> evolve_generation(const std::vector<Chromosome>& population,
                                          std::span<const Cents> fitness, const GAParams& params,
                                          int n_vertiports, std::mt19937_64& rng) {
  const int size = static_cast<int>(population.size());
  if (size != params.population || fitness.size() != population.size())
    throw std::invalid_argument("evolve_generation: population size mismatch");

  std::vector<int> order(size);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return fitness[a] > fitness[b]; });

  std::vector<Chromosome> next;
  next.reserve(size);
  for (int e = 0; e < params.elite_count(); ++e) next.push_back(population[order[e]]);

  std::uniform_int_distribution<int> member(0, size - 1);
  std::uniform_int_distribution<int> gene_value(0, n_vertiports - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto tournament = [&] {
    const int a = member(rng);
    const int b = member(rng);
    if (fitness[a] != fitness[b]) return fitness[a] > fitness[b] ? a : b;
    return std::min(a, b);
  };
  auto mutate = [&](Chromosome& c) {
    for (int& g : c)
      if (unit(rng) < params.mutation_prob) g = gene_value(rng);
  };

  while (static_cast<int>(next.size()) < size) {
    Chromosome first = population[tournament()];
    Chromosome second = population[tournament()];
    const std::size_t len = first.size();
    if (unit(rng) < params.crossover_prob && len > 1) {
      std::uniform_int_distribution<std::size_t> cut_at(1, len - 1);
      const std::size_t cut = cut_at(rng);
      std::swap_ranges(first.begin() + cut, first.end(), second.begin() + cut);
    }
    mutate(first);
    mutate(second);
    next.push_back(std::move(first));
    if (static_cast<int>(next.size()) < size) next.push_back(std::move(second));
  }
  return next;
}

namespace {

std::vector<Cents> evaluate_all(const std::vector<Chromosome>& population, const SimState& state,
                                int threads) {
  std::vector<Cents> fitness(population.size());
  parallel_for(population.size(), threads,
               [&](std::size_t i) { fitness[i] = evaluate_chromosome(population[i], state); });
  return fitness;
}

}  // namespace

BatchSolution solve_batch(const SimState& state, const GAParams& params, std::mt19937_64& rng) {
  params.validate();
  const int n = state.n_vertiports();
  std::uniform_int_distribution<int> gene_value(0, n - 1);

  std::vector<Chromosome> population(params.population, Chromosome(params.batch_size));
  for (Chromosome& c : population)
    for (int& g : c) g = gene_value(rng);

  BatchSolution best;
  auto track = [&](const std::vector<Chromosome>& pop, const std::vector<Cents>& fit) {
    const auto top = std::max_element(fit.begin(), fit.end()) - fit.begin();
    if (best.best.empty() || fit[top] > best.fitness) {
      best.best = pop[top];
      best.fitness = fit[top];
    }
    best.best_per_generation.push_back(fit[top]);
  };

  std::vector<Cents> fitness = evaluate_all(population, state, params.threads);
  track(population, fitness);
  for (int it = 0; it < params.max_iterations; ++it) {
    population = evolve_generation(population, fitness, params, n, rng);
    fitness = evaluate_all(population, state, params.threads);
    track(population, fitness);
  }
  return best;
}

void GaPolicy::reset(const SimState& /*initial*/) {
  planned_.clear();
  batches_.clear();
}

int GaPolicy::decide(const SimState& state, const Event& /*event*/) {
  if (planned_.empty()) {
    auto rng = make_rng(state.config->seed, Stream::Genetic, {batches_.size()});
    BatchSolution sol = solve_batch(state, params_, rng);
    planned_.assign(sol.best.begin(), sol.best.end());
    batches_.push_back({state.profit(), sol.fitness, std::move(sol.best_per_generation)});
  }
  const int gene = planned_.front();
  planned_.pop_front();
  return gene;
}

EpisodeResult receding_horizon_schedule(std::shared_ptr<const ScenarioConfig> config,
                                        const GAParams& params,
                                        std::vector<GaPolicy::BatchTrace>* trace) {
  GaPolicy policy(params);
  EpisodeResult result = run_episode(std::move(config), policy);
  if (trace) *trace = policy.batches();
  return result;
}

}  // namespace uam
