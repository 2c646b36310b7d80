// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <unistd.h>
#include <vector>

#include "student_t_oracle.hpp"
#include "support.hpp"
#include "uam/baselines.hpp"
#include "uam/constraints.hpp"
#include "uam/ga.hpp"
#include "uam/harness/episode_file.hpp"
#include "uam/harness/experiment.hpp"
#include "uam/harness/scenario_gen.hpp"
#include "uam/harness/stats.hpp"
#include "uam/rng.hpp"
#include "uam/scenario_io.hpp"

using namespace uam;
using namespace uam::harness;
using Clock = std::chrono::steady_clock;
namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kMaster = 2024;

int failures = 0;

void report(bool ok, const std::string& name, const std::string& detail) {
  std::printf("%s %-26s %s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::shared_ptr<const ScenarioConfig> toy(int index) {
  return uam::testing::shared(uam::testing::toy_scenario(index, kMaster));
}

EpisodeLog random_episode(std::shared_ptr<const ScenarioConfig> cfg, std::uint64_t policy_seed) {
  Episode ep(std::move(cfg));
  std::mt19937_64 rng(policy_seed);
  while (const auto ev = ep.next()) ep.step(random_policy(ep.state(), ev->evtol, rng));
  return ep.log();
}

GAParams toy_ga() {
  GAParams p;
  p.population = 30;
  p.max_iterations = 30;
  return p;
}

std::size_t accounting_checked = 0, accounting_mismatches = 0;

void check_accounting(const EpisodeLog& log) {
  ++accounting_checked;
  if (!(profit(log) == log.totals)) ++accounting_mismatches;
}

void constraint_suite() {
  const auto t0 = Clock::now();
  std::size_t violations = 0, decisions = 0, flights = 0;
  for (int e = 0; e < 1000; ++e) {
    const auto cfg = toy(e);
    const EpisodeLog log = random_episode(cfg, 7000 + e);
    const AuditReport audit = audit_episode(*cfg, log);
    violations += audit.violations.size();
    if (!audit.ok() && violations == audit.violations.size())
      std::printf("  first violation: episode %d [%s] %s\n", e, audit.violations[0].rule.c_str(),
                  audit.violations[0].detail.c_str());
    decisions += log.decisions.size();
    flights += log.journeys().size();
    check_accounting(log);
  }
  const double secs = seconds_since(t0);
  report(violations == 0 && secs < 120.0, "constraint-suite",
         fmt("1000 random episodes, %zu decisions, %zu flights, %zu violations, %.1f s (limit 120 s)",
             decisions, flights, violations, secs));
}

void determinism() {
  int identical = 0;
  const char* policies[] = {"random", "greedy", "ga"};
  for (int i = 0; i < 20; ++i) {
    auto cfg = uam::testing::toy_scenario(i, kMaster);
    cfg.seed = derive_seed(99, Stream::Scenario, {static_cast<std::uint64_t>(i)}) >> 12;
    const auto shared = uam::testing::shared(cfg);
    const std::string policy = policies[i % 3];
    auto once = [&] {
      std::unique_ptr<Policy> p;
      GAParams ga;
      ga.population = 12;
      ga.max_iterations = 5;
      if (policy == "random") p = std::make_unique<RandomPolicy>();
      else if (policy == "greedy") p = std::make_unique<GreedyPolicy>();
      else p = std::make_unique<GaPolicy>(ga);
      EpisodeHeader h;
      h.scenario = "toy_" + std::to_string(i);
      h.scenario_hash = scenario_hash(cfg);
      h.seed = cfg.seed;
      h.policy = policy;
      const EpisodeResult r = run_episode(shared, *p);
      check_accounting(r.log);
      return episode_to_string(h, r.log);
    };
    if (once() == once()) ++identical;
  }
  report(identical == 20, "determinism", fmt("%d/20 (scenario, seed, policy) triples byte-identical", identical));
}

void ga_micro() {
  const auto t0 = Clock::now();
  int optimal = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto cfg = uam::testing::small_scenario({{0, 0}, {10, 0}}, 1, 50.0);
    cfg.seed = seed;
    const SimState s = init_episode(cfg);
    Cents oracle = std::numeric_limits<Cents>::min();
    Chromosome arg;
    for (int mask = 0; mask < 16; ++mask) {
      const Chromosome c{mask & 1, (mask >> 1) & 1, (mask >> 2) & 1, (mask >> 3) & 1};
      const Cents f = evaluate_chromosome(c, s);
      if (f > oracle) oracle = f, arg = c;
    }
    GAParams p;
    p.population = 16;
    p.max_iterations = 50;
    p.batch_size = 4;
    auto rng = make_rng(seed, Stream::Genetic, {0});
    const BatchSolution sol = solve_batch(s, p, rng);
    if (sol.fitness == oracle && evaluate_chromosome(sol.best, s) == oracle) ++optimal;
  }
  const double secs = seconds_since(t0);
  report(optimal == 10 && secs < 60.0, "ga-micro-optimality",
         fmt("%d/10 seeds reach the exhaustive optimum, %.2f s (limit 60 s)", optimal, secs));
}

struct DominanceRuns {
  ExperimentResult ga, greedy, random;
};

DominanceRuns ga_dominance(const fs::path& work) {
  const auto t0 = Clock::now();
  const auto paths = gen_scenarios(20, kMaster, ScenarioTemplate::toy(), work / "toy");
  DominanceRuns runs;
  ExperimentOptions opt;
  opt.ga = toy_ga();
  opt.policy = "ga";
  runs.ga = run_experiment(paths, opt);
  opt.policy = "greedy";
  runs.greedy = run_experiment(paths, opt);
  opt.policy = "random";
  runs.random = run_experiment(paths, opt);
  const double secs = seconds_since(t0);

  const Comparison vs_random = compare_results(runs.ga.records, runs.random.records);
  const double ga_mean = runs.ga.aggregates.at("profit").mean;
  const double greedy_mean = runs.greedy.aggregates.at("profit").mean;
  const double random_mean = runs.random.aggregates.at("profit").mean;
  const bool clean = runs.ga.failed_runs() + runs.greedy.failed_runs() + runs.random.failed_runs() == 0 &&
                     runs.ga.total_violations() + runs.greedy.total_violations() +
                             runs.random.total_violations() == 0;
  report(clean && ga_mean >= greedy_mean && vs_random.a_wins >= 19 && secs < 900.0, "ga-dominance",
         fmt("mean profit GA $%.2f, greedy $%.2f, random $%.2f; GA beats random on %d/20; %.1f s", ga_mean,
             greedy_mean, random_mean, vs_random.a_wins, secs));
  if (vs_random.t_test)
    std::printf("  paired t-test GA vs random: t=%.4f p=%.3g\n", vs_random.t_test->t, vs_random.t_test->p);
  return runs;
}

void ga_monotonicity() {
  int solves = 0, monotone = 0;
  for (int i = 0; i < 100; ++i) {
    const auto cfg = toy(i);
    Episode ep(cfg);
    std::mt19937_64 rng(500 + i);
    const int warmup = std::uniform_int_distribution<int>(0, 150)(rng);
    for (int k = 0; k < warmup && !ep.done(); ++k) ep.step(random_policy(ep.state(), ep.next()->evtol, rng));
    if (ep.done()) continue;
    auto ga_rng = make_rng(cfg->seed, Stream::Genetic, {static_cast<std::uint64_t>(i)});
    const BatchSolution sol = solve_batch(ep.state(), toy_ga(), ga_rng);
    ++solves;
    bool ok = sol.best_per_generation.size() == 31;
    for (std::size_t g = 1; g < sol.best_per_generation.size(); ++g)
      ok = ok && sol.best_per_generation[g] >= sol.best_per_generation[g - 1];
    monotone += ok;
  }
  report(solves == 100 && monotone == 100, "ga-monotonicity",
         fmt("%d/%d batch solves with nondecreasing best fitness over 31 generations", monotone, solves));
}

void statistics_oracle() {
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<int> size(2, 80);
  std::normal_distribution<double> noise(0.0, 1.0);
  std::uniform_real_distribution<double> shift(-2.0, 2.0), scale(0.1, 500.0);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = size(rng);
    const double mu = shift(rng), sd = scale(rng);
    std::vector<double> d(n);
    for (double& x : d) x = sd * (mu + noise(rng));
    const TTestResult r = paired_t_test(d);
    worst = std::max(worst, std::abs(r.p - uam::testing::student_two_sided(r.t, n - 1)));
  }
  const TTestResult ex = paired_t_test(std::vector<double>{1, 2, 3, 4, 5});
  const bool example = std::abs(ex.t - 4.2426) < 5e-5 && std::abs(ex.p - 0.0132) < 5e-5;
  report(worst < 1e-9 && example, "statistics-oracle",
         fmt("max |p - oracle| = %.2e over 100 inputs; [1..5] gives t=%.4f p=%.4f", worst, ex.t, ex.p));
}

void reward_normalization(const DominanceRuns& runs) {
  int episodes = 0, above_one = 0, negative_planned = 0;
  double lo = 1e9, hi = -1e9;
  auto count = [&](double r, bool planned) {
    ++episodes;
    lo = std::min(lo, r);
    hi = std::max(hi, r);
    if (r > 1.0) ++above_one;
    if (planned && r < 0.0) ++negative_planned;
  };
  for (const auto& r : runs.ga.records) count(r.reward, true);
  for (const auto& r : runs.greedy.records) count(r.reward, true);
  for (const auto& r : runs.random.records) count(r.reward, false);
  for (int i = 20; i < 40; ++i) {
    const auto cfg = toy(i);
    const EpisodeResult ga = receding_horizon_schedule(cfg, toy_ga());
    check_accounting(ga.log);
    count(episode_reward(ga.log, *cfg), true);
  }
  for (int i = 20; i < 80; ++i) {
    const auto cfg = toy(i);
    GreedyPolicy greedy;
    const EpisodeResult g = run_episode(cfg, greedy);
    check_accounting(g.log);
    count(episode_reward(g.log, *cfg), true);
    const EpisodeLog r = random_episode(cfg, i);
    count(episode_reward(r, *cfg), false);
  }
  report(episodes == 200 && above_one == 0 && negative_planned == 0, "reward-normalization",
         fmt("%d episodes, reward range [%.4f, %.4f], %d above 1, %d negative GA/greedy", episodes, lo, hi,
             above_one, negative_planned));
}

void failure_delay_statistics() {
  const double p_fail = 0.005;
  long attempts = 0, failed = 0, out_of_range = 0;
  double delay_sum = 0.0, delay_max = 0.0;
  for (int i = 0; attempts < 10000; ++i) {
    auto cfg = uam::testing::toy_scenario(i, kMaster);
    for (auto& e : cfg.evtols) e.fail_prob = p_fail;
    const EpisodeLog log = random_episode(uam::testing::shared(cfg), 900 + i);
    for (const auto& d : log.decisions) {
      if (d.kind == DecisionKind::Wait) continue;
      ++attempts;
      if (d.kind == DecisionKind::Failure) {
        ++failed;
        continue;
      }
      if (d.delay < 0.0 || d.delay > 30.0) ++out_of_range;
      delay_sum += d.delay;
      delay_max = std::max(delay_max, d.delay);
    }
  }
  const double expected = attempts * p_fail;
  const double sigma = std::sqrt(attempts * p_fail * (1.0 - p_fail));
  const bool in_band = std::abs(failed - expected) <= 3.0 * sigma;
  report(in_band && out_of_range == 0, "failure-delay-statistics",
         fmt("%ld takeoffs, %ld failures (expected %.1f +- %.1f at 3 sigma), delays mean %.2f max %.2f min, "
             "%ld outside [0, 30]",
             attempts, failed, expected, 3.0 * sigma, delay_sum / (attempts - failed), delay_max, out_of_range));
}

void full_scale_smoke() {
  const auto cfg = uam::testing::shared(uam::testing::standard_scenario(0, kMaster));
  GAParams p;
  p.population = 100;
  p.max_iterations = 10;
  const auto t0 = Clock::now();
  std::vector<GaPolicy::BatchTrace> trace;
  const EpisodeResult r = receding_horizon_schedule(cfg, p, &trace);
  const double secs = seconds_since(t0);
  check_accounting(r.log);
  const AuditReport audit = audit_episode(*cfg, r.log);
  report(audit.ok() && profit(r.log) == r.log.totals, "full-scale-smoke",
         fmt("8 vertiports, 40 aircraft, pop 100, 10 iters: %zu decisions (%d idle, %d flight) in %zu batches, "
             "profit $%.2f, reward %.4f, %zu violations, wall-clock %.1f s",
             r.log.decisions.size(), r.log.idle_decisions, r.log.flight_decisions, trace.size(),
             to_dollars(r.log.totals.net()), episode_reward(r.log, *cfg), audit.violations.size(), secs));
}

void decision_counts(const DominanceRuns& runs) {
  auto idle_fraction = [](const ExperimentResult& res) {
    double idle = 0, total = 0;
    for (const auto& r : res.records) {
      idle += r.idle_decisions;
      total += r.idle_decisions + r.flight_decisions;
    }
    return total > 0 ? idle / total : 1.0;
  };
  std::printf("  %-12s %-8s %6s %8s\n", "scenario", "policy", "idle", "flights");
  for (const ExperimentResult* res : {&runs.ga, &runs.greedy, &runs.random})
    for (const auto& r : res->records)
      std::printf("  %-12s %-8s %6d %8d\n", r.scenario_id.c_str(), r.policy.c_str(), r.idle_decisions,
                  r.flight_decisions);
  const double ga = idle_fraction(runs.ga), greedy = idle_fraction(runs.greedy), random = idle_fraction(runs.random);
  report(ga < random, "decision-counts",
         fmt("idle fraction GA %.3f, greedy %.3f, random %.3f", ga, greedy, random));
}

}  // namespace

int main() {
  const fs::path work = fs::temp_directory_path() / ("uam_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(work);
  fs::create_directories(work);

  constraint_suite();
  determinism();
  ga_micro();
  const DominanceRuns runs = ga_dominance(work);
  ga_monotonicity();
  statistics_oracle();
  reward_normalization(runs);
  failure_delay_statistics();
  full_scale_smoke();
  decision_counts(runs);
  report(accounting_mismatches == 0 && accounting_checked > 1000, "accounting-identity",
         fmt("%zu episodes, %zu with recomputed profit differing from running totals", accounting_checked,
             accounting_mismatches));

  fs::remove_all(work);
  std::printf("%s: %d criteria failed\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}
