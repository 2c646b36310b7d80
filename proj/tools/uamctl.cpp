// uamctl: scenario generation, experiment runs, comparisons, demonstration
// export and replay for the UAM fleet scheduler.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "uam/constraints.hpp"
#include "uam/harness/episode_file.hpp"
#include "uam/harness/experiment.hpp"
#include "uam/harness/scenario_gen.hpp"
#include "uam/scenario_io.hpp"

namespace fs = std::filesystem;
using namespace uam;
using namespace uam::harness;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitError = 2;
constexpr int kExitFailedRuns = 3;

void add_ga_flags(CLI::App& cmd, GAParams& ga) {
  cmd.add_option("--pop", ga.population, "GA population size")->capture_default_str();
  cmd.add_option("--iters", ga.max_iterations, "GA generations per batch")->capture_default_str();
  cmd.add_option("--mut", ga.mutation_prob, "per-gene mutation probability")->capture_default_str();
  cmd.add_option("--elite", ga.elite_ratio, "elite fraction")->capture_default_str();
  cmd.add_option("--cx", ga.crossover_prob, "crossover probability")->capture_default_str();
  cmd.add_option("--batch", ga.batch_size, "decisions per receding-horizon batch")->capture_default_str();
  cmd.add_option("--ga-threads", ga.threads, "fitness evaluation workers")->capture_default_str();
}

std::vector<fs::path> resolve_scenarios(const fs::path& p) {
  if (fs::is_regular_file(p)) return {p};
  return list_scenarios(p);
}

void print_records(const ExperimentResult& result) {
  std::printf("%-16s %-8s %12s %10s %6s %8s %10s %5s\n", "scenario", "policy", "profit", "reward", "idle",
              "flights", "seconds", "viol");
  for (const RunRecord& r : result.records) {
    if (!r.error.empty()) {
      std::printf("%-16s %-8s ERROR: %s\n", r.scenario_id.c_str(), r.policy.c_str(), r.error.c_str());
      continue;
    }
    std::printf("%-16s %-8s %12.2f %10.6f %6d %8d %10.3f %5zu\n", r.scenario_id.c_str(), r.policy.c_str(),
                r.profit, r.reward, r.idle_decisions, r.flight_decisions, r.wall_seconds, r.violations);
  }
  for (const auto& [name, s] : result.aggregates)
    std::printf("%-18s mean %14.4f  std %14.4f  (n=%zu)\n", name.c_str(), s.mean, s.std_dev, s.n);
}

int finish_run(const ExperimentResult& result) {
  if (result.total_violations() > 0) {
    std::fprintf(stderr, "constraint violations detected: %zu\n", result.total_violations());
    return kExitViolation;
  }
  if (result.failed_runs() > 0) {
    std::fprintf(stderr, "%zu scenario(s) failed\n", result.failed_runs());
    return kExitFailedRuns;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"UAM fleet scheduling simulator and experiment harness"};
  app.require_subcommand(1);

  // gen-scenarios
  int n_scenarios = 100;
  std::uint64_t master_seed = 0;
  fs::path gen_out;
  std::string split = "seen", templ = "standard";
  int vertiports = -1, evtols = -1, vertistops = -1;
  auto* gen = app.add_subcommand("gen-scenarios", "generate scenario files sharing one world");
  gen->add_option("--n", n_scenarios, "number of scenarios")->capture_default_str();
  gen->add_option("--seed", master_seed, "master seed")->required();
  gen->add_option("--out", gen_out, "output directory")->required();
  gen->add_option("--split", split, "seen | unseen")->capture_default_str();
  gen->add_option("--template", templ, "standard | toy")->capture_default_str();
  gen->add_option("--vertiports", vertiports, "override vertiport count");
  gen->add_option("--evtols", evtols, "override fleet size");
  gen->add_option("--vertistops", vertistops, "override vertistop count");

  // run
  ExperimentOptions run_opt;
  fs::path run_scenarios, run_out, replay_dir;
  auto* run = app.add_subcommand("run", "run one policy over a scenario set");
  run->add_option("--policy", run_opt.policy, "ga | greedy | random | replay | external")
      ->check(CLI::IsMember({"ga", "greedy", "random", "replay", "external"}))
      ->required();
  run->add_option("--scenarios", run_scenarios, "scenario directory or file")->required();
  run->add_option("--out", run_out, "output directory")->required();
  run->add_option("--threads", run_opt.threads, "parallel episodes")->capture_default_str();
  run->add_option("--replays", replay_dir, "episode directory for --policy replay");
  run->add_option("--external-cmd", run_opt.external_command, "command for --policy external");
  add_ga_flags(*run, run_opt.ga);

  // compare
  fs::path cmp_a, cmp_b;
  auto* cmp = app.add_subcommand("compare", "per-scenario profit deltas and paired t-test");
  cmp->add_option("--a", cmp_a, "results.csv (or run directory) of method A")->required();
  cmp->add_option("--b", cmp_b, "results.csv (or run directory) of method B")->required();

  // export-demos
  ExperimentOptions demo_opt;
  demo_opt.policy = "ga";
  fs::path demo_scenarios, demo_out;
  auto* demos = app.add_subcommand("export-demos", "write demonstration files with observations");
  demos->add_option("--policy", demo_opt.policy, "ga | greedy | random")
      ->check(CLI::IsMember({"ga", "greedy", "random"}))
      ->capture_default_str();
  demos->add_option("--scenarios", demo_scenarios, "scenario directory or file")->required();
  demos->add_option("--out", demo_out, "output directory")->required();
  demos->add_option("--threads", demo_opt.threads, "parallel episodes")->capture_default_str();
  add_ga_flags(*demos, demo_opt.ga);

  // replay
  fs::path replay_path, replay_scenario;
  auto* rep = app.add_subcommand("replay", "re-simulate an episode or demonstration file");
  rep->add_option("--file", replay_path, "episode JSONL")->required();
  rep->add_option("--scenario", replay_scenario, "scenario file (default: path in header)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      ScenarioTemplate t = templ == "toy" ? ScenarioTemplate::toy() : ScenarioTemplate::standard();
      if (templ != "toy" && templ != "standard") throw std::invalid_argument("unknown template " + templ);
      if (vertiports > 0) t.n_vertiports = vertiports;
      if (evtols > 0) t.n_evtols = evtols;
      if (vertistops >= 0) t.n_vertistops = vertistops;
      if (t.n_high_demand > t.n_vertiports) t.n_high_demand = t.n_vertiports;
      const auto paths = gen_scenarios(n_scenarios, master_seed, t, gen_out, split_from_string(split));
      std::printf("wrote %zu scenarios to %s\n", paths.size(), gen_out.string().c_str());
      return 0;
    }

    if (*run) {
      if (run_opt.policy == "replay") {
        if (replay_dir.empty()) throw std::invalid_argument("--policy replay requires --replays");
        run_opt.replay_dir = replay_dir;
      }
      fs::create_directories(run_out);
      run_opt.episodes_dir = run_out / "episodes";
      const auto result = run_experiment(resolve_scenarios(run_scenarios), run_opt);
      write_results_csv(run_out / "results.csv", result.records);
      write_summary_json(run_out / "summary.json", result);
      print_records(result);
      return finish_run(result);
    }

    if (*cmp) {
      auto csv = [](const fs::path& p) { return fs::is_directory(p) ? p / "results.csv" : p; };
      const Comparison c = compare_results(read_results_csv(csv(cmp_a)), read_results_csv(csv(cmp_b)));
      std::printf("%-16s %12s %12s %12s\n", "scenario", "a", "b", "a-b");
      for (const auto& row : c.rows)
        std::printf("%-16s %12.2f %12.2f %12.2f\n", row.scenario_id.c_str(), row.a, row.b, row.delta);
      std::printf("a better: %d  b better: %d  ties: %d\n", c.a_wins, c.b_wins, c.ties);
      if (c.t_test) {
        const TTestResult& t = *c.t_test;
        if (t.degenerate)
          std::printf("paired t-test: degenerate (zero variance in deltas), mean delta %.4f\n", t.mean);
        else
          std::printf("paired t-test: n=%zu mean delta %.4f sd %.4f t=%.6f p=%.6g\n", t.n, t.mean, t.std_dev,
                      t.t, t.p);
      } else {
        std::printf("paired t-test: fewer than two common scenarios\n");
      }
      return 0;
    }

    if (*demos) {
      const auto result = export_demonstrations(resolve_scenarios(demo_scenarios), demo_out, demo_opt);
      print_records(result);
      return finish_run(result);
    }

    if (*rep) {
      std::optional<fs::path> scenario;
      if (!replay_scenario.empty()) scenario = replay_scenario;
      const EpisodeFile file = read_episode(replay_path);
      fs::path scen = scenario ? *scenario : fs::path(file.header.scenario);
      const ScenarioConfig cfg = load_scenario(scen);
      const EpisodeLog log = replay(file, cfg);
      const ProfitBreakdown p = profit(log);
      const AuditReport audit = audit_episode(cfg, log);
      std::printf("replayed %zu decisions (idle %d, flights %d)\n", log.decisions.size(), log.idle_decisions,
                  log.flight_decisions);
      std::printf("revenue %.2f  operating %.2f  electricity %.2f  profit %.2f  reward %.6f\n",
                  to_dollars(p.revenue), to_dollars(p.operating_cost), to_dollars(p.energy_cost),
                  to_dollars(p.net()), episode_reward(log, cfg));
      for (const auto& v : audit.violations)
        std::fprintf(stderr, "violation [%s] decision %zu: %s\n", v.rule.c_str(), v.decision, v.detail.c_str());
      return audit.ok() ? 0 : kExitViolation;
    }
  } catch (const ReplayError& e) {
    std::fprintf(stderr, "replay error: %s\n", e.what());
    return kExitError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitError;
  }
  return 0;
}
