#include "uam/harness/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "uam/baselines.hpp"
#include "uam/constraints.hpp"
#include "uam/harness/episode_file.hpp"
#include "uam/harness/external_policy.hpp"
#include "uam/observation.hpp"
#include "uam/parallel.hpp"
#include "uam/scenario_io.hpp"

namespace uam::harness {

namespace fs = std::filesystem;

namespace {

/// Plays back the actions of a recorded episode, checking event alignment.
class ReplayPolicy final : public Policy {
 public:
  explicit ReplayPolicy(EpisodeFile file) : file_(std::move(file)) {}
  std::string name() const override { return "replay"; }
  void reset(const SimState&) override { next_ = 0; }
  int decide(const SimState&, const Event& event) override {
    if (next_ >= file_.decisions.size()) throw ReplayError(0, "recording ran out of decisions");
    const DecisionRecord& d = file_.decisions[next_++];
    if (d.evtol != event.evtol || d.event_time != event.time)
      throw ReplayError(next_ + 1, "recording does not match the simulated event");
    return d.action;
  }

 private:
  EpisodeFile file_;
  std::size_t next_ = 0;
};

std::unique_ptr<Policy> make_policy(const ExperimentOptions& opt, const std::string& id) {
  if (opt.policy == "ga") return std::make_unique<GaPolicy>(opt.ga);
  if (opt.policy == "greedy") return std::make_unique<GreedyPolicy>();
  if (opt.policy == "random") return std::make_unique<RandomPolicy>();
  if (opt.policy == "replay") {
    if (!opt.replay_dir) throw std::invalid_argument("policy replay needs a replay directory");
    return std::make_unique<ReplayPolicy>(read_episode(*opt.replay_dir / (id + ".jsonl")));
  }
  throw std::invalid_argument("unknown policy '" + opt.policy + "'");
}

RunRecord run_one(const fs::path& path, const ExperimentOptions& opt, Policy* shared_policy) {
  RunRecord rec;
  rec.scenario_id = scenario_id(path);
  rec.policy = opt.policy;
  try {
    auto cfg = std::make_shared<const ScenarioConfig>(load_scenario(path));
    std::unique_ptr<Policy> owned;
    Policy* policy = shared_policy;
    if (!policy) {
      owned = make_policy(opt, rec.scenario_id);
      policy = owned.get();
    }
    std::vector<Observation> observations;
    DecisionObserver observer;
    if (opt.embed_observations)
      observer = [&](const SimState& s, const Event& ev, int) { observations.push_back(observe(s, ev.evtol)); };

    const EpisodeResult result = run_episode(cfg, *policy, observer);
    const ProfitBreakdown totals = profit(result.log);
    rec.profit = to_dollars(totals.net());
    rec.reward = episode_reward(result.log, *cfg);
    rec.idle_decisions = result.log.idle_decisions;
    rec.flight_decisions = result.log.flight_decisions;
    rec.wall_seconds = result.decision_seconds;
    rec.violations = audit_episode(*cfg, result.log).violations.size();

    if (opt.episodes_dir) {
      EpisodeHeader header;
      header.scenario = fs::absolute(path).string();
      header.scenario_hash = scenario_hash(*cfg);
      header.seed = cfg->seed;
      header.policy = opt.policy;
      write_episode(*opt.episodes_dir / (rec.scenario_id + ".jsonl"), header, result.log, observations);
    }
  } catch (const std::exception& e) {
    rec.error = e.what();
  }
  return rec;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cells.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cells.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.emplace_back();
    } else {
      cells.back() += c;
    }
  }
  return cells;
}

const char* kCsvHeader =
    "scenario,policy,profit,reward,idle_decisions,flight_decisions,wall_seconds,violations,error";

}  // namespace

std::size_t ExperimentResult::total_violations() const {
  std::size_t n = 0;
  for (const auto& r : records) n += r.violations;
  return n;
}

std::size_t ExperimentResult::failed_runs() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const RunRecord& r) { return !r.error.empty(); }));
}

std::string scenario_id(const fs::path& scenario) { return scenario.stem().string(); }

std::map<std::string, Summary> aggregate(const std::vector<RunRecord>& records) {
  std::vector<double> profit, reward, idle, flights, wall;
  for (const RunRecord& r : records) {
    if (!r.error.empty()) continue;
    profit.push_back(r.profit);
    reward.push_back(r.reward);
    idle.push_back(r.idle_decisions);
    flights.push_back(r.flight_decisions);
    wall.push_back(r.wall_seconds);
  }
  return {{"profit", summarize(profit)},
          {"reward", summarize(reward)},
          {"idle_decisions", summarize(idle)},
          {"flight_decisions", summarize(flights)},
          {"wall_seconds", summarize(wall)}};
}

ExperimentResult run_experiment(const std::vector<fs::path>& scenarios, const ExperimentOptions& opt) {
  if (opt.episodes_dir) fs::create_directories(*opt.episodes_dir);
  ExperimentResult result;
  result.records.resize(scenarios.size());

  if (opt.policy == "external") {
    if (opt.external_command.empty()) throw std::invalid_argument("policy external needs a command");
    ExternalPolicy policy(opt.external_command);
    for (std::size_t i = 0; i < scenarios.size(); ++i) {
      policy.set_scenario_id(scenario_id(scenarios[i]));
      result.records[i] = run_one(scenarios[i], opt, &policy);
    }
  } else {
    parallel_for(scenarios.size(), opt.threads,
                 [&](std::size_t i) { result.records[i] = run_one(scenarios[i], opt, nullptr); });
  }
  std::stable_sort(result.records.begin(), result.records.end(),
                   [](const RunRecord& a, const RunRecord& b) { return a.scenario_id < b.scenario_id; });
  result.aggregates = aggregate(result.records);
  return result;
}

ExperimentResult export_demonstrations(const std::vector<fs::path>& scenarios, const fs::path& out_dir,
                                       ExperimentOptions options) {
  options.episodes_dir = out_dir;
  options.embed_observations = true;
  return run_experiment(scenarios, options);
}

void write_results_csv(const fs::path& path, const std::vector<RunRecord>& records) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << kCsvHeader << '\n';
  for (const RunRecord& r : records) {
    char profit[32];
    std::snprintf(profit, sizeof profit, "%.2f", r.profit);
    out << csv_escape(r.scenario_id) << ',' << r.policy << ',' << profit << ',' << format_double(r.reward)
        << ',' << r.idle_decisions << ',' << r.flight_decisions << ',' << format_double(r.wall_seconds)
        << ',' << r.violations << ',' << csv_escape(r.error) << '\n';
  }
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::vector<RunRecord> read_results_csv(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader)
    throw std::runtime_error(path.string() + ": unexpected results header");
  std::vector<RunRecord> out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != 9)
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": expected 9 columns");
    RunRecord r;
    r.scenario_id = cells[0];
    r.policy = cells[1];
    r.profit = std::stod(cells[2]);
    r.reward = std::stod(cells[3]);
    r.idle_decisions = std::stoi(cells[4]);
    r.flight_decisions = std::stoi(cells[5]);
    r.wall_seconds = std::stod(cells[6]);
    r.violations = std::stoul(cells[7]);
    r.error = cells[8];
    out.push_back(std::move(r));
  }
  return out;
}

void write_summary_json(const fs::path& path, const ExperimentResult& result) {
  nlohmann::json j;
  j["policy"] = result.records.empty() ? "" : result.records.front().policy;
  j["scenarios"] = result.records.size();
  j["failed_runs"] = result.failed_runs();
  j["violations"] = result.total_violations();
  for (const auto& [name, s] : result.aggregates)
    j["aggregates"][name] = {{"n", s.n}, {"mean", s.mean}, {"std", s.std_dev}};
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

Comparison compare_results(const std::vector<RunRecord>& a, const std::vector<RunRecord>& b) {
  std::map<std::string, double> b_profit;
  for (const RunRecord& r : b)
    if (r.error.empty()) b_profit[r.scenario_id] = r.profit;

  Comparison c;
  for (const RunRecord& r : a) {
    if (!r.error.empty()) continue;
    auto it = b_profit.find(r.scenario_id);
    if (it == b_profit.end()) continue;
    c.rows.push_back({r.scenario_id, r.profit, it->second, r.profit - it->second});
  }
  std::sort(c.rows.begin(), c.rows.end(),
            [](const ComparisonRow& x, const ComparisonRow& y) { return x.scenario_id < y.scenario_id; });
  std::vector<double> deltas;
  for (const ComparisonRow& row : c.rows) {
    deltas.push_back(row.delta);
    if (row.delta > 0) ++c.a_wins;
    else if (row.delta < 0) ++c.b_wins;
    else ++c.ties;
  }
  if (deltas.size() >= 2) c.t_test = paired_t_test(deltas);
  return c;
}

}  // namespace uam::harness
