#include "uam/harness/episode_file.hpp"

#include <fstream>
#include <sstream>

#include "uam/scenario_io.hpp"

namespace uam::harness {

namespace fs = std::filesystem;
using nlohmann::json;

json decision_to_json(const DecisionRecord& d) {
  return {{"event_time", d.event_time},
          {"evtol", d.evtol},
          {"origin", d.origin},
          {"action", d.action},
          {"kind", to_string(d.kind)},
          {"corridor", d.corridor},
          {"delay", d.delay},
          {"takeoff", d.takeoff},
          {"landing", d.landing},
          {"passengers", d.passengers},
          {"fare", d.fare},
          {"op_cost", d.op_cost},
          {"energy", d.energy},
          {"energy_cost", d.energy_cost},
          {"battery_before", d.battery_before},
          {"battery_after", d.battery_after}};
}

DecisionRecord decision_from_json(const json& j) {
  DecisionRecord d;
  d.event_time = j.at("event_time").get<double>();
  d.evtol = j.at("evtol").get<int>();
  d.origin = j.at("origin").get<int>();
  d.action = j.at("action").get<int>();
  d.kind = decision_kind_from_string(j.at("kind").get<std::string>());
  d.corridor = j.at("corridor").get<int>();
  d.delay = j.at("delay").get<double>();
  d.takeoff = j.at("takeoff").get<double>();
  d.landing = j.at("landing").get<double>();
  d.passengers = j.at("passengers").get<int>();
  d.fare = j.at("fare").get<Cents>();
  d.op_cost = j.at("op_cost").get<Cents>();
  d.energy = j.at("energy").get<double>();
  d.energy_cost = j.at("energy_cost").get<Cents>();
  d.battery_before = j.at("battery_before").get<double>();
  d.battery_after = j.at("battery_after").get<double>();
  return d;
}

std::string episode_to_string(const EpisodeHeader& header, const EpisodeLog& log,
                              const std::vector<Observation>& observations) {
  const bool demo = !observations.empty();
  if (demo && observations.size() != log.decisions.size())
    throw std::invalid_argument("write_episode: observations must be parallel to decisions");

  std::ostringstream out;
  json head = {{"format", demo ? kDemoFormat : kEpisodeFormat},
               {"scenario", header.scenario},
               {"scenario_hash", header.scenario_hash},
               {"seed", header.seed},
               {"policy", header.policy}};
  if (demo) head["observation_schema"] = kObservationSchema;
  out << head.dump() << '\n';
  for (std::size_t i = 0; i < log.decisions.size(); ++i) {
    json line = decision_to_json(log.decisions[i]);
    if (demo) line["observation"] = observation_to_json(observations[i]);
    out << line.dump() << '\n';
  }
  return out.str();
}

void write_episode(const fs::path& path, const EpisodeHeader& header, const EpisodeLog& log,
                   const std::vector<Observation>& observations) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << episode_to_string(header, log, observations);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

EpisodeFile parse_episode(const std::string& text) {
  std::istringstream in(text);
  EpisodeFile file;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ReplayError(line_no, std::string("malformed JSON: ") + e.what());
    }
    try {
      if (line_no == 1) {
        file.header.format = j.at("format").get<std::string>();
        if (file.header.format != kEpisodeFormat && file.header.format != kDemoFormat)
          throw ReplayError(line_no, "unsupported format '" + file.header.format + "'");
        file.header.scenario = j.at("scenario").get<std::string>();
        file.header.scenario_hash = j.at("scenario_hash").get<std::string>();
        file.header.seed = j.at("seed").get<std::uint64_t>();
        file.header.policy = j.at("policy").get<std::string>();
        continue;
      }
      file.decisions.push_back(decision_from_json(j));
      if (j.contains("observation"))
        file.observations.emplace_back(observation_from_json(j.at("observation")));
      else
        file.observations.emplace_back(std::nullopt);
    } catch (const ReplayError&) {
      throw;
    } catch (const std::exception& e) {
      throw ReplayError(line_no, std::string("malformed record: ") + e.what());
    }
  }
  if (line_no == 0) throw ReplayError(0, "empty episode file");
  return file;
}

EpisodeFile read_episode(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ReplayError(0, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_episode(buf.str());
}

EpisodeLog replay(const EpisodeFile& file, const ScenarioConfig& cfg) {
  const std::string hash = scenario_hash(cfg);
  if (hash != file.header.scenario_hash)
    throw ReplayError(1, "scenario hash mismatch: file has " + file.header.scenario_hash +
                             ", scenario is " + hash);
  if (cfg.seed != file.header.seed) throw ReplayError(1, "seed mismatch");

  Episode episode(std::make_shared<const ScenarioConfig>(cfg));
  for (std::size_t i = 0; i < file.decisions.size(); ++i) {
    const std::size_t line_no = i + 2;
    const DecisionRecord& want = file.decisions[i];
    const auto ev = episode.next();
    if (!ev) throw ReplayError(line_no, "episode ended before this decision");
    if (ev->evtol != want.evtol || ev->time != want.event_time)
      throw ReplayError(line_no, "decision is for a different event than the simulation produced");
    if (file.observations[i] && *file.observations[i] != observe(episode.state(), ev->evtol))
      throw ReplayError(line_no, "recorded observation differs from the simulated state");
    if (episode.step(want.action)) throw ReplayError(line_no, "recorded action is infeasible");
    if (episode.log().decisions.back() != want)
      throw ReplayError(line_no, "recorded outcome differs from the simulation");
  }
  if (!episode.done()) throw ReplayError(0, "file ends before the episode does");
  return episode.log();
}

EpisodeLog replay_file(const fs::path& path, const std::optional<fs::path>& scenario) {
  const EpisodeFile file = read_episode(path);
  fs::path scenario_path;
  if (scenario) {
    scenario_path = *scenario;
  } else {
    scenario_path = file.header.scenario;
    if (scenario_path.is_relative() && fs::exists(path.parent_path() / scenario_path))
      scenario_path = path.parent_path() / scenario_path;
  }
  return replay(file, load_scenario(scenario_path));
}

}  // namespace uam::harness
