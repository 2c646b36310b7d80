#include "uam/scenario_io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace uam {

using nlohmann::json;

namespace {

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw ScenarioError(where + ": expected an object");
  for (const auto& [key, _] : obj.items())
    if (!allowed.count(key)) throw ScenarioError(where + ": unknown field '" + key + "'");
  for (const auto& key : allowed)
    if (!obj.contains(key)) throw ScenarioError(where + ": missing field '" + key + "'");
}

template <typename T>
T get(const json& obj, const char* key, const std::string& where) {
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ScenarioError(where + "." + key + ": " + e.what());
  }
}

json window_to_json(const TimeWindow& w) { return json::array({w.begin, w.end}); }

TimeWindow window_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw ScenarioError(where + ": expected [begin, end]");
  return {j[0].get<double>(), j[1].get<double>()};
}

const std::set<std::string> kParamKeys = {
    "seat_capacity",   "park_capacity",    "charge_capacity",     "area_side",
    "base_fare",       "elec_price",       "op_cost_per_mile",    "cost_attribution",
    "cruise_speed",    "battery_max",      "energy_per_mile",     "charge_rate",
    "wait_time",       "t_start",          "t_end",               "corridor_separation",
    "max_takeoff_delay", "takeoff_delay_std"};

const std::set<std::string> kTopKeys = {
    "format",      "params",          "vertiports",   "evtols",    "base_demand",
    "high_demand", "peak_windows",    "peak_multiplier", "adjacency", "closure_prob", "seed"};

}  // namespace

json scenario_to_json(const ScenarioConfig& cfg) {
  const Params& p = cfg.params;
  json params = {{"seat_capacity", p.seat_capacity},
                 {"park_capacity", p.park_capacity},
                 {"charge_capacity", p.charge_capacity},
                 {"area_side", p.area_side},
                 {"base_fare", p.base_fare},
                 {"elec_price", p.elec_price},
                 {"op_cost_per_mile", p.op_cost_per_mile},
                 {"cost_attribution", p.cost_attribution},
                 {"cruise_speed", p.cruise_speed},
                 {"battery_max", p.battery_max},
                 {"energy_per_mile", p.energy_per_mile},
                 {"charge_rate", p.charge_rate},
                 {"wait_time", p.wait_time},
                 {"t_start", p.t_start},
                 {"t_end", p.t_end},
                 {"corridor_separation", p.corridor_separation},
                 {"max_takeoff_delay", p.max_takeoff_delay},
                 {"takeoff_delay_std", p.takeoff_delay_std}};
  json ports = json::array();
  for (const Vertiport& v : cfg.vertiports)
    ports.push_back({{"id", v.id},
                     {"x", v.x},
                     {"y", v.y},
                     {"is_vertistop", v.is_vertistop},
                     {"expected_takeoff_delay", v.expected_takeoff_delay},
                     {"n_charging_stations", v.n_charging_stations}});
  json fleet = json::array();
  for (const EvtolSpec& e : cfg.evtols) fleet.push_back({{"id", e.id}, {"fail_prob", e.fail_prob}});

  return {{"format", kScenarioFormat},
          {"params", params},
          {"vertiports", ports},
          {"evtols", fleet},
          {"base_demand", cfg.demand.base_demand},
          {"high_demand", cfg.demand.high_demand},
          {"peak_windows",
           {{"peak1", window_to_json(cfg.demand.peak1)}, {"peak2", window_to_json(cfg.demand.peak2)}}},
          {"peak_multiplier", cfg.demand.peak_multiplier},
          {"adjacency", cfg.routes.adjacency},
          {"closure_prob", cfg.routes.closure_prob},
          {"seed", cfg.seed}};
}

ScenarioConfig scenario_from_json(const json& j) {
  check_keys(j, kTopKeys, "scenario");
  if (j.at("format") != kScenarioFormat)
    throw ScenarioError("scenario: unsupported format " + j.at("format").dump());

  ScenarioConfig cfg;
  const json& pj = j.at("params");
  check_keys(pj, kParamKeys, "params");
  Params& p = cfg.params;
  const std::string pw = "params";
  p.seat_capacity = get<int>(pj, "seat_capacity", pw);
  p.park_capacity = get<int>(pj, "park_capacity", pw);
  p.charge_capacity = get<int>(pj, "charge_capacity", pw);
  p.area_side = get<double>(pj, "area_side", pw);
  p.base_fare = get<double>(pj, "base_fare", pw);
  p.elec_price = get<double>(pj, "elec_price", pw);
  p.op_cost_per_mile = get<double>(pj, "op_cost_per_mile", pw);
  p.cost_attribution = get<double>(pj, "cost_attribution", pw);
  p.cruise_speed = get<double>(pj, "cruise_speed", pw);
  p.battery_max = get<double>(pj, "battery_max", pw);
  p.energy_per_mile = get<double>(pj, "energy_per_mile", pw);
  p.charge_rate = get<double>(pj, "charge_rate", pw);
  p.wait_time = get<double>(pj, "wait_time", pw);
  p.t_start = get<double>(pj, "t_start", pw);
  p.t_end = get<double>(pj, "t_end", pw);
  p.corridor_separation = get<double>(pj, "corridor_separation", pw);
  p.max_takeoff_delay = get<double>(pj, "max_takeoff_delay", pw);
  p.takeoff_delay_std = get<double>(pj, "takeoff_delay_std", pw);

  const std::set<std::string> port_keys = {"id", "x", "y", "is_vertistop",
                                           "expected_takeoff_delay", "n_charging_stations"};
  for (const json& vj : j.at("vertiports")) {
    const std::string w = "vertiports[" + std::to_string(cfg.vertiports.size()) + "]";
    check_keys(vj, port_keys, w);
    Vertiport v;
    v.id = get<int>(vj, "id", w);
    v.x = get<double>(vj, "x", w);
    v.y = get<double>(vj, "y", w);
    v.is_vertistop = get<bool>(vj, "is_vertistop", w);
    v.expected_takeoff_delay = get<double>(vj, "expected_takeoff_delay", w);
    v.n_charging_stations = get<int>(vj, "n_charging_stations", w);
    cfg.vertiports.push_back(v);
  }
  for (const json& ej : j.at("evtols")) {
    const std::string w = "evtols[" + std::to_string(cfg.evtols.size()) + "]";
    check_keys(ej, {"id", "fail_prob"}, w);
    cfg.evtols.push_back({get<int>(ej, "id", w), get<double>(ej, "fail_prob", w)});
  }

  const std::string top = "scenario";
  cfg.demand.base_demand = get<std::vector<std::vector<double>>>(j, "base_demand", top);
  cfg.demand.high_demand = get<std::vector<int>>(j, "high_demand", top);
  const json& peaks = j.at("peak_windows");
  check_keys(peaks, {"peak1", "peak2"}, "peak_windows");
  cfg.demand.peak1 = window_from_json(peaks.at("peak1"), "peak_windows.peak1");
  cfg.demand.peak2 = window_from_json(peaks.at("peak2"), "peak_windows.peak2");
  cfg.demand.peak_multiplier = get<double>(j, "peak_multiplier", top);
  cfg.routes.adjacency = get<std::vector<std::vector<int>>>(j, "adjacency", top);
  cfg.routes.closure_prob = get<std::vector<std::vector<double>>>(j, "closure_prob", top);
  cfg.seed = get<std::uint64_t>(j, "seed", top);

  cfg.validate();
  return cfg;
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot open scenario file " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ScenarioError(path.string() + ": " + e.what());
  }
  return scenario_from_json(j);
}

void save_scenario(const ScenarioConfig& cfg, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ScenarioError("cannot write scenario file " + path.string());
  out << scenario_to_json(cfg).dump(2) << '\n';
  if (!out) throw ScenarioError("write failed for " + path.string());
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string to_hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string scenario_hash(const ScenarioConfig& cfg) {
  return to_hex(fnv1a64(scenario_to_json(cfg).dump()));
}

}  // namespace uam
