#include "uam/harness/scenario_gen.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <random>
#include <stdexcept>

#include "uam/rng.hpp"
#include "uam/scenario_io.hpp"

namespace uam::harness {

namespace fs = std::filesystem;

ScenarioTemplate ScenarioTemplate::standard() { return {}; }

ScenarioTemplate ScenarioTemplate::toy() {
  ScenarioTemplate t;
  t.n_vertiports = 4;
  t.n_vertistops = 1;
  t.n_evtols = 6;
  t.n_high_demand = 1;
  return t;
}

void ScenarioTemplate::validate() const {
  if (n_vertiports < 2) throw std::invalid_argument("template: need at least 2 vertiports");
  if (n_vertistops < 0 || n_vertistops >= n_vertiports)
    throw std::invalid_argument("template: vertistops must leave at least one charging vertiport");
  if (n_high_demand < 0 || n_high_demand > n_vertiports)
    throw std::invalid_argument("template: bad high-demand count");
  if (n_evtols < 1) throw std::invalid_argument("template: need at least one eVTOL");
  if (demand_min < 0 || demand_max < demand_min) throw std::invalid_argument("template: bad demand range");
}

Split split_from_string(const std::string& s) {
  if (s == "seen") return Split::Seen;
  if (s == "unseen") return Split::Unseen;
  throw std::invalid_argument("unknown split '" + s + "' (expected seen|unseen)");
}

const char* to_string(Split s) { return s == Split::Seen ? "seen" : "unseen"; }

std::uint64_t scenario_seed(std::uint64_t master_seed, Split split, int index) {
  const std::uint64_t body = derive_seed(master_seed, Stream::Scenario, {static_cast<std::uint64_t>(index)});
  // Keep seeds within 53 bits so they survive float64 JSON readers intact.
  return ((body >> 12) << 1) | (split == Split::Unseen ? 1u : 0u);
}

ScenarioConfig make_world(const ScenarioTemplate& tmpl, std::uint64_t master_seed) {
  tmpl.validate();
  auto rng = make_rng(master_seed, Stream::Scenario, {0xF00DULL});
  std::uniform_real_distribution<double> coord(0.0, tmpl.params.area_side);
  std::uniform_real_distribution<double> tod(0.0, 6.0);
  std::uniform_real_distribution<double> demand(tmpl.demand_min, tmpl.demand_max);
  std::uniform_real_distribution<double> closure(0.0, tmpl.closure_max);

  const int n = tmpl.n_vertiports;
  ScenarioConfig cfg;
  cfg.params = tmpl.params;

  std::vector<int> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  std::shuffle(ids.begin(), ids.end(), rng);
  std::vector<bool> vertistop(n, false);
  for (int s = 0; s < tmpl.n_vertistops; ++s) vertistop[ids[s]] = true;

  for (int i = 0; i < n; ++i) {
    Vertiport v;
    v.id = i;
    v.x = coord(rng);
    v.y = coord(rng);
    v.is_vertistop = vertistop[i];
    v.expected_takeoff_delay = tod(rng);
    v.n_charging_stations = v.is_vertistop ? 0 : tmpl.params.charge_capacity;
    cfg.vertiports.push_back(v);
  }

  std::shuffle(ids.begin(), ids.end(), rng);
  cfg.demand.high_demand.assign(ids.begin(), ids.begin() + tmpl.n_high_demand);
  std::sort(cfg.demand.high_demand.begin(), cfg.demand.high_demand.end());

  cfg.demand.base_demand.assign(n, std::vector<double>(n, 0.0));
  cfg.routes.adjacency.assign(n, std::vector<int>(n, 0));
  cfg.routes.closure_prob.assign(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      cfg.demand.base_demand[i][j] = demand(rng);
      if (j > i) {
        cfg.routes.adjacency[i][j] = cfg.routes.adjacency[j][i] = 1;
        cfg.routes.closure_prob[i][j] = cfg.routes.closure_prob[j][i] = closure(rng);
      }
    }

  for (int k = 0; k < tmpl.n_evtols; ++k) cfg.evtols.push_back({k, 0.0});
  cfg.seed = master_seed;
  return cfg;
}

ScenarioConfig make_scenario(const ScenarioConfig& world, std::uint64_t master_seed, Split split,
                             int index, double fail_max) {
  ScenarioConfig cfg = world;
  cfg.seed = scenario_seed(master_seed, split, index);
  auto rng = make_rng(cfg.seed, Stream::Scenario);
  std::uniform_real_distribution<double> fail(0.0, fail_max);
  for (EvtolSpec& e : cfg.evtols) e.fail_prob = fail(rng);
  cfg.validate();
  return cfg;
}

std::string scenario_filename(Split split, int index) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%s_%03d.json", to_string(split), index);
  return buf;
}

std::vector<fs::path> gen_scenarios(int n, std::uint64_t master_seed, const ScenarioTemplate& tmpl,
                                    const fs::path& out_dir, Split split) {
  if (n < 1) throw std::invalid_argument("gen_scenarios: n must be >= 1");
  fs::create_directories(out_dir);
  const ScenarioConfig world = make_world(tmpl, master_seed);
  std::vector<fs::path> paths;
  for (int i = 0; i < n; ++i) {
    const fs::path path = out_dir / scenario_filename(split, i);
    save_scenario(make_scenario(world, master_seed, split, i, tmpl.fail_max), path);
    paths.push_back(path);
  }
  return paths;
}

std::vector<fs::path> list_scenarios(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw std::runtime_error("not a directory: " + dir.string());
  std::vector<fs::path> out;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") out.push_back(entry.path());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace uam::harness
