#include <doctest.h>

#include <cmath>
#include <random>

#include "support.hpp"
#include "uam/model.hpp"
#include "uam/scenario_io.hpp"

using namespace uam;
using uam::testing::small_scenario;

TEST_CASE("distance") {
  const auto cfg = small_scenario({{0, 0}, {3, 4}, {50, 50}, {0, 0}}, 1);
  CHECK(distance(cfg, 0, 0) == 0.0);
  CHECK(distance(cfg, 0, 3) == 0.0);
  CHECK(distance(cfg, 0, 1) == 5.0);
  CHECK(distance(cfg, 0, 2) == doctest::Approx(70.71067811865476).epsilon(1e-12));
  CHECK(distance(cfg, 2, 1) == distance(cfg, 1, 2));
}

TEST_CASE("flight time") {
  CHECK(flight_minutes(74.5, 74.5) == doctest::Approx(60.0));
  CHECK(flight_minutes(1e-9, 74.5) < 1e-6);
  const auto cfg = small_scenario({{0, 0}, {50, 50}}, 1);
  // 70.7107 mi / 74.5 mph * 60
  CHECK(flight_time(cfg, 0, 1) == doctest::Approx(56.94819714254074).epsilon(1e-12));
  CHECK(flight_time(cfg, 0, 1) > 0.0);
  CHECK_THROWS_AS(flight_time(cfg, 1, 1), std::domain_error);
}

TEST_CASE("trip energy") {
  CHECK(trip_energy_for(10.0, 1.0) == 10.0);
  CHECK(trip_energy_for(0.0, 1.0) == 0.0);
  const auto cfg = small_scenario({{0, 0}, {50, 50}}, 1);
  CHECK(trip_energy(cfg, 0, 1) == doctest::Approx(70.71067811865476));
  CHECK(trip_energy(cfg, 0, 1) <= cfg.params.battery_max);
  CHECK_THROWS_AS(trip_energy(cfg, 0, 0), std::domain_error);
}

TEST_CASE("q_factor floor and growth") {
  CHECK(q_factor(10.0) == 1.0);
  CHECK(q_factor(0.0) == 1.0);
  CHECK(q_factor(10.0 * std::exp(2.0)) == doctest::Approx(2.0));
  double prev = q_factor(0.0);
  for (double q = 0.0; q < 500.0; q += 0.37) {
    const double f = q_factor(q);
    CHECK(f >= 1.0);
    CHECK(f >= prev);
    prev = f;
  }
}

TEST_CASE("fares and operating cost") {
  // 10 miles at $0.64 per mile.
  const auto cfg = small_scenario({{0, 0}, {10, 0}, {50, 50}, {0, 0}}, 1);
  CHECK(operation_cost(cfg, 0, 1) == 640);
  CHECK(operation_cost(cfg, 0, 3) == 0);
  CHECK(operation_cost(cfg, 0, 2) == 4525);

  CHECK(fare_for(500, 640, 10.0) == 1140);
  CHECK(fare_for(500, 640, 10.0 * std::exp(2.0)) == 1780);
  CHECK(fare_for(500, 0, 80.0) == 500);

  // Fare is at least the base fare and grows with distance at fixed demand.
  const auto line = small_scenario({{0, 0}, {5, 0}, {10, 0}, {20, 0}, {40, 0}}, 1);
  Cents prev = 0;
  for (int j = 1; j < 5; ++j) {
    const Cents f = passenger_fare(line, 0, j, 600.0);
    CHECK(f >= 500);
    CHECK(f > prev);
    prev = f;
  }
  CHECK(energy_cost(cfg, 10.0) == 200);
}

TEST_CASE("demand forecast peak rule") {
  auto cfg = small_scenario({{0, 0}, {10, 0}, {0, 10}}, 1, 5.0);
  cfg.demand.high_demand = {1, 2};
  const double morning = 8 * 60 + 30, noon = 12 * 60, evening = 16 * 60 + 30;
  CHECK(demand_forecast(cfg, 0, 1, morning) == 20.0);
  CHECK(demand_forecast(cfg, 0, 1, noon) == 5.0);
  CHECK(demand_forecast(cfg, 1, 0, morning) == 5.0);
  CHECK(demand_forecast(cfg, 1, 0, evening) == 20.0);
  CHECK(demand_forecast(cfg, 0, 1, evening) == 5.0);
  CHECK(demand_forecast(cfg, 1, 2, morning) == 20.0);
  CHECK(demand_forecast(cfg, 2, 1, evening) == 20.0);
  CHECK(demand_forecast(cfg, 1, 1, morning) == 0.0);
  // Window edges are half open.
  CHECK(demand_forecast(cfg, 0, 1, 480.0) == 20.0);
  CHECK(demand_forecast(cfg, 0, 1, 540.0) == 5.0);

  cfg.demand.high_demand.clear();
  for (double t = cfg.params.t_start; t < cfg.params.t_end; t += 7.5)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(demand_forecast(cfg, i, j, t) == cfg.demand.base_demand[i][j]);
}

TEST_CASE("actual demand sampling") {
  auto cfg = small_scenario({{0, 0}, {10, 0}}, 1, 5.0);
  std::mt19937_64 rng(1);
  auto zero = small_scenario({{0, 0}, {10, 0}}, 1, 0.0);
  CHECK(sample_actual_demand(zero, 0, 1, 600, rng) == 0);

  std::mt19937_64 a(99), b(99);
  for (int i = 0; i < 20; ++i) CHECK(sample_actual_demand(cfg, 0, 1, 600, a) == sample_actual_demand(cfg, 0, 1, 600, b));

  std::mt19937_64 many(2025);
  double sum = 0;
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) sum += sample_actual_demand(cfg, 0, 1, 600, many);
  CHECK(sum / draws == doctest::Approx(5.0).epsilon(0.01));  // 5 +- 0.05
}

TEST_CASE("geometry invariants on generated scenarios") {
  for (int s = 0; s < 5; ++s) {
    const ScenarioConfig cfg = uam::testing::standard_scenario(s, 100 + s);
    const int n = cfg.n_vertiports();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        CHECK(distance(cfg, i, j) == distance(cfg, j, i));
        if (i != j) CHECK(trip_energy(cfg, i, j) <= cfg.params.battery_max);
        for (int k = 0; k < n; ++k) CHECK(distance(cfg, i, k) <= distance(cfg, i, j) + distance(cfg, j, k) + 1e-12);
      }
  }
}

TEST_CASE("hour buckets") {
  const auto cfg = small_scenario({{0, 0}, {1, 1}}, 1);
  CHECK(cfg.n_hours() == 12);
  CHECK(hour_index(cfg, 360.0) == 0);
  CHECK(hour_index(cfg, 419.99) == 0);
  CHECK(hour_index(cfg, 420.0) == 1);
  CHECK(hour_index(cfg, 1200.0) == 11);
  CHECK(hour_start(cfg, 2) == 480.0);
}

TEST_CASE("scenario validation") {
  auto good = small_scenario({{0, 0}, {10, 0}}, 2);
  CHECK_NOTHROW(good.validate());

  auto bad = good;
  bad.params.t_end = bad.params.t_start;
  CHECK_THROWS_AS(bad.validate(), ScenarioError);

  bad = good;
  bad.vertiports[0].is_vertistop = true;  // still has stations
  CHECK_THROWS_AS(bad.validate(), ScenarioError);

  bad = good;
  bad.vertiports[1].x = 51;
  CHECK_THROWS_AS(bad.validate(), ScenarioError);

  bad = good;
  bad.params.energy_per_mile = 2.0;  // diagonal no longer reachable
  CHECK_THROWS_AS(bad.validate(), ScenarioError);

  bad = good;
  bad.routes.adjacency[0][1] = 0;  // asymmetric
  CHECK_THROWS_AS(bad.validate(), ScenarioError);

  bad = good;
  bad.demand.base_demand[1][1] = 3;
  CHECK_THROWS_AS(bad.validate(), ScenarioError);

  bad = good;
  bad.evtols[0].fail_prob = 0.01;
  CHECK_THROWS_AS(bad.validate(), ScenarioError);

  bad = good;
  bad.params.park_capacity = 1;
  bad.evtols.push_back({2, 0.0});  // 3 aircraft, 2 slots
  CHECK_THROWS_AS(bad.validate(), ScenarioError);
}

TEST_CASE("scenario JSON is strict and round-trips") {
  const ScenarioConfig cfg = uam::testing::toy_scenario(3);
  const auto j = scenario_to_json(cfg);
  const ScenarioConfig back = scenario_from_json(j);
  CHECK(scenario_to_json(back) == j);
  CHECK(scenario_hash(back) == scenario_hash(cfg));

  auto extra = j;
  extra["wind"] = 3;
  CHECK_THROWS_WITH_AS(scenario_from_json(extra), doctest::Contains("unknown field 'wind'"), ScenarioError);

  auto nested = j;
  nested["params"]["turbo"] = true;
  CHECK_THROWS_AS(scenario_from_json(nested), ScenarioError);

  auto missing = j;
  missing.erase("seed");
  CHECK_THROWS_AS(scenario_from_json(missing), ScenarioError);

  auto other_seed = cfg;
  other_seed.seed += 1;
  CHECK(scenario_hash(other_seed) != scenario_hash(cfg));
}
