#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "uam/scenario.hpp"

namespace uam {

inline constexpr const char* kScenarioFormat = "uam-scenario/1";

nlohmann::json scenario_to_json(const ScenarioConfig& cfg);
/// Strict parse: unknown or missing fields raise ScenarioError. Validates.
ScenarioConfig scenario_from_json(const nlohmann::json& j);

ScenarioConfig load_scenario(const std::filesystem::path& path);
void save_scenario(const ScenarioConfig& cfg, const std::filesystem::path& path);

/// FNV-1a over the canonical serialization, as 16 hex digits.
std::string scenario_hash(const ScenarioConfig& cfg);

std::uint64_t fnv1a64(std::string_view bytes);
std::string to_hex(std::uint64_t v);

}  // namespace uam
