#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "uam/simulator.hpp"

namespace uam {

struct Violation {
  std::string rule;      // seats, battery, parking, route, timing, corridor, continuity, accounting
  std::size_t decision;  // index into EpisodeLog::decisions; SIZE_MAX for log-wide rules
  std::string detail;
};

struct AuditReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::size_t count(const std::string& rule) const;
};

/// Re-checks a finished episode against the scenario without consulting the
/// engine's internal state: seat limit, strict battery margin at takeoff,
/// parking occupancy reconstructed from holds, route availability at the
/// decision hour, corridor separation, delay bounds and the accounting identity.
AuditReport audit_episode(const ScenarioConfig& cfg, const EpisodeLog& log);

}  // namespace uam
