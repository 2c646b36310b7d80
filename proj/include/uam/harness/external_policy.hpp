#pragma once

// Policy served by a child process over line-delimited JSON on its stdin and
// stdout. Messages sent to the child:
//   {"type":"reset","scenario":ID,"n_vertiports":N,"n_evtols":NK}
//   {"type":"decision","observation":{...},"mask":[0|1,...]}   -> child replies "<action>\n"
//   {"type":"done","profit":Z,"reward":R}
// The child is started with /bin/sh -c and lives for the policy's lifetime.

#include <cstdio>
#include <string>
#include <sys/types.h>

#include "uam/policy.hpp"

namespace uam::harness {

class ExternalPolicy final : public Policy {
 public:
  explicit ExternalPolicy(const std::string& command);
  ~ExternalPolicy() override;
  ExternalPolicy(const ExternalPolicy&) = delete;
  ExternalPolicy& operator=(const ExternalPolicy&) = delete;

  std::string name() const override { return "external"; }
  void set_scenario_id(std::string id) { scenario_id_ = std::move(id); }
  void reset(const SimState& initial) override;
  int decide(const SimState& state, const Event& event) override;
  void finish(const SimState& final_state, const EpisodeLog& log) override;

 private:
  void send(const std::string& line);
  std::string receive();

  std::string scenario_id_;
  pid_t child_ = -1;
  std::FILE* to_child_ = nullptr;
  std::FILE* from_child_ = nullptr;
};

}  // namespace uam::harness
