#include "uam/harness/external_policy.hpp"

#include <csignal>
#include <cstdlib>
#include <stdexcept>
#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#include "uam/observation.hpp"

namespace uam::harness {

ExternalPolicy::ExternalPolicy(const std::string& command) {
  int down[2], up[2];
  if (pipe(down) != 0) throw std::runtime_error("external policy: pipe failed");
  if (pipe(up) != 0) {
    close(down[0]);
    close(down[1]);
    throw std::runtime_error("external policy: pipe failed");
  }
  std::signal(SIGPIPE, SIG_IGN);
  child_ = fork();
  if (child_ < 0) throw std::runtime_error("external policy: fork failed");
  if (child_ == 0) {
    dup2(down[0], STDIN_FILENO);
    dup2(up[1], STDOUT_FILENO);
    close(down[0]);
    close(down[1]);
    close(up[0]);
    close(up[1]);
    execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  close(down[0]);
  close(up[1]);
  to_child_ = fdopen(down[1], "w");
  from_child_ = fdopen(up[0], "r");
  if (!to_child_ || !from_child_) throw std::runtime_error("external policy: fdopen failed");
}

ExternalPolicy::~ExternalPolicy() {
  if (to_child_) std::fclose(to_child_);
  if (from_child_) std::fclose(from_child_);
  if (child_ > 0) {
    int status = 0;
    waitpid(child_, &status, 0);
  }
}

void ExternalPolicy::send(const std::string& line) {
  if (std::fputs(line.c_str(), to_child_) < 0 || std::fputc('\n', to_child_) == EOF ||
      std::fflush(to_child_) != 0)
    throw std::runtime_error("external policy: child closed its input");
}

std::string ExternalPolicy::receive() {
  std::string line;
  for (int c = std::fgetc(from_child_); c != '\n'; c = std::fgetc(from_child_)) {
    if (c == EOF) throw std::runtime_error("external policy: child exited without answering");
    line.push_back(static_cast<char>(c));
  }
  return line;
}

void ExternalPolicy::reset(const SimState& initial) {
  send(nlohmann::json{{"type", "reset"},
                      {"scenario", scenario_id_},
                      {"n_vertiports", initial.n_vertiports()},
                      {"n_evtols", initial.n_evtols()}}
           .dump());
}

int ExternalPolicy::decide(const SimState& state, const Event& event) {
  nlohmann::json msg = {{"type", "decision"},
                        {"observation", observation_to_json(observe(state, event.evtol))},
                        {"mask", feasible_mask(state, event.evtol)}};
  send(msg.dump());
  const std::string reply = receive();
  char* end = nullptr;
  const long action = std::strtol(reply.c_str(), &end, 10);
  if (end == reply.c_str()) throw std::runtime_error("external policy: expected an integer, got '" + reply + "'");
  if (action < 0 || action >= state.n_vertiports())
    throw std::out_of_range("external policy: action " + reply + " out of range");
  return static_cast<int>(action);
}

void ExternalPolicy::finish(const SimState& final_state, const EpisodeLog& log) {
  const ScenarioConfig& cfg = *final_state.config;
  const double envelope = max_possible_profit(cfg);
  nlohmann::json msg = {{"type", "done"},
                        {"profit", to_dollars(profit(log).net())},
                        {"reward", envelope > 0 ? episode_reward(log, cfg) : 0.0}};
  send(msg.dump());
}

}  // namespace uam::harness
