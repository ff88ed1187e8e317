#pragma once

#include <vector>

#include "advice_rl/learners.hpp"

namespace advice_rl {

/// Explicit finite MDP model: per-(state, action) outcome distributions.
/// This is the solver-facing description; simulation domains are separate.
struct FiniteMdp {
  struct Outcome {
    double probability = 1.0;
    int next_state = 0;
    double reward = 0.0;
  };

  int state_count = 0;
  int action_count = 0;
  std::vector<std::vector<std::vector<Outcome>>> transitions;  // [state][action]
  std::vector<bool> terminal;
  double gamma = 0.0;        // domain default discount
  double reward_bound = 0.0;
};

/// Model of the corridor domain: two actions, -1 per step, goal absorbing.
FiniteMdp linear_chain_mdp(int length, double gamma = 0.8);

struct OptimalQ {
  QTable q;
  long iterations = 0;
  double residual = 0.0;
};

/// Synchronous value-iteration sweeps with sup-norm stopping; terminal states
/// keep Q = 0. Throws if the sweep change does not reach `tolerance` within
/// `max_iterations`.
OptimalQ value_iteration(const FiniteMdp& mdp, double gamma, double tolerance = 1e-10,
                         long max_iterations = 1'000'000);

/// Per-state lowest-index argmax of a complete table.
std::vector<int> greedy_policy_of(const QTable& q);

}  // namespace advice_rl
