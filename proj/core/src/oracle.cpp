#include "advice_rl/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace advice_rl {
namespace {

void validate_model(const FiniteMdp& mdp) {
  if (mdp.state_count < 1 || mdp.action_count < 1) {
    throw std::invalid_argument("finite MDP needs at least one state and one action");
  }
  if (static_cast<int>(mdp.transitions.size()) != mdp.state_count ||
      static_cast<int>(mdp.terminal.size()) != mdp.state_count) {
    throw std::invalid_argument("finite MDP tables do not match the declared state count");
  }
  for (int s = 0; s < mdp.state_count; ++s) {
    if (mdp.terminal[s]) {
      continue;
    }
    if (static_cast<int>(mdp.transitions[s].size()) != mdp.action_count) {
      throw std::invalid_argument("finite MDP is missing actions for a non-terminal state");
    }
    for (int a = 0; a < mdp.action_count; ++a) {
      double total = 0.0;
      for (const auto& outcome : mdp.transitions[s][a]) {
        if (outcome.next_state < 0 || outcome.next_state >= mdp.state_count) {
          throw std::invalid_argument("finite MDP outcome points outside the state space");
        }
        if (!std::isfinite(outcome.reward) || std::abs(outcome.reward) > mdp.reward_bound) {
          throw std::invalid_argument("finite MDP reward violates the declared reward bound");
        }
        total += outcome.probability;
      }
      if (std::abs(total - 1.0) > 1e-9) {
        throw std::invalid_argument("finite MDP outcome probabilities must sum to 1");
      }
    }
  }
}

}  // namespace

FiniteMdp linear_chain_mdp(int length, double gamma) {
  if (length < 2) {
    throw std::invalid_argument("linear chain length must be at least 2");
  }
  FiniteMdp mdp;
  mdp.state_count = length;
  mdp.action_count = 2;
  mdp.gamma = gamma;
  mdp.reward_bound = 1.0;
  mdp.terminal.assign(length, false);
  mdp.terminal[length - 1] = true;
  mdp.transitions.assign(length, {});
  for (int s = 0; s + 1 < length; ++s) {
    mdp.transitions[s] = {
        {{1.0, s > 0 ? s - 1 : 0, -1.0}},  // Left clamps at the start state
        {{1.0, s + 1, -1.0}},
    };
  }
  return mdp;
}

OptimalQ value_iteration(const FiniteMdp& mdp, double gamma, double tolerance,
                         long max_iterations) {
  if (!std::isfinite(gamma) || gamma < 0.0 || gamma > 1.0) {
    throw std::invalid_argument("gamma must lie in [0, 1]");
  }
  if (!(tolerance > 0.0)) {
    throw std::invalid_argument("tolerance must be positive");
  }
  validate_model(mdp);

  QTable q(mdp.state_count, mdp.action_count);
  QTable next(mdp.state_count, mdp.action_count);

  auto backup = [&](const QTable& source, int s, int a) {
    double value = 0.0;
    for (const auto& outcome : mdp.transitions[s][a]) {
      double best_next = 0.0;
      if (!mdp.terminal[outcome.next_state]) {
        const auto row = source.row(outcome.next_state);
        best_next = row[0];
        for (std::size_t b = 1; b < row.size(); ++b) {
          best_next = std::max(best_next, row[b]);
        }
      }
      value += outcome.probability * (outcome.reward + gamma * best_next);
    }
    return value;
  };

  long iteration = 0;
  double change = 0.0;
  for (; iteration < max_iterations; ++iteration) {
    change = 0.0;
    for (int s = 0; s < mdp.state_count; ++s) {
      for (int a = 0; a < mdp.action_count; ++a) {
        const double value = mdp.terminal[s] ? 0.0 : backup(q, s, a);
        change = std::max(change, std::abs(value - q.at(s, a)));
        next.set(s, a, value);
      }
    }
    std::swap(q, next);
    if (change <= tolerance) {
      break;
    }
  }
  if (change > tolerance) {
    throw std::runtime_error("value iteration did not converge within the iteration cap");
  }

  // Exact Bellman residual of the returned table.
  double residual = 0.0;
  for (int s = 0; s < mdp.state_count; ++s) {
    if (mdp.terminal[s]) {
      continue;
    }
    for (int a = 0; a < mdp.action_count; ++a) {
      residual = std::max(residual, std::abs(backup(q, s, a) - q.at(s, a)));
    }
  }
  return {std::move(q), iteration + 1, residual};
}

std::vector<int> greedy_policy_of(const QTable& q) {
  std::vector<int> policy(q.state_count());
  for (int s = 0; s < q.state_count(); ++s) {
    const auto row = q.row(s);
    int best = 0;
    for (int a = 1; a < q.action_count(); ++a) {
      if (row[a] > row[best]) {
        best = a;
      }
    }
    policy[s] = best;
  }
  return policy;
}

}  // namespace advice_rl
