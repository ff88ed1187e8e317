#include "advice_rl/policies.hpp"

#include <cmath>
#include <stdexcept>

namespace advice_rl {
namespace {

void require_valid(std::span<const double> q_values) {
  if (q_values.empty()) {
    throw std::invalid_argument("action-value vector must be non-empty");
  }
  for (double v : q_values) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("action-value vector contains a non-finite entry");
    }
  }
}

}  // namespace

int greedy_action(std::span<const double> q_values) {
  require_valid(q_values);
  int best = 0;
  for (int a = 1; a < static_cast<int>(q_values.size()); ++a) {
    if (q_values[a] > q_values[best]) {
      best = a;
    }
  }
  return best;
}

int worst_action(std::span<const double> q_values) {
  require_valid(q_values);
  int worst = 0;
  for (int a = 1; a < static_cast<int>(q_values.size()); ++a) {
    if (q_values[a] < q_values[worst]) {
      worst = a;
    }
  }
  return worst;
}

int epsilon_greedy_action(std::span<const double> q_values, double epsilon, Rng& rng) {
  if (!(epsilon >= 0.0) || epsilon > 1.0) {
    throw std::invalid_argument("epsilon must lie in [0, 1]");
  }
  if (epsilon > 0.0 && rng.next_double() < epsilon) {
    require_valid(q_values);
    return rng.next_int(static_cast<int>(q_values.size()));
  }
  return greedy_action(q_values);
}

std::vector<double> boltzmann_probabilities(std::span<const double> q_values, double temperature) {
  require_valid(q_values);
  if (!(temperature > 0.0)) {
    throw std::invalid_argument("Boltzmann temperature must be positive");
  }
  double max_q = q_values[0];
  for (double v : q_values) {
    max_q = std::max(max_q, v);
  }
  std::vector<double> probabilities(q_values.size());
  double total = 0.0;
  for (std::size_t a = 0; a < q_values.size(); ++a) {
    probabilities[a] = std::exp((q_values[a] - max_q) / temperature);
    total += probabilities[a];
  }
  for (double& p : probabilities) {
    p /= total;
  }
  return probabilities;
}

int boltzmann_action(std::span<const double> q_values, double temperature, Rng& rng) {
  const auto probabilities = boltzmann_probabilities(q_values, temperature);
  const double u = rng.next_double();
  double cumulative = 0.0;
  for (std::size_t a = 0; a + 1 < probabilities.size(); ++a) {
    cumulative += probabilities[a];
    if (u < cumulative) {
      return static_cast<int>(a);
    }
  }
  return static_cast<int>(probabilities.size()) - 1;
}

double glie_epsilon(std::int64_t visit_count, double c) {
  if (visit_count < 0) {
    throw std::invalid_argument("visit count must be non-negative");
  }
  return std::min(1.0, c / std::sqrt(static_cast<double>(visit_count) + 1.0));
}

double boltzmann_temperature(std::int64_t visit_count) {
  if (visit_count < 0) {
    throw std::invalid_argument("visit count must be non-negative");
  }
  return 1.0 / std::log(static_cast<double>(visit_count) + 2.0);
}

}  // namespace advice_rl
