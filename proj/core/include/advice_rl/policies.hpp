#pragma once

#include <span>
#include <vector>

#include "advice_rl/rng.hpp"

namespace advice_rl {

/// Lowest-index maximizer. Rejects empty or non-finite inputs.
int greedy_action(std::span<const double> q_values);

/// Lowest-index minimizer, same contract as greedy_action.
int worst_action(std::span<const double> q_values);

/// With probability epsilon a uniform action (greedy included), otherwise the
/// greedy action. Consumes one uniform draw, plus one more when exploring.
int epsilon_greedy_action(std::span<const double> q_values, double epsilon, Rng& rng);

/// Softmax selection probabilities at temperature T > 0, computed with
/// max-subtraction. Strictly positive and summing to 1 for finite inputs.
std::vector<double> boltzmann_probabilities(std::span<const double> q_values, double temperature);

int boltzmann_action(std::span<const double> q_values, double temperature, Rng& rng);

/// Visit-indexed exploration rate min(1, c / sqrt(n + 1)): decays to zero
/// while its sum over visits diverges, so every action keeps being tried.
double glie_epsilon(std::int64_t visit_count, double c = 1.0);

/// Temperature schedule 1 / ln(k + 2) for Boltzmann cooling.
double boltzmann_temperature(std::int64_t visit_count);

}  // namespace advice_rl
