#pragma once

#include <concepts>
#include <cstdint>

#include "advice_rl/rng.hpp"

namespace advice_rl {

/// One environment transition as seen by a tabular learner over a finite
/// state space. `done` is true iff `next_state` is terminal.
struct Transition {
  int state = 0;
  int action = 0;
  double reward = 0.0;
  int next_state = 0;
  bool done = false;
};

template <typename S>
struct StepResult {
  S next;
  double reward = 0.0;
  bool done = false;
};

/// A simulation domain is a value-semantic description of the dynamics; the
/// episode state itself is passed explicitly, so distinct trials can share one
/// (const) domain object across threads.
template <typename D>
concept SimulationDomain = requires(const D d, const typename D::State& s, int a, Rng& rng) {
  typename D::State;
  { d.action_count() } -> std::convertible_to<int>;
  { d.reward_bound() } -> std::convertible_to<double>;
  { d.initial_state(rng) } -> std::same_as<typename D::State>;
  { d.is_terminal(s) } -> std::convertible_to<bool>;
  { d.step(s, a, rng) } -> std::same_as<StepResult<typename D::State>>;
  { d.state_key(s) } -> std::convertible_to<std::uint64_t>;
};

/// Finite domains additionally enumerate their states, which is what the
/// tabular learners and the value-iteration oracle need.
template <typename D>
concept FiniteDomain = SimulationDomain<D> && requires(const D d, const typename D::State& s) {
  { d.state_count() } -> std::convertible_to<int>;
  { d.state_index(s) } -> std::convertible_to<int>;
};

}  // namespace advice_rl
