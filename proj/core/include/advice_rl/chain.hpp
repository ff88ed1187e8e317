#pragma once

#include "advice_rl/env.hpp"

namespace advice_rl {

/// Episodic corridor of `length` states. State 0 is the start, state
/// `length - 1` the absorbing goal. Both actions cost -1 per step; Left at
/// state 0 clamps in place, so every episode return equals -(steps taken).
class LinearChain {
 public:
  using State = int;

  static constexpr int kLeft = 0;
  static constexpr int kRight = 1;

  explicit LinearChain(int length = 50);

  int length() const { return length_; }
  int action_count() const { return 2; }
  double reward_bound() const { return 1.0; }

  State initial_state(Rng&) const { return 0; }
  bool is_terminal(State s) const { return s == length_ - 1; }
  StepResult<State> step(State s, int action, Rng&) const;

  int state_count() const { return length_; }
  int state_index(State s) const { return s; }
  std::uint64_t state_key(State s) const { return static_cast<std::uint64_t>(s); }

 private:
  int length_;
};

}  // namespace advice_rl
