#include "advice_rl/chain.hpp"

#include <stdexcept>

namespace advice_rl {

LinearChain::LinearChain(int length) : length_(length) {
  if (length < 2) {
    throw std::invalid_argument("LinearChain length must be at least 2");
  }
}

StepResult<int> LinearChain::step(State s, int action, Rng&) const {
  if (is_terminal(s)) {
    throw std::logic_error("LinearChain::step called on the terminal state");
  }
  if (s < 0 || s >= length_ || (action != kLeft && action != kRight)) {
    throw std::invalid_argument("LinearChain::step: state or action out of range");
  }
  const int next = action == kRight ? s + 1 : (s > 0 ? s - 1 : 0);
  return {next, -1.0, next == length_ - 1};
}

}  // namespace advice_rl
