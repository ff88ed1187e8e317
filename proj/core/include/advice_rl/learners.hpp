#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "advice_rl/env.hpp"

namespace advice_rl {

/// One-step temporal-difference error.
using TdError = double;

/// Per-(state, action) step-size rule. PowerDecay emits 1/(1 + visits)^omega,
/// which for omega in (0.5, 1] gives a divergent sum with a convergent sum of
/// squares along any (s, a) subsequence.
class StepSizeSchedule {
 public:
  enum class Kind { Constant, PowerDecay };

  static StepSizeSchedule constant(double alpha);
  static StepSizeSchedule power_decay(double omega = 0.8);

  Kind kind() const { return kind_; }
  double parameter() const { return parameter_; }

  double alpha_for(std::int64_t visits) const;

 private:
  StepSizeSchedule(Kind kind, double parameter) : kind_(kind), parameter_(parameter) {}
  Kind kind_;
  double parameter_;
};

/// Dense action-value table over a finite state space, with per-(s, a) visit
/// counters driving the PowerDecay schedules.
class QTable {
 public:
  QTable(int state_count, int action_count, double initial_value = 0.0);

  int state_count() const { return state_count_; }
  int action_count() const { return action_count_; }

  double at(int state, int action) const { return values_[index(state, action)]; }
  void set(int state, int action, double value) { values_[index(state, action)] = value; }
  std::span<const double> row(int state) const {
    return {values_.data() + static_cast<std::size_t>(state) * action_count_,
            static_cast<std::size_t>(action_count_)};
  }

  std::int64_t visits(int state, int action) const { return visits_[index(state, action)]; }
  void record_visit(int state, int action) { ++visits_[index(state, action)]; }

  std::vector<double> flattened() const { return values_; }

  void write_csv(std::ostream& out) const;
  static QTable read_csv(std::istream& in);

 private:
  friend TdError q_update_tabular(QTable&, const Transition&, double, double);
  friend TdError sarsa_update_tabular(QTable&, const Transition&, int, double, double);

  std::size_t index(int state, int action) const;

  int state_count_;
  int action_count_;
  std::vector<double> values_;
  std::vector<std::int64_t> visits_;
};

/// Parameter vector for linear action-value approximation. The feature map it
/// is paired with lives with the agent; this class owns the numerics and the
/// divergence guard.
class WeightVector {
 public:
  explicit WeightVector(int dimension, double divergence_bound = 1e6);

  int dimension() const { return static_cast<int>(theta_.size()); }
  double divergence_bound() const { return divergence_bound_; }

  const Eigen::VectorXd& values() const { return theta_; }
  Eigen::VectorXd& values() { return theta_; }

  /// theta . phi, rejecting dimension mismatches.
  double dot(std::span<const double> phi) const;

  std::int64_t update_count() const { return update_count_; }
  void count_update() { ++update_count_; }

  void write_csv(std::ostream& out) const;
  static WeightVector read_csv(std::istream& in, double divergence_bound = 1e6);

 private:
  Eigen::VectorXd theta_;
  double divergence_bound_;
  std::int64_t update_count_ = 0;
};

/// Thrown when a linear update drives ||theta||_inf past the configured bound
/// or produces a non-finite parameter.
class DivergenceError : public std::runtime_error {
 public:
  explicit DivergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// Off-policy tabular update:
///   Q(s,a) += alpha * (r + gamma * max_a' Q(s',a') - Q(s,a)).
/// Terminal next states contribute 0 to the bootstrap. Increments the (s, a)
/// visit counter and returns the TD error.
TdError q_update_tabular(QTable& q, const Transition& tr, double alpha, double gamma);

/// On-policy tabular update; `next_action` must be the action that will
/// actually be executed at tr.next_state.
TdError sarsa_update_tabular(QTable& q, const Transition& tr, int next_action, double alpha,
                             double gamma);

/// theta^T phi(s, a).
double q_value_linear(const WeightVector& w, std::span<const double> phi);

/// Gradient update toward r + gamma * max_a' theta^T phi(s', a'). Columns of
/// `phi_next` are the feature vectors of the candidate next actions; pass a
/// matrix with zero columns for terminal next states. Ties in the max break
/// toward the lowest column index.
TdError q_update_linear(WeightVector& w, std::span<const double> phi_sa, double reward,
                        const Eigen::MatrixXd& phi_next, double alpha, double gamma);

/// On-policy variant: bootstraps with phi(s', a') of the action the policy
/// will execute next. Pass an empty span for terminal next states.
TdError sarsa_update_linear(WeightVector& w, std::span<const double> phi_sa, double reward,
                            std::span<const double> phi_next, double alpha, double gamma);

}  // namespace advice_rl
