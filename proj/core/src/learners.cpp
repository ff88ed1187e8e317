#include "advice_rl/learners.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "advice_rl/csv.hpp"

namespace advice_rl {
namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument(std::string(what) + " must be finite");
  }
}

void require_step_params(double alpha, double gamma) {
  require_finite(alpha, "alpha");
  require_finite(gamma, "gamma");
  if (alpha < 0.0 || alpha > 1.0) {
    throw std::invalid_argument("alpha must lie in [0, 1]");
  }
  if (gamma < 0.0 || gamma > 1.0) {
    throw std::invalid_argument("gamma must lie in [0, 1]");
  }
}

double max_over_columns(const WeightVector& w, const Eigen::MatrixXd& phi_next) {
  double best = 0.0;  // terminal bootstrap
  for (Eigen::Index c = 0; c < phi_next.cols(); ++c) {
    const double v = w.values().dot(phi_next.col(c));
    if (c == 0 || v > best) {
      best = v;
    }
  }
  return best;
}

void guard_theta(const WeightVector& w) {
  const double norm = w.values().lpNorm<Eigen::Infinity>();
  if (!std::isfinite(norm) || norm > w.divergence_bound()) {
    throw DivergenceError("weight vector exceeded the divergence bound (||theta||_inf = " +
                          format_double(norm) + ")");
  }
}

}  // namespace

StepSizeSchedule StepSizeSchedule::constant(double alpha) {
  if (!(alpha > 0.0) || alpha > 1.0 || !std::isfinite(alpha)) {
    throw std::invalid_argument("constant step size must lie in (0, 1]");
  }
  return {Kind::Constant, alpha};
}

StepSizeSchedule StepSizeSchedule::power_decay(double omega) {
  if (!(omega > 0.5) || omega > 1.0) {
    throw std::invalid_argument("power-decay exponent must lie in (0.5, 1]");
  }
  return {Kind::PowerDecay, omega};
}

double StepSizeSchedule::alpha_for(std::int64_t visits) const {
  if (visits < 0) {
    throw std::invalid_argument("visit count must be non-negative");
  }
  if (kind_ == Kind::Constant) {
    return parameter_;
  }
  return std::pow(1.0 + static_cast<double>(visits), -parameter_);
}

QTable::QTable(int state_count, int action_count, double initial_value)
    : state_count_(state_count),
      action_count_(action_count),
      values_(static_cast<std::size_t>(state_count) * action_count, initial_value),
      visits_(static_cast<std::size_t>(state_count) * action_count, 0) {
  if (state_count < 1 || action_count < 1) {
    throw std::invalid_argument("QTable needs at least one state and one action");
  }
}

std::size_t QTable::index(int state, int action) const {
  if (state < 0 || state >= state_count_ || action < 0 || action >= action_count_) {
    throw std::out_of_range("QTable index out of range");
  }
  return static_cast<std::size_t>(state) * action_count_ + action;
}

void QTable::write_csv(std::ostream& out) const {
  out << "state";
  for (int a = 0; a < action_count_; ++a) {
    out << ",q" << a;
  }
  out << "\n";
  for (int s = 0; s < state_count_; ++s) {
    out << s;
    for (int a = 0; a < action_count_; ++a) {
      out << ',' << format_double(at(s, a));
    }
    out << "\n";
  }
}

QTable read_qtable_rows(std::istream& in) {
  std::string line;
  std::vector<std::vector<double>> rows;
  int action_count = -1;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') {
      continue;
    }
    if (!header_seen) {
      header_seen = true;  // "state,q0,q1,..."
      action_count = static_cast<int>(split_csv_line(line).size()) - 1;
      if (action_count < 1) {
        throw std::runtime_error("QTable CSV header must list at least one action column");
      }
      continue;
    }
    const auto fields = split_csv_line(line);
    if (static_cast<int>(fields.size()) != action_count + 1) {
      throw std::runtime_error("QTable CSV row has inconsistent column count");
    }
    const long state = parse_long(fields[0], "QTable CSV state column");
    if (state != static_cast<long>(rows.size())) {
      throw std::runtime_error("QTable CSV states must be contiguous from 0");
    }
    std::vector<double> row;
    for (int a = 0; a < action_count; ++a) {
      row.push_back(parse_double(fields[a + 1], "QTable CSV value"));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw std::runtime_error("QTable CSV contains no rows");
  }
  QTable q(static_cast<int>(rows.size()), action_count);
  for (int s = 0; s < q.state_count(); ++s) {
    for (int a = 0; a < action_count; ++a) {
      q.set(s, a, rows[s][a]);
    }
  }
  return q;
}

QTable QTable::read_csv(std::istream& in) { return read_qtable_rows(in); }

WeightVector::WeightVector(int dimension, double divergence_bound)
    : theta_(Eigen::VectorXd::Zero(dimension)), divergence_bound_(divergence_bound) {
  if (dimension < 1) {
    throw std::invalid_argument("WeightVector dimension must be positive");
  }
  if (!(divergence_bound > 0.0)) {
    throw std::invalid_argument("divergence bound must be positive");
  }
}

double WeightVector::dot(std::span<const double> phi) const {
  if (static_cast<int>(phi.size()) != dimension()) {
    throw std::invalid_argument("feature vector dimension does not match the weight vector");
  }
  return theta_.dot(Eigen::Map<const Eigen::VectorXd>(phi.data(), theta_.size()));
}

void WeightVector::write_csv(std::ostream& out) const {
  out << "index,weight\n";
  for (Eigen::Index i = 0; i < theta_.size(); ++i) {
    out << i << ',' << format_double(theta_[i]) << "\n";
  }
}

WeightVector WeightVector::read_csv(std::istream& in, double divergence_bound) {
  std::string line;
  std::vector<double> weights;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') {
      continue;
    }
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    const auto fields = split_csv_line(line);
    if (fields.size() != 2) {
      throw std::runtime_error("weight CSV rows must be index,weight");
    }
    if (parse_long(fields[0], "weight CSV index") != static_cast<long>(weights.size())) {
      throw std::runtime_error("weight CSV indices must be contiguous from 0");
    }
    weights.push_back(parse_double(fields[1], "weight CSV value"));
  }
  if (weights.empty()) {
    throw std::runtime_error("weight CSV contains no rows");
  }
  WeightVector w(static_cast<int>(weights.size()), divergence_bound);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    w.values()[static_cast<Eigen::Index>(i)] = weights[i];
  }
  return w;
}

TdError q_update_tabular(QTable& q, const Transition& tr, double alpha, double gamma) {
  require_step_params(alpha, gamma);
  require_finite(tr.reward, "reward");
  double bootstrap = 0.0;
  if (!tr.done) {
    const auto row = q.row(tr.next_state);
    bootstrap = row[0];
    for (std::size_t a = 1; a < row.size(); ++a) {
      if (row[a] > bootstrap) {
        bootstrap = row[a];
      }
    }
  }
  const std::size_t idx = q.index(tr.state, tr.action);
  const double delta = tr.reward + gamma * bootstrap - q.values_[idx];
  q.values_[idx] += alpha * delta;
  ++q.visits_[idx];
  return delta;
}

TdError sarsa_update_tabular(QTable& q, const Transition& tr, int next_action, double alpha,
                             double gamma) {
  require_step_params(alpha, gamma);
  require_finite(tr.reward, "reward");
  const double bootstrap = tr.done ? 0.0 : q.at(tr.next_state, next_action);
  const std::size_t idx = q.index(tr.state, tr.action);
  const double delta = tr.reward + gamma * bootstrap - q.values_[idx];
  q.values_[idx] += alpha * delta;
  ++q.visits_[idx];
  return delta;
}

double q_value_linear(const WeightVector& w, std::span<const double> phi) { return w.dot(phi); }

TdError q_update_linear(WeightVector& w, std::span<const double> phi_sa, double reward,
                        const Eigen::MatrixXd& phi_next, double alpha, double gamma) {
  require_step_params(alpha, gamma);
  require_finite(reward, "reward");
  if (phi_next.cols() > 0 && phi_next.rows() != w.values().size()) {
    throw std::invalid_argument("next-action feature matrix has the wrong dimension");
  }
  const double bootstrap = max_over_columns(w, phi_next);
  const double delta = reward + gamma * bootstrap - w.dot(phi_sa);
  w.values() += alpha * delta * Eigen::Map<const Eigen::VectorXd>(phi_sa.data(), w.values().size());
  w.count_update();
  guard_theta(w);
  return delta;
}

TdError sarsa_update_linear(WeightVector& w, std::span<const double> phi_sa, double reward,
                            std::span<const double> phi_next, double alpha, double gamma) {
  require_step_params(alpha, gamma);
  require_finite(reward, "reward");
  const double bootstrap = phi_next.empty() ? 0.0 : w.dot(phi_next);
  const double delta = reward + gamma * bootstrap - w.dot(phi_sa);
  w.values() += alpha * delta * Eigen::Map<const Eigen::VectorXd>(phi_sa.data(), w.values().size());
  w.count_update();
  guard_theta(w);
  return delta;
}

}  // namespace advice_rl
