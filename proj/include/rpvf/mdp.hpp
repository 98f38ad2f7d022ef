#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "rpvf/rng.hpp"

namespace rpvf {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Finite MDP with dense per-action transition kernels, an expected
/// immediate reward table r(s, a), and discount in (0, 1). Immutable
/// after construction; the constructor validates row-stochasticity.
class TabularMdp {
 public:
  TabularMdp(std::vector<Matrix> transitions, Matrix rewards, double discount);

  int n_states() const { return static_cast<int>(rewards_.rows()); }
  int n_actions() const { return static_cast<int>(rewards_.cols()); }
  const Matrix& transition(int action) const { return transitions_[action]; }
  const Matrix& rewards() const { return rewards_; }
  double reward(int s, int a) const { return rewards_(s, a); }
  double discount() const { return discount_; }

  /// Set by grid constructors; excluded from episode start states.
  std::optional<int> goal_state;

 private:
  std::vector<Matrix> transitions_;  // one n x n row-stochastic matrix per action
  Matrix rewards_;                   // n x m
  double discount_;
};

/// Stationary policy, deterministic (state -> action) or randomized
/// (state -> distribution over actions).
class Policy {
 public:
  static Policy deterministic(std::vector<int> actions, int n_actions);
  static Policy randomized(Matrix probabilities);
  static Policy uniform_random(int n_states, int n_actions);

  bool is_deterministic() const { return probabilities_.size() == 0; }
  int n_states() const;
  int n_actions() const { return n_actions_; }

  /// Action of a deterministic policy (invalid for randomized ones).
  int action(int s) const { return actions_[s]; }
  /// Highest-probability action, lowest index on ties. For deterministic
  /// policies this is the chosen action.
  int mode_action(int s) const;
  double probability(int s, int a) const;
  int sample_action(int s, Rng& rng) const;

  bool operator==(const Policy& other) const;

 private:
  Policy() = default;
  std::vector<int> actions_;  // deterministic representation
  Matrix probabilities_;      // randomized representation, n x m
  int n_actions_ = 0;
};

struct ValueFunction {
  Vector values;
  double sum() const { return values.sum(); }
};

struct QFunction {
  Matrix values;  // n_states x n_actions
};

struct ValueIterationResult {
  ValueFunction j;
  QFunction q;
  Policy policy;
  int iterations = 0;
  double residual = 0.0;
  std::vector<double> residual_trace;
};

/// Bellman optimality iteration from Q = 0 until the residual
/// max|Q - T(Q)| drops below tol. The returned policy is greedy in Q
/// with lowest-index tie-breaking; j holds max_a Q(s, a). Throws on
/// non-convergence, carrying the last residual.
ValueIterationResult value_iteration(const TabularMdp& mdp, double tol = 1e-10,
                                     int max_iter = 100000);

/// Solves (I - alpha P_pi) J = R_pi directly. Works for deterministic and
/// randomized policies; verifies the solve residual.
ValueFunction exact_policy_evaluation(const TabularMdp& mdp, const Policy& policy);

/// Deterministic greedy policy, ties broken by lowest action index.
Policy greedy_policy(const QFunction& q);

/// One-step lookahead Q from a state-value vector.
QFunction q_from_values(const TabularMdp& mdp, const ValueFunction& j);

/// Truncated eigen-expansion of (I - alpha P)^-1 R for a symmetric
/// row-stochastic P: sum over the k largest-eigenvalue eigenpairs of
/// (1 / (1 - alpha * lambda_i)) phi_i phi_i^T R. Diagnostic; throws if
/// P is not symmetric.
ValueFunction spectral_value_expansion(const Matrix& p_pi, const Vector& rewards,
                                       double alpha, int k);

}  // namespace rpvf
