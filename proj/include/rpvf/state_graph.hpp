#pragma once

#include <Eigen/Dense>

namespace rpvf {

/// Undirected state-space graph: symmetric 0/1 adjacency with zero
/// diagonal plus the per-state reward vector observed during sampling.
struct StateGraph {
  Eigen::MatrixXd adjacency;
  Eigen::VectorXd state_rewards;

  int n() const { return static_cast<int>(adjacency.rows()); }
  Eigen::VectorXd degrees() const { return adjacency.rowwise().sum(); }

  /// Checks symmetry, zero diagonal, 0/1 entries, finite rewards.
  void validate() const;
};

}  // namespace rpvf
