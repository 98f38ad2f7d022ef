#pragma once

#include <optional>
#include <string>

#include "rpvf/mdp.hpp"
#include "rpvf/state_graph.hpp"

namespace rpvf {

enum class MatrixKind {
  adjacency,
  combinatorial_laplacian,
  normalized_laplacian,
  random_walk,
  reward_diffusion,
  gaussian_kernel,
};

std::string to_string(MatrixKind kind);

/// A similarity or diffusion operator over the state graph together
/// with the parameters it was built from.
struct SimilarityMatrix {
  MatrixKind kind;
  Matrix data;
  std::optional<double> beta;
  std::optional<double> sigma;
  /// True when the matrix is symmetric by construction, so the
  /// eigensolver can use the self-adjoint path.
  bool symmetric = false;
};

enum class EigenOrdering { descending, ascending };

/// Eigenvector feature basis. Columns have unit norm, the
/// largest-magnitude entry of each column is positive, and eigenvalues
/// are sorted per `ordering` (ascending for Laplacians, descending
/// otherwise).
struct BasisSet {
  Matrix phi;          // n x k, columns are basis functions
  Vector eigenvalues;  // length k
  MatrixKind source_kind;
  EigenOrdering ordering;
  /// Largest |imaginary part| among the selected eigenvalues when the
  /// general (non-symmetric) solver was used; 0 for symmetric kinds.
  double max_imaginary = 0.0;
  /// Set when max_imaginary exceeds 1e-8.
  bool complex_warning = false;

  int n() const { return static_cast<int>(phi.rows()); }
  int k() const { return static_cast<int>(phi.cols()); }
};

/// State-action features phi(s, a): the state's k basis values placed
/// in block a of a k * n_actions vector, zeros elsewhere.
class FeatureMap {
 public:
  FeatureMap(Matrix state_features, int n_actions);

  int n_states() const { return static_cast<int>(phi_.rows()); }
  int k() const { return static_cast<int>(phi_.cols()); }
  int n_actions() const { return n_actions_; }
  int dim() const { return k() * n_actions_; }

  Vector feature(int s, int a) const;
  /// Row of state features for s (the nonzero block of phi(s, a)).
  Eigen::RowVectorXd state_row(int s) const { return phi_.row(s); }

 private:
  Matrix phi_;
  int n_actions_;
};

/// Classical graph operators: D = diag(degrees), L = D - A,
/// normalized Laplacian D^-1/2 L D^-1/2, random walk W = D^-1 A.
SimilarityMatrix build_matrix(const StateGraph& graph, MatrixKind kind);

/// Softmax diffusion over neighbor rewards:
/// W_R(s, s') = exp(beta R(s')) / sum over neighbors s'' of exp(beta R(s'')).
/// Each row is computed with the max-shift trick. With symmetrized=true
/// returns the symmetric similarity A(s,s') * exp(beta (R(s)+R(s'))/2)
/// instead (comparison variant, not row-stochastic).
SimilarityMatrix reward_diffusion_matrix(const StateGraph& graph, double beta,
                                         bool symmetrized = false);

/// K(i, j) = exp(-|v_i - v_j| / (2 sigma^2)), unsquared distance.
/// squared_distance=true selects the conventional exp(-|v_i - v_j|^2 / (2 sigma^2)).
SimilarityMatrix gaussian_kernel_from_values(const Vector& values, double sigma,
                                             bool squared_distance = false);

/// Top-k eigenbasis of a similarity matrix: largest eigenvalues for
/// diffusion/kernel kinds (by real part, via the general dense solver
/// when the matrix is not symmetric), smallest for Laplacian kinds.
/// Ties in eigenvalue are ordered lexicographically on the sign-fixed
/// eigenvectors.
BasisSet top_k_eigenbasis(const SimilarityMatrix& matrix, int k);

FeatureMap lift_to_state_action(const BasisSet& basis, int n_actions);

}  // namespace rpvf
