#pragma once

#include <Eigen/Core>

namespace ggt {

/// A d x r window matrix G destined for preconditioning. Zero columns are
/// permitted; r > d is permitted (at most d eigenvalues of G^T G are then
/// nonzero and truncation removes the rest).
struct LowRankFactor {
  Eigen::MatrixXd columns;

  Eigen::Index dim() const { return columns.rows(); }
  Eigen::Index rank_bound() const { return columns.cols(); }

  /// Throws Error unless every entry is finite and both dimensions are >= 1.
  void validate() const;
};

/// The factored operator [(G G^T)^{1/2} + eps*I]^{-1}, stored as the
/// retained singular values of G (descending) and the matching orthonormal
/// basis of the column space. Directions orthogonal to the basis are scaled
/// by sgd_scale, which defaults to 1/eps.
struct Preconditioner {
  Eigen::VectorXd sigma;   // length k, descending, all >= 0
  Eigen::MatrixXd basis;   // d x k, column-orthonormal
  double eps = 0.0;
  double sgd_scale = 0.0;

  Eigen::Index retained() const { return sigma.size(); }
  Eigen::Index dim() const { return basis.rows(); }

  /// Checks the structural invariants (descending sigma, eps > 0, basis
  /// orthonormal to the given tolerance). Throws Error on violation.
  void validate(double ortho_tol = 1e-8) const;
};

/// G^T G, symmetrized as (A + A^T)/2 after the product. Throws on
/// non-finite input.
Eigen::MatrixXd gram(const LowRankFactor& factor);

/// Eigendecomposes gram(factor) + jitter*I, removes the jitter bias from the
/// eigenvalues, clamps negatives to zero, and discards eigenvalues
/// lambda <= max(truncation_rel * lambda_max, 1e-12). The retained basis is
/// U_r = G V diag(1/sqrt(lambda)) (the pseudoinverse form, so a rank-deficient
/// window yields a thin basis; an all-zero window yields an empty one).
Preconditioner decompose(const LowRankFactor& factor, double jitter,
                         double truncation_rel, double eps,
                         double sgd_scale = 0.0 /* 0 means 1/eps */);

/// Applies the operator: sgd_scale*v + U [(Sigma + eps I)^{-1} - sgd_scale*I] U^T v.
Eigen::VectorXd apply_inverse_sqrt(const Preconditioner& p, const Eigen::VectorXd& v);

/// Brute-force reference: forms G G^T densely (d <= 512 enforced), takes its
/// full symmetric eigendecomposition, and applies [(G G^T)^{1/2} + eps I]^{-1}
/// directly. Test oracle; not on any hot path.
Eigen::VectorXd dense_inverse_sqrt_oracle(const LowRankFactor& factor,
                                          const Eigen::VectorXd& v, double eps);

}  // namespace ggt
