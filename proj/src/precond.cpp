#include "ggt/precond.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "ggt/errors.hpp"
#include "ggt/kernels.hpp"

namespace ggt {

namespace {
constexpr double kAbsoluteEigenFloor = 1e-12;
constexpr Eigen::Index kDenseDimCap = 512;
}  // namespace

void LowRankFactor::validate() const {
  if (columns.rows() < 1 || columns.cols() < 1)
    throw Error("LowRankFactor: dimensions must be >= 1");
  if (!columns.allFinite()) throw Error("LowRankFactor: non-finite entry");
}

void Preconditioner::validate(double ortho_tol) const {
  if (!(eps > 0.0)) throw Error("Preconditioner: eps must be > 0");
  if (basis.cols() != sigma.size())
    throw Error("Preconditioner: basis/sigma size mismatch");
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (!(sigma(i) >= 0.0)) throw Error("Preconditioner: negative singular value");
    if (i > 0 && sigma(i) > sigma(i - 1))
      throw Error("Preconditioner: sigma not descending");
  }
  if (sigma.size() > 0) {
    Eigen::MatrixXd gramian = basis.transpose() * basis;
    gramian -= Eigen::MatrixXd::Identity(basis.cols(), basis.cols());
    if (gramian.cwiseAbs().maxCoeff() > ortho_tol)
      throw Error("Preconditioner: basis not column-orthonormal");
  }
}

Eigen::MatrixXd gram(const LowRankFactor& factor) {
  factor.validate();
  Eigen::MatrixXd product = kernels::gram(factor.columns);
  // The kernel mirrors each dot product, so this is bit-exact symmetrization.
  return 0.5 * (product + product.transpose());
}

Preconditioner decompose(const LowRankFactor& factor, double jitter,
                         double truncation_rel, double eps, double sgd_scale) {
  if (jitter < 0.0) throw Error("decompose: jitter must be >= 0");
  if (!(truncation_rel >= 0.0 && truncation_rel < 1.0))
    throw Error("decompose: truncation_rel must be in [0, 1)");
  if (!(eps > 0.0)) throw Error("decompose: eps must be > 0");

  Eigen::MatrixXd small = gram(factor);
  if (jitter > 0.0)
    small.diagonal().array() += jitter;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(small);
  if (eig.info() != Eigen::Success)
    throw Error("decompose: eigendecomposition failed on symmetric input");

  const Eigen::Index r = small.rows();
  // Eigen returns ascending eigenvalues; walk from the top. The jitter is
  // subtracted back out so singular values stay unbiased, and anything the
  // subtraction drives negative is clamped.
  Eigen::VectorXd lambda(r);
  for (Eigen::Index i = 0; i < r; ++i)
    lambda(i) = std::max(eig.eigenvalues()(r - 1 - i) - jitter, 0.0);

  const double lambda_max = lambda.size() > 0 ? lambda(0) : 0.0;
  const double floor = std::max(truncation_rel * lambda_max, kAbsoluteEigenFloor);

  Eigen::Index k = 0;
  while (k < r && lambda(k) > floor) ++k;

  Preconditioner p;
  p.eps = eps;
  p.sgd_scale = sgd_scale == 0.0 ? 1.0 / eps : sgd_scale;
  p.sigma = Eigen::VectorXd(k);
  if (k == 0) {
    p.basis = Eigen::MatrixXd(factor.dim(), 0);
    return p;
  }

  Eigen::MatrixXd scaled_vecs(r, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    p.sigma(i) = std::sqrt(lambda(i));
    scaled_vecs.col(i) = eig.eigenvectors().col(r - 1 - i) / p.sigma(i);
  }
  p.basis = kernels::matmul_tall(factor.columns, scaled_vecs);
  return p;
}

Eigen::VectorXd apply_inverse_sqrt(const Preconditioner& p, const Eigen::VectorXd& v) {
  if (!(p.eps > 0.0)) throw Error("apply_inverse_sqrt: preconditioner has no eps");
  if (v.size() != p.dim())
    throw DimensionError("apply_inverse_sqrt: vector length " + std::to_string(v.size()) +
                         " != " + std::to_string(p.dim()));
  if (!v.allFinite()) throw Error("apply_inverse_sqrt: non-finite input vector");

  Eigen::VectorXd out = p.sgd_scale * v;
  if (p.retained() == 0) return out;

  Eigen::VectorXd coeffs = kernels::matvec_transposed(p.basis, v);
  for (Eigen::Index i = 0; i < coeffs.size(); ++i)
    coeffs(i) *= 1.0 / (p.sigma(i) + p.eps) - p.sgd_scale;
  out += kernels::matvec(p.basis, coeffs);
  return out;
}

Eigen::VectorXd dense_inverse_sqrt_oracle(const LowRankFactor& factor,
                                          const Eigen::VectorXd& v, double eps) {
  factor.validate();
  if (factor.dim() > kDenseDimCap)
    throw Error("dense_inverse_sqrt_oracle: d = " + std::to_string(factor.dim()) +
                " exceeds the dense cap (512); use apply_inverse_sqrt");
  if (v.size() != factor.dim())
    throw DimensionError("dense_inverse_sqrt_oracle: vector length mismatch");

  Eigen::MatrixXd outer = factor.columns * factor.columns.transpose();
  outer = 0.5 * (outer + outer.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(outer);
  if (eig.info() != Eigen::Success)
    throw Error("dense_inverse_sqrt_oracle: eigendecomposition failed");

  Eigen::VectorXd scale(eig.eigenvalues().size());
  for (Eigen::Index i = 0; i < scale.size(); ++i)
    scale(i) = 1.0 / (std::sqrt(std::max(eig.eigenvalues()(i), 0.0)) + eps);
  return eig.eigenvectors() * (scale.asDiagonal() * (eig.eigenvectors().transpose() * v));
}

}  // namespace ggt
