#pragma once

#include <Eigen/Core>
#include <cstdint>

#include "ggt/precond.hpp"

namespace ggt {

/// Sliding window of the last `r` gradients, each attenuated by beta2 per
/// step of age: the logical matrix is [g_t, b2*g_{t-1}, ..., b2^{r-1}*g_{t-r+1}],
/// with zero columns before the first r pushes.
///
/// Storage is a d x r cyclic column buffer. Attenuation is applied lazily:
/// stored columns carry a deferred scale through a single running multiplier,
/// so a push costs O(d) writes instead of O(dr) rescales. The multiplier is
/// folded back into the buffer before it can underflow.
class GradientWindow {
 public:
  GradientWindow(Eigen::Index dim, Eigen::Index size, double beta2);

  /// Appends g as the most recent column, attenuating everything older.
  /// Throws Error if g contains non-finite entries (the message names the
  /// offending push index).
  void push(const Eigen::VectorXd& g);

  /// The window as a d x r factor. Column order is the internal cyclic
  /// order, a fixed permutation of the logical order; every downstream
  /// consumer of the factor is permutation-invariant.
  LowRankFactor as_factor() const;

  /// Columns in logical order, most recent first (for tests and debugging).
  Eigen::MatrixXd logical_matrix() const;

  Eigen::Index dim() const { return buffer_.rows(); }
  Eigen::Index size() const { return buffer_.cols(); }
  Eigen::Index fill() const { return fill_; }
  double beta2() const { return beta2_; }
  std::int64_t pushes() const { return pushes_; }

  /// Scalar count of the buffer storage (d*r exactly; checked by tests).
  Eigen::Index stored_scalars() const { return buffer_.size(); }

 private:
  void materialize_scale();

  Eigen::MatrixXd buffer_;  // cyclic columns, scaled by scale_ on read
  Eigen::Index head_ = 0;   // slot of the most recent column
  Eigen::Index fill_ = 0;
  double beta2_;
  double scale_ = 1.0;  // deferred attenuation multiplier
  std::int64_t pushes_ = 0;
};

}  // namespace ggt
