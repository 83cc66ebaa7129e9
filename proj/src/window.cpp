#include "ggt/window.hpp"

#include <cmath>

#include "ggt/errors.hpp"

namespace ggt {

namespace {
constexpr double kScaleFloor = 1e-150;
}

GradientWindow::GradientWindow(Eigen::Index dim, Eigen::Index size, double beta2)
    : buffer_(Eigen::MatrixXd::Zero(dim, size)), beta2_(beta2) {
  if (dim < 1 || size < 1) throw Error("GradientWindow: dim and size must be >= 1");
  if (!(beta2 > 0.0 && beta2 <= 1.0)) throw Error("GradientWindow: beta2 must be in (0, 1]");
}

void GradientWindow::push(const Eigen::VectorXd& g) {
  if (g.size() != buffer_.rows())
    throw DimensionError("GradientWindow::push: gradient length " +
                         std::to_string(g.size()) + " != " + std::to_string(buffer_.rows()));
  if (!g.allFinite())
    throw Error("GradientWindow::push: non-finite gradient at push " +
                std::to_string(pushes_ + 1));

  ++pushes_;
  scale_ *= beta2_;
  if (scale_ < kScaleFloor) materialize_scale();

  head_ = (fill_ == 0) ? 0 : (head_ + 1) % buffer_.cols();
  // The new column must read back as exactly g, so store g / scale_.
  buffer_.col(head_) = g / scale_;
  if (fill_ < buffer_.cols()) ++fill_;
}

void GradientWindow::materialize_scale() {
  buffer_ *= scale_;
  scale_ = 1.0;
}

LowRankFactor GradientWindow::as_factor() const {
  if (scale_ == 1.0) return LowRankFactor{buffer_};
  return LowRankFactor{buffer_ * scale_};
}

Eigen::MatrixXd GradientWindow::logical_matrix() const {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(buffer_.rows(), buffer_.cols());
  for (Eigen::Index age = 0; age < fill_; ++age) {
    Eigen::Index slot = (head_ - age + buffer_.cols()) % buffer_.cols();
    out.col(age) = buffer_.col(slot) * scale_;
  }
  return out;
}

}  // namespace ggt
