#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "ggt/precond.hpp"
#include "ggt/window.hpp"

namespace ggt {

/// Learning-rate schedule eta_t as a pure function of the 1-based step index.
struct LrSchedule {
  enum class Kind { Constant, InvSqrt, Cosine };

  Kind kind = Kind::Constant;
  double base = 0.1;
  std::int64_t horizon = 1;  // total steps, used by the cosine schedule

  double at(std::int64_t t) const;

  static LrSchedule constant(double lr) { return {Kind::Constant, lr, 1}; }
  static LrSchedule inv_sqrt(double lr) { return {Kind::InvSqrt, lr, 1}; }
  static LrSchedule cosine(double lr, std::int64_t horizon) {
    return {Kind::Cosine, lr, horizon};
  }
};

/// Hyperparameters for the windowed full-matrix optimizer.
struct GgtConfig {
  LrSchedule lr = LrSchedule::constant(0.1);
  double beta1 = 0.0;           // momentum; 0 disables the buffer entirely
  double beta2 = 1.0;           // window attenuation
  double eps = 1e-4;
  double sgd_scale = 0.0;       // complement-term scalar; 0 means 1/eps
  Eigen::Index window_size = 0; // 0 means min(dim, 50)
  double jitter = 1e-6;
  double truncation_rel = 1e-10;
  enum class WindowFeed { RawGradient, MomentumBuffer };
  WindowFeed window_feed = WindowFeed::MomentumBuffer;

  void validate() const;
};

/// Common stepping interface. A state is single-owner and mutated
/// sequentially; independent instances may run on different threads.
class Optimizer {
 public:
  virtual ~Optimizer() = default;

  /// Applies one update with the supplied stochastic gradient. Throws
  /// DivergenceError if the update produces non-finite state.
  virtual void step(const Eigen::VectorXd& grad) = 0;

  const Eigen::VectorXd& x() const { return x_; }
  std::int64_t t() const { return t_; }

  /// Overwrites the iterate (used by the harness for feasibility
  /// backtracking); internal statistics are left untouched.
  void set_x(const Eigen::VectorXd& x) { x_ = x; }

 protected:
  explicit Optimizer(Eigen::VectorXd x0) : x_(std::move(x0)) {}

  void check_gradient(const Eigen::VectorXd& grad) const;
  void commit(const Eigen::VectorXd& x_new);

  Eigen::VectorXd x_;
  std::int64_t t_ = 0;
};

/// SGD with optional heavy-ball momentum: v <- beta1*v + g; x <- x - eta*v.
class Sgd : public Optimizer {
 public:
  Sgd(Eigen::VectorXd x0, LrSchedule lr, double beta1 = 0.0);
  void step(const Eigen::VectorXd& grad) override;

 private:
  LrSchedule lr_;
  double beta1_;
  Eigen::VectorXd velocity_;
};

/// Diagonal AdaGrad: x_i <- x_i - eta * g_i / (sqrt(sum g_i^2) + eps).
class DiagAdagrad : public Optimizer {
 public:
  DiagAdagrad(Eigen::VectorXd x0, LrSchedule lr, double eps);
  void step(const Eigen::VectorXd& grad) override;

 private:
  LrSchedule lr_;
  double eps_;
  Eigen::VectorXd accum_;
};

/// Adam with standard bias correction.
class Adam : public Optimizer {
 public:
  Adam(Eigen::VectorXd x0, LrSchedule lr, double beta1 = 0.9, double beta2 = 0.999,
       double eps = 1e-8);
  void step(const Eigen::VectorXd& grad) override;

 private:
  LrSchedule lr_;
  double beta1_, beta2_, eps_;
  Eigen::VectorXd m_, v_;
};

/// Dense full-matrix AdaGrad: S <- S + g g^T; x <- x - eta (delta I + S^{1/2})^{-1} g.
/// With delta = 0 the inverse is the Moore-Penrose pseudoinverse of S^{1/2}.
/// Requires d <= 512 (dense d x d state). Optional Euclidean-ball projection.
class FullAdagrad : public Optimizer {
 public:
  FullAdagrad(Eigen::VectorXd x0, LrSchedule lr, double delta,
              std::optional<double> projection_radius = std::nullopt);
  void step(const Eigen::VectorXd& grad) override;

  /// Zeroes the accumulated second-moment matrix (epoch restart).
  void reset_accumulator();

  const Eigen::MatrixXd& accumulator() const { return s_; }

 private:
  LrSchedule lr_;
  double delta_;
  std::optional<double> projection_radius_;
  Eigen::MatrixXd s_;
};

/// Windowed diagonal preconditioning: the per-coordinate denominator is
/// sqrt(diag(G_t G_t^T))_i + eps with the same window semantics as Ggt.
class WindowedDiag : public Optimizer {
 public:
  WindowedDiag(Eigen::VectorXd x0, GgtConfig cfg);
  void step(const Eigen::VectorXd& grad) override;

 private:
  GgtConfig cfg_;
  Eigen::VectorXd velocity_;
  GradientWindow window_;
};

/// The windowed full-matrix adaptive optimizer: preconditions the (momentum-
/// averaged) gradient by [(G_t G_t^T)^{1/2} + eps I]^{-1}, computed from an
/// r x r eigendecomposition of the gradient window.
class Ggt : public Optimizer {
 public:
  Ggt(Eigen::VectorXd x0, GgtConfig cfg);
  void step(const Eigen::VectorXd& grad) override;

  const GradientWindow& window() const { return window_; }
  /// The preconditioner computed by the most recent step (spectrum capture
  /// reads the eigenvalues from here at no extra decomposition cost).
  const Preconditioner& last_preconditioner() const { return last_precond_; }
  const GgtConfig& config() const { return cfg_; }

 private:
  GgtConfig cfg_;
  Eigen::VectorXd velocity_;
  GradientWindow window_;
  Preconditioner last_precond_;
};

/// Euclidean projection onto the ball of the given radius about the origin.
Eigen::VectorXd project_ball(const Eigen::VectorXd& x, double radius);

}  // namespace ggt
