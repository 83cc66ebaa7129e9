#include "ggt/kernels.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ggt::kernels {

namespace {

#ifdef _OPENMP
std::atomic<bool> g_parallel{true};
#else
std::atomic<bool> g_parallel{false};
#endif

// Shared inner product so both paths accumulate in the identical order.
inline double dot(const double* x, const double* y, Eigen::Index n) {
  double acc = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

}  // namespace

bool set_parallel(bool enabled) { return g_parallel.exchange(enabled); }

bool parallel_enabled() { return g_parallel.load(); }

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

MatrixXd gram_serial(const MatrixXd& a) {
  const Eigen::Index d = a.rows(), r = a.cols();
  MatrixXd out(r, r);
  for (Eigen::Index j = 0; j < r; ++j)
    for (Eigen::Index i = 0; i <= j; ++i) {
      double v = dot(a.col(i).data(), a.col(j).data(), d);
      out(i, j) = v;
      out(j, i) = v;
    }
  return out;
}

MatrixXd gram_parallel(const MatrixXd& a) {
  const Eigen::Index d = a.rows(), r = a.cols();
  MatrixXd out(r, r);
#pragma omp parallel for schedule(static)
  for (Eigen::Index j = 0; j < r; ++j)
    for (Eigen::Index i = 0; i <= j; ++i) {
      double v = dot(a.col(i).data(), a.col(j).data(), d);
      out(i, j) = v;
      out(j, i) = v;
    }
  return out;
}

MatrixXd gram(const MatrixXd& a) {
  return parallel_enabled() ? gram_parallel(a) : gram_serial(a);
}

namespace {

// Row-blocked accumulation: out rows [lo, hi) over all columns, columns of a
// visited in fixed order, so the per-element sums match the serial path.
inline void matmul_rows(const MatrixXd& a, const MatrixXd& b, MatrixXd& out,
                        Eigen::Index lo, Eigen::Index hi) {
  const Eigen::Index r = a.cols(), k = b.cols(), d = a.rows();
  for (Eigen::Index j = 0; j < k; ++j) {
    double* o = out.col(j).data();
    for (Eigen::Index i = lo; i < hi; ++i) o[i] = 0.0;
    for (Eigen::Index c = 0; c < r; ++c) {
      const double w = b(c, j);
      const double* ac = a.col(c).data();
      for (Eigen::Index i = lo; i < hi; ++i) o[i] += w * ac[i];
    }
    (void)d;
  }
}

}  // namespace

MatrixXd matmul_tall_serial(const MatrixXd& a, const MatrixXd& b) {
  MatrixXd out(a.rows(), b.cols());
  matmul_rows(a, b, out, 0, a.rows());
  return out;
}

MatrixXd matmul_tall_parallel(const MatrixXd& a, const MatrixXd& b) {
  const Eigen::Index d = a.rows();
  MatrixXd out(d, b.cols());
  const int nt = thread_count();
  const Eigen::Index chunk = (d + nt - 1) / nt;
#pragma omp parallel for schedule(static, 1)
  for (int t = 0; t < nt; ++t) {
    const Eigen::Index lo = t * chunk;
    const Eigen::Index hi = std::min(d, lo + chunk);
    if (lo < hi) matmul_rows(a, b, out, lo, hi);
  }
  return out;
}

MatrixXd matmul_tall(const MatrixXd& a, const MatrixXd& b) {
  return parallel_enabled() ? matmul_tall_parallel(a, b) : matmul_tall_serial(a, b);
}

VectorXd matvec_transposed_serial(const MatrixXd& a, const VectorXd& v) {
  const Eigen::Index r = a.cols();
  VectorXd out(r);
  for (Eigen::Index j = 0; j < r; ++j)
    out(j) = dot(a.col(j).data(), v.data(), a.rows());
  return out;
}

VectorXd matvec_transposed_parallel(const MatrixXd& a, const VectorXd& v) {
  const Eigen::Index r = a.cols();
  VectorXd out(r);
#pragma omp parallel for schedule(static)
  for (Eigen::Index j = 0; j < r; ++j)
    out(j) = dot(a.col(j).data(), v.data(), a.rows());
  return out;
}

VectorXd matvec_transposed(const MatrixXd& a, const VectorXd& v) {
  return parallel_enabled() ? matvec_transposed_parallel(a, v)
                            : matvec_transposed_serial(a, v);
}

VectorXd matvec_serial(const MatrixXd& a, const VectorXd& w) {
  MatrixXd out = matmul_tall_serial(a, w);
  return out.col(0);
}

VectorXd matvec_parallel(const MatrixXd& a, const VectorXd& w) {
  MatrixXd out = matmul_tall_parallel(a, w);
  return out.col(0);
}

VectorXd matvec(const MatrixXd& a, const VectorXd& w) {
  return parallel_enabled() ? matvec_parallel(a, w) : matvec_serial(a, w);
}

}  // namespace ggt::kernels
