#pragma once

#include <Eigen/Core>

namespace ggt::kernels {

// Dense kernels for the tall-by-skinny products on the optimizer hot path.
// Each kernel has a serial reference and an OpenMP variant; the parallel
// loops are arranged so every output element is accumulated in the same
// order as the serial code, which makes the two paths bit-identical for
// any thread count. `bench_kernels` compares their throughput.

using Eigen::MatrixXd;
using Eigen::VectorXd;

/// Globally enables/disables the OpenMP variants (default: on when built
/// with OpenMP). Returns the previous setting.
bool set_parallel(bool enabled);
bool parallel_enabled();

/// Number of threads the parallel variants will use.
int thread_count();

/// A^T * A for a d x r matrix, exactly symmetric on return.
MatrixXd gram(const MatrixXd& a);
MatrixXd gram_serial(const MatrixXd& a);
MatrixXd gram_parallel(const MatrixXd& a);

/// Tall product: (d x r) * (r x k) with d >> r.
MatrixXd matmul_tall(const MatrixXd& a, const MatrixXd& b);
MatrixXd matmul_tall_serial(const MatrixXd& a, const MatrixXd& b);
MatrixXd matmul_tall_parallel(const MatrixXd& a, const MatrixXd& b);

/// A^T * v for a d x r matrix.
VectorXd matvec_transposed(const MatrixXd& a, const VectorXd& v);
VectorXd matvec_transposed_serial(const MatrixXd& a, const VectorXd& v);
VectorXd matvec_transposed_parallel(const MatrixXd& a, const VectorXd& v);

/// A * w for a d x r matrix.
VectorXd matvec(const MatrixXd& a, const VectorXd& w);
VectorXd matvec_serial(const MatrixXd& a, const VectorXd& w);
VectorXd matvec_parallel(const MatrixXd& a, const VectorXd& w);

}  // namespace ggt::kernels
