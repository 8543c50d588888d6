#ifndef COUNTCEPTION_BLAS_HPP_
#define COUNTCEPTION_BLAS_HPP_

#include <cstdint>

namespace countception::blas {

/// One-time process setup: picks a sane OpenBLAS kernel when CPU detection
/// fails (common in VMs) and pins the BLAS thread count. Called lazily by
/// gemm(); call set_threads() explicitly to change the thread count.
void init();

/// Number of BLAS-internal threads. Batch-level parallelism in this codebase
/// assumes 1 (the default); raising it is only useful for single large GEMMs.
void set_threads(int n);

/// Row-major C[m x n] = alpha * A[m x k] (^T) * B[k x n] (^T) + beta * C.
/// lda/ldb/ldc are the row strides of the *stored* matrices.
void gemm(bool trans_a, bool trans_b, int64_t m, int64_t n, int64_t k,
          float alpha, const float* a, int64_t lda, const float* b, int64_t ldb,
          float beta, float* c, int64_t ldc);
void gemm(bool trans_a, bool trans_b, int64_t m, int64_t n, int64_t k,
          double alpha, const double* a, int64_t lda, const double* b, int64_t ldb,
          double beta, double* c, int64_t ldc);

}  // namespace countception::blas

#endif  // COUNTCEPTION_BLAS_HPP_
