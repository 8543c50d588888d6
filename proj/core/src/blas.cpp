#include "countception/blas.hpp"

#include <cblas.h>

#include <cstdlib>
#include <mutex>

extern "C" void openblas_set_num_threads(int);

namespace countception::blas {

namespace {

// VM CPUID frequently reports an unknown model, which makes OpenBLAS's
// dynamic dispatch fall back to a scalar kernel (3-5x slower). OpenBLAS reads
// OPENBLAS_CORETYPE in its own init constructor, so the override has to be in
// place before that runs; priority 101 plus static linking guarantees it.
__attribute__((constructor(101))) void pick_coretype() {
#if defined(__x86_64__)
  if (!std::getenv("OPENBLAS_CORETYPE")) {
    if (__builtin_cpu_supports("avx512f"))
      setenv("OPENBLAS_CORETYPE", "SKYLAKEX", 0);
    else if (__builtin_cpu_supports("avx2"))
      setenv("OPENBLAS_CORETYPE", "HASWELL", 0);
  }
#endif
}

std::once_flag g_init_once;

void init_impl() { openblas_set_num_threads(1); }

}  // namespace

void init() { std::call_once(g_init_once, init_impl); }

void set_threads(int n) {
  init();
  openblas_set_num_threads(n > 0 ? n : 1);
}

void gemm(bool trans_a, bool trans_b, int64_t m, int64_t n, int64_t k,
          float alpha, const float* a, int64_t lda, const float* b, int64_t ldb,
          float beta, float* c, int64_t ldc) {
  init();
  cblas_sgemm(CblasRowMajor, trans_a ? CblasTrans : CblasNoTrans,
              trans_b ? CblasTrans : CblasNoTrans, static_cast<int>(m),
              static_cast<int>(n), static_cast<int>(k), alpha, a,
              static_cast<int>(lda), b, static_cast<int>(ldb), beta, c,
              static_cast<int>(ldc));
}

void gemm(bool trans_a, bool trans_b, int64_t m, int64_t n, int64_t k,
          double alpha, const double* a, int64_t lda, const double* b, int64_t ldb,
          double beta, double* c, int64_t ldc) {
  init();
  cblas_dgemm(CblasRowMajor, trans_a ? CblasTrans : CblasNoTrans,
              trans_b ? CblasTrans : CblasNoTrans, static_cast<int>(m),
              static_cast<int>(n), static_cast<int>(k), alpha, a,
              static_cast<int>(lda), b, static_cast<int>(ldb), beta, c,
              static_cast<int>(ldc));
}

}  // namespace countception::blas
