#pragma once

#include <cstddef>

// Data-parallel math kernels behind the batched signal-model, MLP and
// reduction paths. Every kernel has a scalar reference implementation and
// may have SIMD variants; all variants of a kernel are required to produce
// bit-identical results (same per-element operation sequence, fixed
// four-way-interleaved reduction order), so runtime dispatch never changes
// any numerical output. tests/test_kernels.cpp asserts this exhaustively.
namespace ivim::kernels {

struct Ops {
    const char* name;

    // y[i] = exp(x[i])
    void (*exp_block)(const double* x, double* y, std::size_t n);
    // y[i] = x[i] > 0 ? x[i] : exp(x[i]) - 1
    void (*elu_block)(const double* x, double* y, std::size_t n);
    // out[i] = g[i] * (x[i] > 0 ? 1 : exp(x[i]))   (x is the pre-activation)
    void (*elu_grad_block)(const double* x, const double* g, double* out, std::size_t n);
    // y[i] = 1 / (1 + exp(-x[i]))
    void (*sigmoid_block)(const double* x, double* y, std::size_t n);

    // C[m x n] += A[m x k] * B[k x n], row-major. Accumulation order per
    // element of C follows k in increasing order with fused multiply-add.
    void (*gemm_accum)(std::size_t m, std::size_t k, std::size_t n,
                       const double* a, const double* b, double* c);
    // C[m x n] += A^T * B with A[k x m], B[k x n], row-major.
    void (*gemm_at_accum)(std::size_t m, std::size_t k, std::size_t n,
                          const double* a, const double* b, double* c);

    // Reductions use four interleaved partial sums s[j] over i == j (mod 4),
    // combined as (s0+s1)+(s2+s3), then the i >= 4*(n/4) tail in order.
    double (*sum_block)(const double* x, std::size_t n);
    double (*sumsq_block)(const double* x, std::size_t n);
    double (*dot_block)(const double* x, const double* y, std::size_t n);

    // y[i] += a * x[i]
    void (*axpy_block)(double a, const double* x, double* y, std::size_t n);

    // One Adam step over a parameter block. bc1/bc2 are the bias-correction
    // factors 1/(1-beta1^t) and 1/(1-beta2^t) for the current step t.
    void (*adam_step_block)(double* w, double* m, double* v, const double* g,
                            std::size_t n, double lr, double beta1, double beta2,
                            double eps, double bc1, double bc2);
};

const Ops& scalar_ops();

// nullptr when the binary was built without AVX2 support.
const Ops* avx2_ops();

bool cpu_supports_avx2();

// Selected once per process: AVX2 when compiled in and the CPU supports it,
// otherwise scalar. Env IVIMKIT_KERNELS=scalar|avx2|auto overrides.
const Ops& active();

// Single-element exp, bit-identical to exp_block on every input. This is
// the one exponential used throughout the library (std::exp appears only in
// test oracles), so scalar call sites and SIMD batch paths agree exactly.
double exp1(double x);

} // namespace ivim::kernels
