#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>

namespace llr::kernels {

using cplx = std::complex<double>;

// One radix-2 decimation-in-time pass over the whole array: for every block
// of size 2h starting at s and every j in [0, h),
//   t = a[s+j+h] * tw[j];  u = a[s+j];  a[s+j] = u + t;  a[s+j+h] = u - t.
// n and h are powers of two, h < n, tw holds h twiddles.
using FftStageFn = void (*)(cplx* a, size_t n, size_t h, const cplx* tw);

// a[i] *= b[i] for i in [0, n)
using CmulFn = void (*)(cplx* a, const cplx* b, size_t n);

// Compensated sum of (v[m] / m)^2 over m in [lo, hi). Zero entries contribute
// nothing, so implementations may skip them.
using SumSqRatioFn = double (*)(const double* v, uint64_t lo, uint64_t hi);

struct Ops {
    const char* name;
    FftStageFn fft_stage;
    CmulFn cmul;
    SumSqRatioFn sum_sq_ratio;
};

const Ops& scalar_ops();

// AVX2+FMA variants, or nullptr when the build or the CPU lacks them.
const Ops* avx2_ops();

// Operation table used by the rest of the library. Picks AVX2 when available;
// LLRATIO_SIMD=scalar forces the reference implementations, LLRATIO_SIMD=avx2
// asks for AVX2 (falling back to scalar when unsupported). Evaluated once.
const Ops& ops();

} // namespace llr::kernels
