// AVX2+FMA variants of the hot kernels. Compiled with -mavx2 -mfma in a
// separate translation unit so the rest of the library stays generic; the
// dispatcher in kernels.cpp only hands these out after a cpuid check.

#include "llratio/kernels.hpp"

#include "llratio/summation.hpp"

#include <immintrin.h>

namespace llr::kernels {

namespace {

inline __m256d vabs(__m256d x) { return _mm256_andnot_pd(_mm256_set1_pd(-0.0), x); }

// Two interleaved complex products at once: x, w are [re0 im0 re1 im1].
// fmaddsub gives (even: a*b - c, odd: a*b + c), exactly the two lanes of
// (xr*wr - xi*wi, xi*wr + xr*wi).
inline __m256d cmul2(__m256d x, __m256d w) {
    const __m256d wre = _mm256_movedup_pd(w);        // [wr0 wr0 wr1 wr1]
    const __m256d wim = _mm256_permute_pd(w, 0xF);   // [wi0 wi0 wi1 wi1]
    const __m256d xsw = _mm256_permute_pd(x, 0x5);   // [xi0 xr0 xi1 xr1]
    return _mm256_fmaddsub_pd(x, wre, _mm256_mul_pd(xsw, wim));
}

void fft_stage_avx2(cplx* a, size_t n, size_t h, const cplx* tw) {
    if (h == 1) { // pairs are adjacent, too narrow for the vector loop
        const double wr = tw[0].real(), wi = tw[0].imag();
        for (size_t s = 0; s < n; s += 2) {
            const double xr = a[s + 1].real(), xi = a[s + 1].imag();
            const double tr = xr * wr - xi * wi;
            const double ti = xr * wi + xi * wr;
            const double ur = a[s].real(), ui = a[s].imag();
            a[s] = {ur + tr, ui + ti};
            a[s + 1] = {ur - tr, ui - ti};
        }
        return;
    }
    const double* w = reinterpret_cast<const double*>(tw);
    for (size_t s = 0; s < n; s += 2 * h) {
        double* lo = reinterpret_cast<double*>(a + s);
        double* hi = reinterpret_cast<double*>(a + s + h);
        for (size_t j = 0; j < h; j += 2) {
            const __m256d x = _mm256_loadu_pd(hi + 2 * j);
            const __m256d t = cmul2(x, _mm256_loadu_pd(w + 2 * j));
            const __m256d u = _mm256_loadu_pd(lo + 2 * j);
            _mm256_storeu_pd(lo + 2 * j, _mm256_add_pd(u, t));
            _mm256_storeu_pd(hi + 2 * j, _mm256_sub_pd(u, t));
        }
    }
}

void cmul_avx2(cplx* a, const cplx* b, size_t n) {
    const double* pb = reinterpret_cast<const double*>(b);
    double* pa = reinterpret_cast<double*>(a);
    size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d x = _mm256_loadu_pd(pa + 2 * i);
        const __m256d w = _mm256_loadu_pd(pb + 2 * i);
        _mm256_storeu_pd(pa + 2 * i, cmul2(x, w));
    }
    for (; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        a[i] = {ar * br - ai * bi, ar * bi + ai * br};
    }
}

// Four independent Neumaier accumulators, one per lane; lanes are merged in
// lane order at the end, so the result does not depend on anything but the
// input (no runtime-sized blocking).
double sum_sq_ratio_avx2(const double* v, uint64_t lo, uint64_t hi) {
    __m256d sum = _mm256_setzero_pd();
    __m256d comp = _mm256_setzero_pd();
    __m256d mvec = _mm256_setr_pd(static_cast<double>(lo), static_cast<double>(lo + 1),
                                  static_cast<double>(lo + 2), static_cast<double>(lo + 3));
    const __m256d four = _mm256_set1_pd(4.0);
    uint64_t m = lo;
    for (; m + 4 <= hi; m += 4) {
        __m256d x = _mm256_loadu_pd(v + m);
        x = _mm256_div_pd(x, mvec);
        x = _mm256_mul_pd(x, x);
        const __m256d t = _mm256_add_pd(sum, x);
        const __m256d d1 = _mm256_add_pd(_mm256_sub_pd(sum, t), x); // (sum - t) + x
        const __m256d d2 = _mm256_add_pd(_mm256_sub_pd(x, t), sum); // (x - t) + sum
        const __m256d big = _mm256_cmp_pd(vabs(sum), vabs(x), _CMP_GE_OQ);
        comp = _mm256_add_pd(comp, _mm256_blendv_pd(d2, d1, big));
        sum = t;
        mvec = _mm256_add_pd(mvec, four);
    }
    double ls[4], lc[4];
    _mm256_storeu_pd(ls, sum);
    _mm256_storeu_pd(lc, comp);
    NeumaierSum acc;
    for (int i = 0; i < 4; ++i) {
        acc.add(ls[i]);
        acc.add(lc[i]);
    }
    for (; m < hi; ++m) {
        if (v[m] != 0.0) {
            const double r = v[m] / static_cast<double>(m);
            acc.add(r * r);
        }
    }
    return acc.value();
}

} // namespace

const Ops* avx2_ops_impl() {
    static const Ops table{"avx2", fft_stage_avx2, cmul_avx2, sum_sq_ratio_avx2};
    return &table;
}

} // namespace llr::kernels
