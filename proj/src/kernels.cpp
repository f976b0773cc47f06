#include "llratio/kernels.hpp"

#include "llratio/summation.hpp"

#include <cstdlib>
#include <cstring>

namespace llr::kernels {

namespace {

// Complex products are written out in doubles: std::complex operator* routes
// through the NaN-correct __muldc3 helper at -O2, which is far too slow for
// these loops, and the inputs here are always finite.

void fft_stage_scalar(cplx* a, size_t n, size_t h, const cplx* tw) {
    for (size_t s = 0; s < n; s += 2 * h) {
        cplx* lo = a + s;
        cplx* hi = a + s + h;
        for (size_t j = 0; j < h; ++j) {
            const double xr = hi[j].real(), xi = hi[j].imag();
            const double wr = tw[j].real(), wi = tw[j].imag();
            const double tr = xr * wr - xi * wi;
            const double ti = xr * wi + xi * wr;
            const double ur = lo[j].real(), ui = lo[j].imag();
            lo[j] = {ur + tr, ui + ti};
            hi[j] = {ur - tr, ui - ti};
        }
    }
}

void cmul_scalar(cplx* a, const cplx* b, size_t n) {
    for (size_t i = 0; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        a[i] = {ar * br - ai * bi, ar * bi + ai * br};
    }
}

double sum_sq_ratio_scalar(const double* v, uint64_t lo, uint64_t hi) {
    NeumaierSum s;
    for (uint64_t m = lo; m < hi; ++m) {
        if (v[m] != 0.0) {
            const double r = v[m] / static_cast<double>(m);
            s.add(r * r);
        }
    }
    return s.value();
}

constexpr Ops kScalarOps{"scalar", fft_stage_scalar, cmul_scalar, sum_sq_ratio_scalar};

} // namespace

const Ops& scalar_ops() { return kScalarOps; }

#if defined(LLRATIO_HAVE_AVX2_KERNELS)
// defined in kernels_avx2.cpp, compiled with -mavx2 -mfma
const Ops* avx2_ops_impl();

const Ops* avx2_ops() {
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return avx2_ops_impl();
    return nullptr;
}
#else
const Ops* avx2_ops() { return nullptr; }
#endif

const Ops& ops() {
    static const Ops& selected = []() -> const Ops& {
        const char* e = std::getenv("LLRATIO_SIMD");
        if (e != nullptr && std::strcmp(e, "scalar") == 0) return kScalarOps;
        const Ops* v = avx2_ops();
        return v != nullptr ? *v : kScalarOps;
    }();
    return selected;
}

} // namespace llr::kernels
