#include "llratio/dft.hpp"

#include "llratio/kernels.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace llr::dft {

namespace {

void check_sign(int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("dft: sign must be +1 or -1");
}

// w[j] = exp(sign * 2 pi i j / n) for j < n/2
std::vector<cplx> half_roots(size_t n, int sign) {
    std::vector<cplx> w(n / 2);
    for (size_t j = 0; j < n / 2; ++j) {
        const double ang = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
        w[j] = {std::cos(ang), sign * std::sin(ang)};
    }
    return w;
}

void bit_reverse(std::vector<cplx>& a) {
    const size_t n = a.size();
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; (j & bit) != 0; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
}

// Chirp-z: with C[t] = exp(sign * pi i t^2 / n),
//   out[b] = C[b] * sum_j (in[j] C[j]) * conj(C[b-j]),
// a linear convolution embedded in a circular one of power-of-two length
// L >= 2n-1. The chirp argument t^2/n is reduced as t^2 mod 2n in integers
// first: pi * (t^2 mod 2n) / n is the same angle modulo 2*pi, but computing
// it avoids the precision loss of forming t^2 in doubles for large t.
std::vector<cplx> bluestein(std::span<const cplx> in, int sign) {
    const size_t n = in.size();
    std::vector<cplx> chirp(n);
    for (size_t t = 0; t < n; ++t) {
        const uint64_t r = static_cast<uint64_t>(t) * t % (2 * n);
        const double ang = std::numbers::pi * static_cast<double>(r) / static_cast<double>(n);
        chirp[t] = {std::cos(ang), sign * std::sin(ang)};
    }
    const size_t L = std::bit_ceil(2 * n - 1);
    std::vector<cplx> u(L, cplx{0.0, 0.0});
    std::vector<cplx> v(L, cplx{0.0, 0.0});
    for (size_t j = 0; j < n; ++j) {
        const double ar = in[j].real(), ai = in[j].imag();
        const double cr = chirp[j].real(), ci = chirp[j].imag();
        u[j] = {ar * cr - ai * ci, ar * ci + ai * cr};
    }
    v[0] = std::conj(chirp[0]); // = 1
    for (size_t t = 1; t < n; ++t) {
        v[t] = std::conj(chirp[t]);
        v[L - t] = v[t];
    }
    fft_pow2(u, +1);
    fft_pow2(v, +1);
    kernels::ops().cmul(u.data(), v.data(), L);
    fft_pow2(u, -1);
    const double inv = 1.0 / static_cast<double>(L);
    std::vector<cplx> out(n);
    for (size_t b = 0; b < n; ++b) {
        const double ar = u[b].real() * inv, ai = u[b].imag() * inv;
        const double cr = chirp[b].real(), ci = chirp[b].imag();
        out[b] = {ar * cr - ai * ci, ar * ci + ai * cr};
    }
    return out;
}

} // namespace

void fft_pow2(std::vector<cplx>& a, int sign) {
    check_sign(sign);
    const size_t n = a.size();
    if (n <= 1) return;
    if (!std::has_single_bit(n)) throw std::invalid_argument("fft_pow2: size must be a power of two");
    const auto w = half_roots(n, sign);
    bit_reverse(a);
    std::vector<cplx> tw;
    for (size_t h = 1; h < n; h <<= 1) {
        const size_t stride = n / (2 * h);
        tw.resize(h);
        for (size_t j = 0; j < h; ++j) tw[j] = w[j * stride];
        kernels::ops().fft_stage(a.data(), n, h, tw.data());
    }
}

std::vector<cplx> dft(std::span<const cplx> in, int sign) {
    check_sign(sign);
    const size_t n = in.size();
    if (n == 0) return {};
    if (n == 1) return {in[0]};
    if (std::has_single_bit(n)) {
        std::vector<cplx> a(in.begin(), in.end());
        fft_pow2(a, sign);
        return a;
    }
    return bluestein(in, sign);
}

std::vector<cplx> dft_real(std::span<const double> in, int sign) {
    std::vector<cplx> c(in.size());
    for (size_t i = 0; i < in.size(); ++i) c[i] = {in[i], 0.0};
    return dft(c, sign);
}

} // namespace llr::dft
