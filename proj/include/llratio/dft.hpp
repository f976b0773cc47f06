#pragma once

#include <complex>
#include <span>
#include <vector>

namespace llr::dft {

using cplx = std::complex<double>;

// Unnormalized discrete Fourier transform of arbitrary length n:
//   out[b] = sum_{j<n} in[j] * exp(sign * 2*pi*i * b*j / n),  sign in {+1,-1}.
// Power-of-two sizes use an iterative radix-2 FFT; everything else goes
// through Bluestein's chirp-z reduction to a power-of-two convolution.
std::vector<cplx> dft(std::span<const cplx> in, int sign);

std::vector<cplx> dft_real(std::span<const double> in, int sign);

// In-place radix-2 FFT; a.size() must be a power of two.
void fft_pow2(std::vector<cplx>& a, int sign);

} // namespace llr::dft
