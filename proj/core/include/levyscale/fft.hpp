#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace levyscale {

/// Contiguous complex working buffer used by the transform kernels.
using ComplexBuffer = std::vector<std::complex<double>>;

namespace detail {
/// In-place radix-2 FFT; size must be a power of two.
/// forward: X_k = sum_n x_n e^{-2 pi i n k / N}; inverse includes the 1/N factor.
void fft_pow2(ComplexBuffer& a, bool inverse);
std::size_t next_pow2(std::size_t n);
} // namespace detail

/// Fractional discrete Fourier transform
///   V_m = sum_{n=0}^{N-1} v_n e^{i alpha n m},  m = 0..n_out-1,
/// for arbitrary real alpha, evaluated in O(N log N) by the chirp
/// decomposition nm = (n^2 + m^2 - (m-n)^2)/2 (three padded power-of-two
/// FFTs, Bailey-Swarztrauber style). Phases alpha*k^2/2 are formed in
/// double-double arithmetic so the reduction mod 2 pi stays accurate for
/// large alpha*N^2.
ComplexBuffer frac_dft(const ComplexBuffer& v, double alpha, std::size_t n_out);

/// Same-length fractional DFT (n_out = v.size()).
ComplexBuffer frac_fft(const ComplexBuffer& v, double alpha);

} // namespace levyscale
