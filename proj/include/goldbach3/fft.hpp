#pragma once

// Complex FFT: iterative radix-2 for power-of-two sizes, Bluestein's chirp-z
// for everything else. Double precision throughout; callers that need
// guarantees spot-check against direct evaluation (see counting.hpp).

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "goldbach3/common.hpp"

namespace goldbach3 {

using cplx = std::complex<double>;

// e(x) = exp(2*pi*i*x)
inline cplx unit_phase(double x) {
  const double t = 2.0 * std::numbers::pi * x;
  return {std::cos(t), std::sin(t)};
}

// e(num/den) with the numerator reduced mod den first, so the angle stays
// small and full double precision is kept for huge numerators.
inline cplx unit_phase_ratio(std::uint64_t num, std::uint64_t den) {
  return unit_phase(static_cast<double>(num % den) / static_cast<double>(den));
}

namespace fftdetail {

// In-place radix-2, size must be a power of two. sign = +1 evaluates
// X_k = sum x_m e(+mk/N); sign = -1 the conjugate transform (unnormalized).
template <typename Real>
inline void fft_pow2(std::vector<std::complex<Real>>& a, int sign) {
  const std::size_t n = a.size();
  if (n <= 1) return;
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const Real ang = static_cast<Real>(sign) * Real(2) *
                     std::numbers::pi_v<Real> / static_cast<Real>(len);
    const std::complex<Real> wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<Real> w(1, 0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        const std::complex<Real> u = a[i + j];
        const std::complex<Real> v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

// Chirp factor e(sign * m^2 / (2N)), with m^2 reduced mod 2N in integers.
inline cplx chirp(std::uint64_t m, std::uint64_t n, int sign) {
  const unsigned __int128 sq = static_cast<unsigned __int128>(m) * m;
  const std::uint64_t r = static_cast<std::uint64_t>(sq % (2 * n));
  const double ang =
      sign * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n);
  return {std::cos(ang), std::sin(ang)};
}

}  // namespace fftdetail

// DFT of arbitrary size: X_k = sum_m x_m e(sign * mk / N).
inline std::vector<cplx> dft_any(const std::vector<cplx>& x, int sign) {
  const std::size_t n = x.size();
  if (n == 0) return {};
  if (std::has_single_bit(n)) {
    std::vector<cplx> a = x;
    fftdetail::fft_pow2(a, sign);
    return a;
  }
  // Bluestein: mk = (m^2 + k^2 - (k-m)^2) / 2.
  const std::size_t m = std::bit_ceil(2 * n - 1);
  std::vector<cplx> a(m, cplx{}), b(m, cplx{});
  for (std::size_t i = 0; i < n; ++i)
    a[i] = x[i] * fftdetail::chirp(i, n, sign);
  for (std::size_t i = 0; i < n; ++i) {
    const cplx c = fftdetail::chirp(i, n, -sign);
    b[i] = c;
    if (i != 0) b[m - i] = c;
  }
  fftdetail::fft_pow2(a, -1);
  fftdetail::fft_pow2(b, -1);
  for (std::size_t i = 0; i < m; ++i) a[i] *= b[i];
  fftdetail::fft_pow2(a, +1);
  std::vector<cplx> out(n);
  const double inv = 1.0 / static_cast<double>(m);
  for (std::size_t k = 0; k < n; ++k)
    out[k] = a[k] * inv * fftdetail::chirp(k, n, sign);
  return out;
}

// Linear convolution of two real sequences, exact length la + lb - 1.
// Extended precision internally: downstream consumers check individual
// entries against direct evaluation at ~1e-9 absolute, which double FFTs
// cannot deliver once the sequence mass reaches desk scale.
inline std::vector<double> convolve_real(const std::vector<double>& x,
                                         const std::vector<double>& y) {
  if (x.empty() || y.empty()) return {};
  using lcplx = std::complex<long double>;
  const std::size_t out_len = x.size() + y.size() - 1;
  const std::size_t m = std::bit_ceil(out_len);
  std::vector<lcplx> fa(m, lcplx{}), fb(m, lcplx{});
  for (std::size_t i = 0; i < x.size(); ++i) fa[i] = static_cast<long double>(x[i]);
  for (std::size_t i = 0; i < y.size(); ++i) fb[i] = static_cast<long double>(y[i]);
  fftdetail::fft_pow2(fa, -1);
  fftdetail::fft_pow2(fb, -1);
  for (std::size_t i = 0; i < m; ++i) fa[i] *= fb[i];
  fftdetail::fft_pow2(fa, +1);
  std::vector<double> out(out_len);
  const long double inv = 1.0L / static_cast<long double>(m);
  for (std::size_t i = 0; i < out_len; ++i)
    out[i] = static_cast<double>(fa[i].real() * inv);
  return out;
}

}  // namespace goldbach3
