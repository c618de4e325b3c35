#pragma once

// Fast transform kernels: iterative radix-2, Bluestein for arbitrary sizes,
// and the mixed-radix driver that runs a DFT along every axis of a
// product-group grid. The radix-2 path applied to an all-2 grid is exactly
// the Walsh-Hadamard transform.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace sbohr::detail {

using cplx = std::complex<double>;

inline constexpr double two_pi = 2.0 * std::numbers::pi_v<double>;

/// In-place DFT for power-of-two n. Kernel e^{-2 pi i jk/n} (forward) or
/// e^{+2 pi i jk/n} (inverse); no normalization either way.
inline void dft_pow2(cplx* a, std::size_t n, bool inverse) {
    if (n < 2) return;
    // bit reversal
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? two_pi : -two_pi) / double(len);
        const cplx wl = std::polar(1.0, ang);
        for (std::size_t i = 0; i < n; i += len) {
            cplx w = 1.0;
            for (std::size_t j = 0; j < len / 2; ++j) {
                cplx u = a[i + j];
                cplx v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

/// DFT of arbitrary size via Bluestein's chirp-z reduction to a power-of-two
/// convolution. Chirp exponents are reduced mod 2n so the root table stays
/// exact for any n that fits the group-order cap.
inline void dft_bluestein(cplx* a, std::size_t n, bool inverse) {
    std::size_t m = 1;
    while (m < 2 * n - 1) m <<= 1;
    const double sign = inverse ? 1.0 : -1.0;
    std::vector<cplx> chirp(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::uint64_t e = (std::uint64_t(k) * k) % (2 * n);
        chirp[k] = std::polar(1.0, sign * std::numbers::pi_v<double> * double(e) / double(n));
    }
    std::vector<cplx> u(m, cplx(0.0)), v(m, cplx(0.0));
    for (std::size_t k = 0; k < n; ++k) u[k] = a[k] * chirp[k];
    v[0] = std::conj(chirp[0]);
    for (std::size_t k = 1; k < n; ++k) v[k] = v[m - k] = std::conj(chirp[k]);
    dft_pow2(u.data(), m, false);
    dft_pow2(v.data(), m, false);
    for (std::size_t k = 0; k < m; ++k) u[k] *= v[k];
    dft_pow2(u.data(), m, true);
    for (std::size_t k = 0; k < n; ++k) a[k] = u[k] * chirp[k] / double(m);
}

inline void dft_any(cplx* a, std::size_t n, bool inverse) {
    if (n <= 1) return;
    if ((n & (n - 1)) == 0) {
        dft_pow2(a, n, inverse);
        return;
    }
    if (n <= 8) {  // tiny odd sizes: direct sum is cheaper than a chirp
        std::vector<cplx> out(n, cplx(0.0));
        const double sign = inverse ? two_pi : -two_pi;
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j)
                out[k] += a[j] * std::polar(1.0, sign * double((k * j) % n) / double(n));
        for (std::size_t k = 0; k < n; ++k) a[k] = out[k];
        return;
    }
    dft_bluestein(a, n, inverse);
}

/// Runs a size-N_j DFT along axis j of the flattened mixed-radix grid, for
/// every axis. Index layout: x = sum_j x_j * stride_j with stride_0 = 1
/// (first factor is the least significant digit).
inline void dft_mixed_radix(const std::vector<std::int64_t>& factors,
                            std::vector<cplx>& data, bool inverse) {
    const std::size_t total = data.size();
    std::vector<cplx> slice;
    std::size_t stride = 1;
    for (std::int64_t nf : factors) {
        const std::size_t n = std::size_t(nf);
        if (n > 1) {
            slice.resize(n);
            const std::size_t block = stride * n;
            for (std::size_t hi = 0; hi < total; hi += block) {
                for (std::size_t lo = 0; lo < stride; ++lo) {
                    const std::size_t base = hi + lo;
                    if (n == 2) {  // Walsh-Hadamard butterfly
                        cplx u = data[base], v = data[base + stride];
                        data[base] = u + v;
                        data[base + stride] = u - v;
                        continue;
                    }
                    for (std::size_t t = 0; t < n; ++t) slice[t] = data[base + t * stride];
                    dft_any(slice.data(), n, inverse);
                    for (std::size_t t = 0; t < n; ++t) data[base + t * stride] = slice[t];
                }
            }
        }
        stride *= n;
    }
}

}  // namespace sbohr::detail
