#include "levyscale/fft.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "levyscale/detail/dd.hpp"

namespace levyscale {

namespace detail {

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

namespace {

// Twiddle tables per transform size, shared across threads.
const std::vector<std::complex<double>>& twiddles(std::size_t n) {
    static std::mutex mu;
    static std::map<std::size_t, std::unique_ptr<std::vector<std::complex<double>>>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[n];
    if (!slot) {
        auto t = std::make_unique<std::vector<std::complex<double>>>(n / 2);
        for (std::size_t k = 0; k < n / 2; ++k) {
            double ang = -2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n);
            (*t)[k] = {std::cos(ang), std::sin(ang)};
        }
        slot = std::move(t);
    }
    return *slot;
}

} // namespace

void fft_pow2(ComplexBuffer& a, bool inverse) {
    const std::size_t n = a.size();
    if (n <= 1) return;
    // bit reversal
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    const auto& tw = twiddles(n);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        std::size_t step = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                std::complex<double> w = tw[k * step];
                if (inverse) w = std::conj(w);
                std::complex<double> u = a[i + k];
                std::complex<double> v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
            }
        }
    }
    if (inverse) {
        double inv = 1.0 / static_cast<double>(n);
        for (auto& x : a) x *= inv;
    }
}

} // namespace detail

ComplexBuffer frac_dft(const ComplexBuffer& v, double alpha, std::size_t n_out) {
    using detail::DD;
    const std::size_t n = v.size();
    if (n == 0 || n_out == 0) return {};
    if (n == 1) return ComplexBuffer(n_out, v[0]);

    // chirp(k) = e^{i alpha k^2 / 2}; k^2 is exact in double for k < 2^26.5
    const DD half_alpha = detail::two_prod(alpha, 0.5);
    auto chirp = [&](double k2) {
        double c, s;
        detail::cos_sin_coef_n(half_alpha, k2, c, s);
        return std::complex<double>(c, s);
    };

    const std::size_t p = detail::next_pow2(n + n_out - 1);
    ComplexBuffer a(p, {0.0, 0.0});
    ComplexBuffer b(p, {0.0, 0.0});
    for (std::size_t k = 0; k < n; ++k) {
        double k2 = static_cast<double>(k) * static_cast<double>(k);
        a[k] = v[k] * chirp(k2);
    }
    const std::size_t kmax = std::max(n, n_out);
    for (std::size_t k = 0; k < kmax; ++k) {
        double k2 = static_cast<double>(k) * static_cast<double>(k);
        std::complex<double> q = std::conj(chirp(k2));
        if (k < n_out) b[k] = q;
        if (k > 0 && k < n) b[p - k] = q;
    }
    detail::fft_pow2(a, false);
    detail::fft_pow2(b, false);
    for (std::size_t i = 0; i < p; ++i) a[i] *= b[i];
    detail::fft_pow2(a, true);

    ComplexBuffer out(n_out);
    for (std::size_t m = 0; m < n_out; ++m) {
        double m2 = static_cast<double>(m) * static_cast<double>(m);
        out[m] = a[m] * chirp(m2);
    }
    return out;
}

ComplexBuffer frac_fft(const ComplexBuffer& v, double alpha) {
    return frac_dft(v, alpha, v.size());
}

} // namespace levyscale
