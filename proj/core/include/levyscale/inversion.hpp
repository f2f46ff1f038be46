#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "levyscale/errors.hpp"
#include "levyscale/mp_complex.hpp"
#include "levyscale/precision.hpp"

namespace levyscale {

/// A one-sided Laplace transform g to be inverted. Evaluators are provided
/// per arithmetic (the multi-precision ones may be empty when a caller only
/// ever uses the double path).
struct TransformFn {
    std::function<std::complex<double>(std::complex<double>)> eval;
    std::function<MpComplex(const MpComplex&)> eval_mp;
    std::function<MpReal(const MpReal&)> eval_mp_real;
    double analytic_halfplane = 0.0; // g analytic for Re(z) > this
    bool real_symmetric = true;      // g(conj z) = conj g(z)
};

/// Cosine-quadrature inversion parameters. The integration domain [0, b] is
/// split into n subintervals b_j = b (j/n)^p with 2N+1 quadrature points
/// each; output grid x_m = x0 + m delta_x, m = 0..Nx-1.
struct FilonConfig {
    double c = 0.1;
    double b = 1e7;
    int n = 10;
    double p = 5.0;
    int N = 10000;
    double x0 = 0.05;
    double delta_x = 0.05;
    int Nx = 100;
    int threads = 0; // 0 = hardware
};

/// Parameters of the multi-precision algorithms: a single order M and the
/// working decimal precision.
struct MpConfig {
    int M = 20;
    int digits = 0; // 0 = algorithm rule-of-thumb default

    static MpConfig gaver(int M) { return {M, static_cast<int>(std::ceil(2.2 * M))}; }
    static MpConfig euler_talbot(int M) { return {M, M}; }
    /// Rule-of-thumb configs for j requested significant digits.
    static MpConfig gaver_for_digits(int j) {
        return gaver(static_cast<int>(std::ceil(1.1 * j)));
    }
    static MpConfig euler_talbot_for_digits(int j) {
        int M = static_cast<int>(std::ceil(1.7 * j));
        return {M, M};
    }
};

/// Composite Filon quadrature of int_a^b G(u) cos(u x) du with 2N+1 nodes.
/// Exact for G a polynomial of degree <= 2.
double filon_cosine(const std::function<double(double)>& G, double a, double b, int N,
                    double x);

struct FilonResult {
    std::vector<double> x;
    std::vector<double> f;
    bool cutoff_warning = false; // transform tail at u = b not negligible
    double tail_ratio = 0.0;     // |Re g(c+ib)| / |Re g(c)|
};

/// Bromwich-integral inversion as a cosine transform, every output point at
/// once: per subinterval the two oscillatory Filon sums are evaluated for the
/// whole x-grid by one fractional FFT with alpha = 2 h delta_x.
FilonResult invert_filon(const TransformFn& g, const FilonConfig& cfg);

/// Gaver's approximation accelerated by Salzer weights; evaluates g on the
/// positive real axis only; runs under cfg.digits decimal digits.
double gaver_stehfest(const TransformFn& g, double x, const MpConfig& cfg);

/// Damped trapezoid of the Bromwich integral with Euler summation weights.
double euler_inversion(const TransformFn& g, double x, const MpConfig& cfg);

/// Fixed Talbot contour; needs g analytic off the negative half-line.
double talbot(const TransformFn& g, double x, const MpConfig& cfg);

namespace detail {
/// Filon coefficient functions (power-series evaluation near 0).
double filon_A(double theta);
double filon_B(double theta);
double filon_C(double theta);
/// Coefficient checksums at the given order/precision (diagnostics/tests).
double gaver_checksum(int M, int digits);
double euler_checksum(int M, int digits);
} // namespace detail

} // namespace levyscale
