#pragma once

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "levyscale/errors.hpp"
#include "levyscale/precision.hpp"
#include "levyscale/scalar.hpp"

namespace levyscale::sf {

// ---------------------------------------------------------------------------
// gamma-family helpers
// ---------------------------------------------------------------------------

/// 1/Gamma(x) for real x, entire: returns 0 at the poles x = 0, -1, -2, ...
double recip_gamma(double x);

/// ln|Gamma(x)| and the sign of Gamma(x); x may be negative non-integer.
std::pair<double, int> lgamma_signed(double x);

/// Bernoulli numbers B_{2k}, k = 1..count, as doubles.
const std::vector<double>& bernoulli_2k(int count);

/// Bernoulli number B_{2k} at the requested precision.
MpReal bernoulli_2k_mp(int k, mpfr_prec_t prec);

namespace detail {

inline int digits_of(const double&) { return 17; }
inline int digits_of(const std::complex<double>&) { return 17; }
inline int digits_of(const MpReal& x) {
    return static_cast<int>(static_cast<double>(x.prec()) / 3.3219280948873626) + 1;
}
inline int digits_of(const MpComplex& x) {
    return static_cast<int>(static_cast<double>(x.prec()) / 3.3219280948873626) + 1;
}

inline double bern2k_like(const double&, int k) { return bernoulli_2k(k)[k - 1]; }
inline std::complex<double> bern2k_like(const std::complex<double>&, int k) {
    return {bernoulli_2k(k)[k - 1], 0.0};
}
inline MpReal bern2k_like(const MpReal& like, int k) { return bernoulli_2k_mp(k, like.prec()); }
inline MpComplex bern2k_like(const MpComplex& like, int k) {
    return MpComplex(bernoulli_2k_mp(k, like.prec()), MpReal(like.prec()));
}

inline std::complex<double> sin_cpx(const std::complex<double>& z) { return std::sin(z); }
inline MpComplex sin_cpx(const MpComplex& z) {
    return {sin(z.real()) * cosh(z.imag()), cos(z.real()) * sinh(z.imag())};
}

template <class C>
C half_ln_two_pi_like(const C& like) {
    if constexpr (num::is_mp_v<C>) {
        using std::log;
        return C(log(2.0 * MpReal::pi(like.prec())) * 0.5);
    } else {
        return num::make(like, 0.91893853320467274178032973640562);
    }
}

} // namespace detail

/// log Gamma by the Stirling series after lifting Re(z) above a
/// digit-dependent threshold; requires Re(z) > 0. Any scalar field.
template <class C>
C lngamma_pos(C z) {
    using std::log;
    using num::make;
    const int digits = detail::digits_of(z);
    const double shift_to = 0.38 * digits + 6.0;
    C acc = make(z, 0.0);
    int guard = 0;
    while (to_double(num::real_part(z)) < shift_to && guard++ < 100000) {
        acc = acc + log(z);
        z = z + 1.0;
    }
    C w = make(z, 1.0) / z;
    C w2 = w * w;
    C res = (z - 0.5) * log(z) - z + detail::half_ln_two_pi_like(z);
    C term_pow = w;
    C tail = make(z, 0.0);
    const int kmax = static_cast<int>(3.2 * shift_to) + 12;
    for (int k = 1; k <= kmax; ++k) {
        C t = detail::bern2k_like(z, k) * term_pow * (1.0 / (2.0 * k * (2.0 * k - 1.0)));
        tail = tail + t;
        if (to_double(num::abs_value(t)) <
            std::pow(10.0, -digits - 2) * (1.0 + to_double(num::abs_value(tail))))
            break;
        term_pow = term_pow * w2;
    }
    return res + tail - acc;
}

/// ln(sin(pi z)) suitable for arguments with large imaginary part.
template <class C>
C ln_sin_pi(C z) {
    using std::exp;
    using std::log;
    using num::make;
    double y = to_double(num::imag_part(z));
    C pi = num::pi_like(z);
    bool use_direct = num::is_mp_v<C> ? std::fabs(y) < 1.0 : std::fabs(y) < 25.0;
    if (use_direct) {
        return log(detail::sin_cpx(pi * z));
    }
    // sin(pi z) = (e^{i pi z} - e^{-i pi z}) / (2 i); keep the dominant factor in
    // log space so nothing overflows.
    C i_unit = make(z, 0.0);
    if constexpr (num::is_mp_v<C>) {
        i_unit = MpComplex(0.0, 1.0, z.prec());
    } else {
        i_unit = C(0.0, 1.0);
    }
    C ln2 = make(z, 0.6931471805599453094172321214581766);
    if constexpr (num::is_mp_v<C>) ln2 = C(MpReal::ln2(z.prec()));
    if (y > 0) {
        C w = exp(2.0 * (i_unit * (pi * z)));
        return -1.0 * (i_unit * (pi * z)) - ln2 - 0.5 * (i_unit * pi) + log(make(z, 1.0) - w);
    }
    C w = exp(-2.0 * (i_unit * (pi * z)));
    return i_unit * (pi * z) - ln2 + 0.5 * (i_unit * pi) + log(make(z, 1.0) - w);
}

/// log Gamma over a complex field, any argument away from the poles.
/// Branch is not normalized; exp() of sums of these is well defined.
template <class C>
C lngamma_any(const C& z) {
    using std::log;
    using num::make;
    if (to_double(num::real_part(z)) >= 0.5) return lngamma_pos(z);
    // reflection in log space: lnGamma(z) = ln pi - ln sin(pi z) - lnGamma(1-z)
    C pi = num::pi_like(z);
    return log(pi) - ln_sin_pi(z) - lngamma_pos(make(z, 1.0) - z);
}

/// polygamma of order n in {0,1,2,3} over any field (recurrence + asymptotic).
template <class C>
C polygamma(int n, C z) {
    using std::log;
    using num::make;
    const int digits = detail::digits_of(z);
    const double shift_to = 0.38 * digits + 6.0;
    const double fact_n = (n <= 1) ? 1.0 : (n == 2 ? 2.0 : 6.0);       // n!
    const double fact_nm1 = (n <= 1) ? 1.0 : (n == 2 ? 1.0 : 2.0);     // (n-1)!
    const double sign_n = (n % 2 == 0) ? 1.0 : -1.0;                   // (-1)^n
    // psi^(n)(z) = psi^(n)(z+1) - (-1)^n n! / z^(n+1)
    C acc = make(z, 0.0);
    int guard = 0;
    while (to_double(num::real_part(z)) < shift_to && guard++ < 100000) {
        C zp = make(z, 1.0);
        for (int i = 0; i <= n; ++i) zp = zp * z;
        acc = acc - make(z, sign_n * fact_n) / zp;
        z = z + 1.0;
    }
    C inv = make(z, 1.0) / z;
    C inv2 = inv * inv;
    const int kmax = static_cast<int>(3.2 * shift_to) + 12;
    if (n == 0) {
        C res = log(z) - 0.5 * inv;
        C t_pow = inv2;
        for (int k = 1; k <= kmax; ++k) {
            C t = detail::bern2k_like(z, k) * t_pow * (1.0 / (2.0 * k));
            res = res - t;
            if (to_double(num::abs_value(t)) <
                std::pow(10.0, -digits - 2) * (1.0 + to_double(num::abs_value(res))))
                break;
            t_pow = t_pow * inv2;
        }
        return res + acc;
    }
    // psi^(n)(z) ~ (-1)^(n-1) [ (n-1)!/z^n + n!/(2 z^(n+1))
    //                           + sum_k B_2k (2k+n-1)!/(2k)! z^-(2k+n) ]
    C zn = make(z, 1.0);
    for (int i = 0; i < n; ++i) zn = zn * inv;
    C res = make(z, fact_nm1) * zn + make(z, 0.5 * fact_n) * (zn * inv);
    C t_pow = zn * inv2;
    for (int k = 1; k <= kmax; ++k) {
        double c = 1.0;
        for (int j = 2 * k + 1; j <= 2 * k + n - 1; ++j) c *= j;
        C t = detail::bern2k_like(z, k) * t_pow * c;
        res = res + t;
        if (to_double(num::abs_value(t)) <
            std::pow(10.0, -digits - 2) * (1.0 + to_double(num::abs_value(res))))
            break;
        t_pow = t_pow * inv2;
    }
    return make(z, -sign_n) * res + acc;
}

// ---------------------------------------------------------------------------
// incomplete gamma
// ---------------------------------------------------------------------------

/// Upper incomplete gamma, a > 0, b >= 0; relative accuracy ~1e-14.
double incomplete_gamma(double a, double b);

/// Upper incomplete gamma extended to any real non-pole a (requires b > 0
/// when a <= 0), by downward recurrence from a positive first parameter.
double incomplete_gamma_any(double a, double b);

// ---------------------------------------------------------------------------
// Mittag-Leffler
// ---------------------------------------------------------------------------

struct MlResult {
    double value;
    bool accuracy_warning;
};

/// Two-parameter Mittag-Leffler E_{a,b}(x) for a, b > 0, real x.
/// Power series with precision escalation for negative arguments; algebraic
/// asymptotic expansion deep on the negative axis.
MlResult mittag_leffler_ex(double a, double b, double x);
double mittag_leffler(double a, double b, double x);

/// Negative-parameter values E_{a,a}(x) for -1 < a < 0, defined through the
/// Laplace-transform pair they satisfy; valid for x >= 0.
double mittag_leffler_negative_params(double a, double b, double x);

/// n-th term of the formal series sum x^n / Gamma(n a + b) (any real a, b).
double ml_series_term(double a, double b, double x, int n);

} // namespace levyscale::sf
