#pragma once

#include <cmath>

// Compensated double-double arithmetic for accurate trigonometric phases.
// Oscillatory quadrature over [0, 1e9] needs angles like b*x known to far
// better than one ulp of the raw product, otherwise cos/sin lose all the
// accuracy the quadrature is trying to deliver.

namespace levyscale::detail {

struct DD {
    double hi = 0.0, lo = 0.0;
};

inline DD two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline DD two_prod(double a, double b) {
    double p = a * b;
    double err = std::fma(a, b, -p);
    return {p, err};
}

inline DD dd_add(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return two_sum(s.hi, s.lo);
}

inline DD dd_add(DD a, double b) {
    DD s = two_sum(a.hi, b);
    s.lo += a.lo;
    return two_sum(s.hi, s.lo);
}

inline DD dd_mul(DD a, double b) {
    DD p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return two_sum(p.hi, p.lo);
}

inline DD dd_mul(double a, double b) { return two_prod(a, b); }

inline DD dd_neg(DD a) { return {-a.hi, -a.lo}; }

// 2*pi split into high/low doubles.
inline constexpr double TWO_PI_HI = 6.283185307179586476925286766559;
inline constexpr double TWO_PI_LO = 2.4492935982947063545e-16;

/// Reduce a double-double angle modulo 2*pi into roughly [-pi, pi].
inline double dd_mod_2pi(DD x) {
    double k = std::nearbyint(x.hi / TWO_PI_HI);
    if (k == 0.0) return x.hi + x.lo;
    DD r = dd_add(x, dd_neg(dd_mul(two_prod(k, TWO_PI_HI), 1.0)));
    r = dd_add(r, -k * TWO_PI_LO);
    return r.hi + r.lo;
}

/// cos/sin of an accurately-formed product a*b (each a double).
inline void cos_sin_prod(double a, double b, double& c, double& s) {
    double t = dd_mod_2pi(two_prod(a, b));
    c = std::cos(t);
    s = std::sin(t);
}

/// cos/sin of (coef * n) where n is an exact integer-valued double.
inline void cos_sin_coef_n(DD coef, double n, double& c, double& s) {
    double t = dd_mod_2pi(dd_mul(coef, n));
    c = std::cos(t);
    s = std::sin(t);
}

} // namespace levyscale::detail
