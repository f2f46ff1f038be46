#pragma once

#include <cmath>
#include <complex>
#include <type_traits>

#include "levyscale/mp_complex.hpp"
#include "levyscale/mp_real.hpp"

// Generic scalar-field helpers so the same evaluation code runs over
// double, std::complex<double>, MpReal and MpComplex.

namespace levyscale {

inline double coth(double x) {
    if (x > 20.0) return 1.0 + 2.0 * std::exp(-2.0 * x);
    if (x < -20.0) return -1.0 - 2.0 * std::exp(2.0 * x);
    return 1.0 / std::tanh(x);
}

inline std::complex<double> coth(const std::complex<double>& z) {
    // coth(x+iy) = (sinh 2x - i sin 2y) / (cosh 2x - cos 2y)
    double x2 = 2.0 * z.real();
    double y2 = 2.0 * z.imag();
    if (x2 > 350.0) return {1.0, 0.0};
    if (x2 < -350.0) return {-1.0, 0.0};
    double d = std::cosh(x2) - std::cos(y2);
    return {std::sinh(x2) / d, -std::sin(y2) / d};
}

namespace num {

template <class C> struct is_real_scalar : std::false_type {};
template <> struct is_real_scalar<double> : std::true_type {};
template <> struct is_real_scalar<MpReal> : std::true_type {};
template <class C> inline constexpr bool is_real_v = is_real_scalar<C>::value;

template <class C> struct is_mp_scalar : std::false_type {};
template <> struct is_mp_scalar<MpReal> : std::true_type {};
template <> struct is_mp_scalar<MpComplex> : std::true_type {};
template <class C> inline constexpr bool is_mp_v = is_mp_scalar<C>::value;

template <class C> struct complex_of { using type = C; };
template <> struct complex_of<double> { using type = std::complex<double>; };
template <> struct complex_of<MpReal> { using type = MpComplex; };
template <class C> using complex_of_t = typename complex_of<C>::type;

template <class C> struct real_of { using type = C; };
template <> struct real_of<std::complex<double>> { using type = double; };
template <> struct real_of<MpComplex> { using type = MpReal; };
template <class C> using real_of_t = typename real_of<C>::type;

// Same-kind constant factory: mp scalars inherit the precision of `like`.
inline double make(const double&, double v) { return v; }
inline std::complex<double> make(const std::complex<double>&, double v) { return {v, 0.0}; }
inline MpReal make(const MpReal& like, double v) { return MpReal(v, like.prec()); }
inline MpComplex make(const MpComplex& like, double v) { return MpComplex(v, 0.0, like.prec()); }

inline double pi_like(const double&) { return M_PI; }
inline std::complex<double> pi_like(const std::complex<double>&) { return {M_PI, 0.0}; }
inline MpReal pi_like(const MpReal& like) { return MpReal::pi(like.prec()); }
inline MpComplex pi_like(const MpComplex& like) {
    return MpComplex(MpReal::pi(like.prec()), MpReal(like.prec()));
}

// Lift a double-precision complex constant into the target complex field.
inline std::complex<double> lift_c(const std::complex<double>&, std::complex<double> v) {
    return v;
}
inline MpComplex lift_c(const MpComplex& like, std::complex<double> v) {
    return MpComplex(v, like.prec());
}

// Promote a real scalar into its complex field.
inline std::complex<double> to_complex_field(const double& x) { return {x, 0.0}; }
inline std::complex<double> to_complex_field(const std::complex<double>& x) { return x; }
inline MpComplex to_complex_field(const MpReal& x) { return MpComplex(x); }
inline MpComplex to_complex_field(const MpComplex& x) { return x; }

inline double real_part(const double& x) { return x; }
inline double real_part(const std::complex<double>& x) { return x.real(); }
inline MpReal real_part(const MpReal& x) { return x; }
inline MpReal real_part(const MpComplex& x) { return x.real(); }

inline double imag_part(const double&) { return 0.0; }
inline double imag_part(const std::complex<double>& x) { return x.imag(); }
inline MpReal imag_part(const MpReal& x) { return MpReal(0.0, x.prec()); }
inline MpReal imag_part(const MpComplex& x) { return x.imag(); }

inline double abs_value(const double& x) { return std::fabs(x); }
inline double abs_value(const std::complex<double>& x) { return std::abs(x); }
inline MpReal abs_value(const MpReal& x) { return abs(x); }
inline MpReal abs_value(const MpComplex& x) { return abs(x); }

} // namespace num
} // namespace levyscale
