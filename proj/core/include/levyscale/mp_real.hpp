#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "levyscale/precision.hpp"

namespace levyscale {

/// Arbitrary-precision real number: a thin RAII wrapper over an mpfr_t with
/// an explicit per-value mantissa size (binary exponent, binary mantissa).
/// Binary operations produce a result at the larger operand precision;
/// double operands are treated as exact 53-bit values.
class MpReal {
public:
    MpReal() { mpfr_init2(v_, 53); mpfr_set_zero(v_, 1); }
    explicit MpReal(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    MpReal(double d, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, d, MPFR_RNDN); }
    MpReal(long n, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, n, MPFR_RNDN); }

    MpReal(const MpReal& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    MpReal(MpReal&& o) noexcept {
        mpfr_init2(v_, 53);
        mpfr_swap(v_, o.v_);
    }
    MpReal& operator=(const MpReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    MpReal& operator=(MpReal&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~MpReal() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    /// Same-precision constant factory.
    MpReal make(double d) const { return MpReal(d, prec()); }

    std::string str(int digits10) const;

    // -- arithmetic ---------------------------------------------------------
    friend MpReal operator-(const MpReal& a) {
        MpReal r(a.prec());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend MpReal operator+(const MpReal& a, const MpReal& b) {
        MpReal r(std::max(a.prec(), b.prec()));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend MpReal operator-(const MpReal& a, const MpReal& b) {
        MpReal r(std::max(a.prec(), b.prec()));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend MpReal operator*(const MpReal& a, const MpReal& b) {
        MpReal r(std::max(a.prec(), b.prec()));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend MpReal operator/(const MpReal& a, const MpReal& b) {
        MpReal r(std::max(a.prec(), b.prec()));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend MpReal operator+(const MpReal& a, double b) {
        MpReal r(a.prec());
        mpfr_add_d(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend MpReal operator+(double a, const MpReal& b) { return b + a; }
    friend MpReal operator-(const MpReal& a, double b) {
        MpReal r(a.prec());
        mpfr_sub_d(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend MpReal operator-(double a, const MpReal& b) {
        MpReal r(b.prec());
        mpfr_d_sub(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }
    friend MpReal operator*(const MpReal& a, double b) {
        MpReal r(a.prec());
        mpfr_mul_d(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend MpReal operator*(double a, const MpReal& b) { return b * a; }
    friend MpReal operator/(const MpReal& a, double b) {
        MpReal r(a.prec());
        mpfr_div_d(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend MpReal operator/(double a, const MpReal& b) {
        MpReal r(b.prec());
        mpfr_d_div(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }

    MpReal& operator+=(const MpReal& b) { mpfr_add(v_, v_, b.v_, MPFR_RNDN); return *this; }
    MpReal& operator-=(const MpReal& b) { mpfr_sub(v_, v_, b.v_, MPFR_RNDN); return *this; }
    MpReal& operator*=(const MpReal& b) { mpfr_mul(v_, v_, b.v_, MPFR_RNDN); return *this; }
    MpReal& operator/=(const MpReal& b) { mpfr_div(v_, v_, b.v_, MPFR_RNDN); return *this; }
    MpReal& operator*=(double b) { mpfr_mul_d(v_, v_, b, MPFR_RNDN); return *this; }

    // -- comparisons --------------------------------------------------------
    friend bool operator<(const MpReal& a, const MpReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const MpReal& a, const MpReal& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const MpReal& a, const MpReal& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const MpReal& a, const MpReal& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const MpReal& a, const MpReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const MpReal& a, const MpReal& b) { return !(a == b); }
    friend bool operator<(const MpReal& a, double b) { return mpfr_cmp_d(a.v_, b) < 0; }
    friend bool operator>(const MpReal& a, double b) { return mpfr_cmp_d(a.v_, b) > 0; }
    friend bool operator<=(const MpReal& a, double b) { return mpfr_cmp_d(a.v_, b) <= 0; }
    friend bool operator>=(const MpReal& a, double b) { return mpfr_cmp_d(a.v_, b) >= 0; }
    friend bool operator<(double a, const MpReal& b) { return b > a; }
    friend bool operator>(double a, const MpReal& b) { return b < a; }

    // -- elementary functions -----------------------------------------------
#define LEVYSCALE_MPFR_UNARY(name, mpfr_name)        \
    friend MpReal name(const MpReal& a) {            \
        MpReal r(a.prec());                          \
        mpfr_name(r.v_, a.v_, MPFR_RNDN);            \
        return r;                                    \
    }
    LEVYSCALE_MPFR_UNARY(sqrt, mpfr_sqrt)
    LEVYSCALE_MPFR_UNARY(exp, mpfr_exp)
    LEVYSCALE_MPFR_UNARY(log, mpfr_log)
    LEVYSCALE_MPFR_UNARY(log10, mpfr_log10)
    LEVYSCALE_MPFR_UNARY(sin, mpfr_sin)
    LEVYSCALE_MPFR_UNARY(cos, mpfr_cos)
    LEVYSCALE_MPFR_UNARY(tan, mpfr_tan)
    LEVYSCALE_MPFR_UNARY(sinh, mpfr_sinh)
    LEVYSCALE_MPFR_UNARY(cosh, mpfr_cosh)
    LEVYSCALE_MPFR_UNARY(tanh, mpfr_tanh)
    LEVYSCALE_MPFR_UNARY(coth, mpfr_coth)
    LEVYSCALE_MPFR_UNARY(abs, mpfr_abs)
    LEVYSCALE_MPFR_UNARY(fabs, mpfr_abs)
    LEVYSCALE_MPFR_UNARY(floor, mpfr_floor)
    LEVYSCALE_MPFR_UNARY(round, mpfr_round)
    LEVYSCALE_MPFR_UNARY(tgamma, mpfr_gamma)
    LEVYSCALE_MPFR_UNARY(lgamma_abs, mpfr_lngamma) // valid for positive arguments
    LEVYSCALE_MPFR_UNARY(digamma, mpfr_digamma)
    LEVYSCALE_MPFR_UNARY(expm1, mpfr_expm1)
    LEVYSCALE_MPFR_UNARY(log1p, mpfr_log1p)
#undef LEVYSCALE_MPFR_UNARY

    friend MpReal pow(const MpReal& a, const MpReal& b) {
        MpReal r(std::max(a.prec(), b.prec()));
        mpfr_pow(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend MpReal pow(const MpReal& a, double b) { return pow(a, MpReal(b, a.prec())); }
    friend MpReal pow(const MpReal& a, long n) {
        MpReal r(a.prec());
        mpfr_pow_si(r.v_, a.v_, n, MPFR_RNDN);
        return r;
    }
    friend MpReal atan2(const MpReal& y, const MpReal& x) {
        MpReal r(std::max(y.prec(), x.prec()));
        mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
        return r;
    }
    friend MpReal hypot(const MpReal& x, const MpReal& y) {
        MpReal r(std::max(y.prec(), x.prec()));
        mpfr_hypot(r.v_, x.v_, y.v_, MPFR_RNDN);
        return r;
    }
    friend MpReal fmax(const MpReal& a, const MpReal& b) { return a >= b ? a : b; }
    friend MpReal fmin(const MpReal& a, const MpReal& b) { return a <= b ? a : b; }

    static MpReal pi(mpfr_prec_t prec) {
        MpReal r(prec);
        mpfr_const_pi(r.raw(), MPFR_RNDN);
        return r;
    }
    static MpReal ln2(mpfr_prec_t prec) {
        MpReal r(prec);
        mpfr_const_log2(r.raw(), MPFR_RNDN);
        return r;
    }
    static MpReal ln10(mpfr_prec_t prec) { return log(MpReal(10.0, prec)); }

private:
    mpfr_t v_;
};

inline double to_double(const MpReal& x) { return x.to_double(); }
inline double to_double(double x) { return x; }

} // namespace levyscale
