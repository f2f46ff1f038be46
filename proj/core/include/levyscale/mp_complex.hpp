#pragma once

#include <complex>

#include "levyscale/mp_real.hpp"

namespace levyscale {

/// Arbitrary-precision complex value composed from two MpReal parts.
class MpComplex {
public:
    MpComplex() = default;
    explicit MpComplex(mpfr_prec_t prec) : re_(prec), im_(prec) {}
    MpComplex(MpReal re, MpReal im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit MpComplex(MpReal re) : re_(std::move(re)), im_(re_.prec()) {}
    MpComplex(double re, double im, mpfr_prec_t prec) : re_(re, prec), im_(im, prec) {}
    MpComplex(const std::complex<double>& z, mpfr_prec_t prec)
        : re_(z.real(), prec), im_(z.imag(), prec) {}

    const MpReal& real() const { return re_; }
    const MpReal& imag() const { return im_; }
    MpReal& real() { return re_; }
    MpReal& imag() { return im_; }
    mpfr_prec_t prec() const { return std::max(re_.prec(), im_.prec()); }
    std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

    MpComplex make(double re, double im = 0.0) const {
        return MpComplex(re, im, prec());
    }

    friend MpComplex operator-(const MpComplex& a) { return {-a.re_, -a.im_}; }
    friend MpComplex operator+(const MpComplex& a, const MpComplex& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend MpComplex operator-(const MpComplex& a, const MpComplex& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend MpComplex operator*(const MpComplex& a, const MpComplex& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend MpComplex operator/(const MpComplex& a, const MpComplex& b) {
        MpReal d = b.re_ * b.re_ + b.im_ * b.im_;
        return {(a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d};
    }

    friend MpComplex operator+(const MpComplex& a, const MpReal& b) { return {a.re_ + b, a.im_}; }
    friend MpComplex operator+(const MpReal& a, const MpComplex& b) { return b + a; }
    friend MpComplex operator-(const MpComplex& a, const MpReal& b) { return {a.re_ - b, a.im_}; }
    friend MpComplex operator-(const MpReal& a, const MpComplex& b) { return {a - b.re_, -b.im_}; }
    friend MpComplex operator*(const MpComplex& a, const MpReal& b) { return {a.re_ * b, a.im_ * b}; }
    friend MpComplex operator*(const MpReal& a, const MpComplex& b) { return b * a; }
    friend MpComplex operator/(const MpComplex& a, const MpReal& b) { return {a.re_ / b, a.im_ / b}; }
    friend MpComplex operator/(const MpReal& a, const MpComplex& b) {
        MpReal d = b.re_ * b.re_ + b.im_ * b.im_;
        return {a * b.re_ / d, -(a * b.im_) / d};
    }

    friend MpComplex operator+(const MpComplex& a, double b) { return {a.re_ + b, a.im_}; }
    friend MpComplex operator+(double a, const MpComplex& b) { return b + a; }
    friend MpComplex operator-(const MpComplex& a, double b) { return {a.re_ - b, a.im_}; }
    friend MpComplex operator-(double a, const MpComplex& b) { return {a - b.re_, -b.im_}; }
    friend MpComplex operator*(const MpComplex& a, double b) { return {a.re_ * b, a.im_ * b}; }
    friend MpComplex operator*(double a, const MpComplex& b) { return b * a; }
    friend MpComplex operator/(const MpComplex& a, double b) { return {a.re_ / b, a.im_ / b}; }
    friend MpComplex operator/(double a, const MpComplex& b) {
        MpReal d = b.re_ * b.re_ + b.im_ * b.im_;
        return {a * b.re_ / d, -(a * b.im_) / d};
    }

    MpComplex& operator+=(const MpComplex& b) { re_ += b.re_; im_ += b.im_; return *this; }
    MpComplex& operator-=(const MpComplex& b) { re_ -= b.re_; im_ -= b.im_; return *this; }
    MpComplex& operator*=(const MpComplex& b) { *this = *this * b; return *this; }

    friend MpReal real(const MpComplex& z) { return z.re_; }
    friend MpReal imag(const MpComplex& z) { return z.im_; }
    friend MpComplex conj(const MpComplex& z) { return {z.re_, -z.im_}; }
    friend MpReal abs(const MpComplex& z) { return hypot(z.re_, z.im_); }
    friend MpReal norm(const MpComplex& z) { return z.re_ * z.re_ + z.im_ * z.im_; }
    friend MpReal arg(const MpComplex& z) { return atan2(z.im_, z.re_); }

    friend MpComplex exp(const MpComplex& z) {
        MpReal m = exp(z.re_);
        return {m * cos(z.im_), m * sin(z.im_)};
    }
    friend MpComplex log(const MpComplex& z) { return {log(abs(z)), arg(z)}; }
    friend MpComplex sqrt(const MpComplex& z);
    friend MpComplex pow(const MpComplex& z, double a);
    friend MpComplex pow(const MpComplex& z, const MpReal& a);
    friend MpComplex coth(const MpComplex& z);

private:
    MpReal re_, im_;
};

} // namespace levyscale
