#include "levyscale/mp_complex.hpp"

namespace levyscale {

MpComplex sqrt(const MpComplex& z) {
    mpfr_prec_t p = z.prec();
    if (z.re_.sign() == 0 && z.im_.sign() == 0) return MpComplex(p);
    MpReal r = abs(z);
    // principal branch; w = sqrt((|z| + |Re z|)/2) is the larger component
    MpReal w = sqrt((r + abs(z.re_)) / 2.0);
    if (z.re_.sign() >= 0) {
        return {w, z.im_ / (2.0 * w)};
    }
    MpReal u = abs(z.im_) / (2.0 * w);
    if (z.im_.sign() >= 0) return {u, w};
    return {u, -w};
}

MpComplex pow(const MpComplex& z, const MpReal& a) {
    if (z.im_.sign() == 0 && z.re_.sign() > 0) {
        return MpComplex(pow(z.re_, a), MpReal(z.prec()));
    }
    return exp(MpComplex(a) * log(z));
}

MpComplex pow(const MpComplex& z, double a) {
    return pow(z, MpReal(a, z.prec()));
}

MpComplex coth(const MpComplex& z) {
    // coth(x+iy) = (sinh 2x - i sin 2y) / (cosh 2x - cos 2y)
    MpReal x2 = 2.0 * z.re_;
    MpReal y2 = 2.0 * z.im_;
    MpReal d = cosh(x2) - cos(y2);
    return {sinh(x2) / d, -sin(y2) / d};
}

} // namespace levyscale
