#pragma once

#include "levyscale/scalar.hpp"

namespace levyscale {

/// Value plus first three derivatives, propagated by the chain rule.
/// Gives closed-form derivatives of every Laplace-exponent component without
/// transcribing second and third derivative formulas by hand.
template <class C>
struct Jet {
    C f, d1, d2, d3;

    static Jet variable(const C& z) {
        return {z, num::make(z, 1.0), num::make(z, 0.0), num::make(z, 0.0)};
    }
    static Jet constant(const C& v) {
        return {v, num::make(v, 0.0), num::make(v, 0.0), num::make(v, 0.0)};
    }
};

template <class C>
Jet<C> operator+(const Jet<C>& a, const Jet<C>& b) {
    return {a.f + b.f, a.d1 + b.d1, a.d2 + b.d2, a.d3 + b.d3};
}

template <class C>
Jet<C> operator-(const Jet<C>& a, const Jet<C>& b) {
    return {a.f - b.f, a.d1 - b.d1, a.d2 - b.d2, a.d3 - b.d3};
}

template <class C>
Jet<C> operator-(const Jet<C>& a) {
    return {-a.f, -a.d1, -a.d2, -a.d3};
}

template <class C>
Jet<C> operator*(const Jet<C>& a, const Jet<C>& b) {
    return {a.f * b.f,
            a.d1 * b.f + a.f * b.d1,
            a.d2 * b.f + 2.0 * (a.d1 * b.d1) + a.f * b.d2,
            a.d3 * b.f + 3.0 * (a.d2 * b.d1) + 3.0 * (a.d1 * b.d2) + a.f * b.d3};
}

template <class C>
Jet<C> operator*(double s, const Jet<C>& a) {
    return {s * a.f, s * a.d1, s * a.d2, s * a.d3};
}

template <class C>
Jet<C> operator+(const Jet<C>& a, double s) {
    Jet<C> r = a;
    r.f = r.f + s;
    return r;
}

template <class C>
Jet<C> operator-(const Jet<C>& a, double s) {
    return a + (-s);
}

/// Compose outer-function derivatives (g0..g3 evaluated at u.f) with an inner jet.
template <class C>
Jet<C> compose(const C& g0, const C& g1, const C& g2, const C& g3, const Jet<C>& u) {
    return {g0,
            g1 * u.d1,
            g2 * (u.d1 * u.d1) + g1 * u.d2,
            g3 * (u.d1 * u.d1 * u.d1) + 3.0 * (g2 * (u.d1 * u.d2)) + g1 * u.d3};
}

template <class C>
Jet<C> reciprocal(const Jet<C>& u) {
    C one = num::make(u.f, 1.0);
    C g0 = one / u.f;
    C g1 = -g0 * g0;          // -u^-2
    C g2 = -2.0 * (g1 * g0);  // 2 u^-3
    C g3 = -3.0 * (g2 * g0);  // -6 u^-4
    return compose(g0, g1, g2, g3, u);
}

template <class C>
Jet<C> operator/(const Jet<C>& a, const Jet<C>& b) {
    return a * reciprocal(b);
}

template <class C>
Jet<C> jexp(const Jet<C>& u) {
    using std::exp;
    C e = exp(u.f);
    return compose(e, e, e, e, u);
}

template <class C>
Jet<C> jlog(const Jet<C>& u) {
    using std::log;
    C one = num::make(u.f, 1.0);
    C g1 = one / u.f;
    C g2 = -g1 * g1;
    C g3 = -2.0 * (g2 * g1);
    return compose(log(u.f), g1, g2, g3, u);
}

/// u^a for constant real exponent a.
template <class C>
Jet<C> jpow(const Jet<C>& u, double a) {
    using std::pow;
    C g0 = pow(u.f, a);
    C inv = num::make(u.f, 1.0) / u.f;
    C g1 = a * (g0 * inv);
    C g2 = (a - 1.0) * (g1 * inv);
    C g3 = (a - 2.0) * (g2 * inv);
    return compose(g0, g1, g2, g3, u);
}

template <class C>
Jet<C> jsqrt(const Jet<C>& u) {
    using std::sqrt;
    C g0 = sqrt(u.f);
    C half = num::make(u.f, 0.5);
    C inv = num::make(u.f, 1.0) / u.f;
    C g1 = half * (g0 * inv);           // 1/2 u^-1/2
    C g2 = -0.5 * (g1 * inv);           // -1/4 u^-3/2
    C g3 = -1.5 * (g2 * inv);           // 3/8 u^-5/2
    return compose(g0, g1, g2, g3, u);
}

/// coth(u); d/dx coth = 1 - coth^2.
template <class C>
Jet<C> jcoth(const Jet<C>& u) {
    C c = coth(u.f);
    C one = num::make(u.f, 1.0);
    C g1 = one - c * c;
    C g2 = -2.0 * (c * g1);
    C g3 = -2.0 * (g1 * g1) - 2.0 * (c * g2);
    return compose(c, g1, g2, g3, u);
}

/// cot(u); d/dx cot = -(1 + cot^2).
template <class C>
Jet<C> jcot(const Jet<C>& u) {
    using std::tan;
    C c = num::make(u.f, 1.0) / tan(u.f);
    C one = num::make(u.f, 1.0);
    C g1 = -(one + c * c);
    C g2 = -2.0 * (c * g1);
    C g3 = -2.0 * (g1 * g1) - 2.0 * (c * g2);
    return compose(c, g1, g2, g3, u);
}

} // namespace levyscale
