#pragma once

#include <complex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "levyscale/errors.hpp"
#include "levyscale/jet.hpp"
#include "levyscale/scalar.hpp"
#include "levyscale/special.hpp"

namespace levyscale {

// ---------------------------------------------------------------------------
// component catalog
// ---------------------------------------------------------------------------

struct GaussianPart {
    double sigma = 0.0; // psi += sigma^2 z^2 / 2
};

struct DriftPart {
    double mu = 0.0; // psi += mu z
};

/// psi += c Gamma(-alpha) [ (z+lambda)^alpha - lambda^alpha - z alpha lambda^(alpha-1) ]
struct TemperedStablePart {
    double c = 1.0;
    double lambda = 1.0;
    double alpha = 0.5; // in (-inf, 2) \ {0, 1}
};

/// psi += c Gamma(-alpha) z^alpha
struct StablePart {
    double c = 1.0;
    double alpha = 1.5; // in (0, 2) \ {1}
};

/// Jump of size -a at rate c: psi += c (e^{-a z} - 1)
struct AtomPart {
    double c = 1.0;
    double a = 1.0;
};

/// Exponential jump density shifted below -a (total rate c, decay `rate`):
/// psi += c [ rate e^{-a z} / (z + rate) - 1 ]
struct ShiftedExpPart {
    double c = 1.0;
    double a = 1.0;
    double rate = 1.0;
};

struct RationalTerm {
    std::complex<double> a;   // density coefficient
    std::complex<double> rho; // Re(rho) > 0
    int m = 1;                // polynomial order + 1
};

/// Jump density sum_j a_j |x|^(m_j - 1) e^(rho_j x) on x < 0:
/// psi += sum_j a_j (m_j-1)! [ (rho_j + z)^(-m_j) - rho_j^(-m_j) ]
/// The term list must be closed under conjugation so the density is real.
struct RationalPart {
    std::vector<RationalTerm> terms;
};

/// Meromorphic family, lambda in {3/2, 5/2}:
/// psi += (-1)^(lambda-1/2) c [ u^(lambda-1) coth(pi sqrt(u)) - const ], u = alpha + z/beta
struct ThetaPart {
    double c = 1.0;
    double alpha = 1.0;
    double beta = 1.0;
    double lambda = 1.5;
};

/// Meromorphic family, lambda in (1,2) u (2,3):
/// psi += c [ B(1 + alpha + z/beta, 1 - lambda) - B(1 + alpha, 1 - lambda) ]
struct BetaPart {
    double c = 1.0;
    double alpha = 1.0;
    double beta = 1.0;
    double lambda = 1.5;
};

using JumpComponent = std::variant<GaussianPart, DriftPart, TemperedStablePart, StablePart,
                                   AtomPart, ShiftedExpPart, RationalPart, ThetaPart, BetaPart>;

struct Model {
    std::vector<JumpComponent> components;
    std::string label;
};

enum class Variation { Bounded, Unbounded };

struct PathClass {
    Variation variation = Variation::Unbounded;
    std::optional<double> delta; // decomposition drift, present iff bounded
    bool creeps_down = false;    // iff sigma > 0
};

// ---------------------------------------------------------------------------
// evaluation (templated over double / complex<double> / MpReal / MpComplex)
// ---------------------------------------------------------------------------

namespace detail {

constexpr double kPoleRelTol = 1e-12;

template <class C>
void check_pole(const C& z, double pole_re, double pole_im, const char* what) {
    double scale = std::max(1.0, std::hypot(pole_re, pole_im));
    double dre = to_double(num::real_part(z)) - pole_re;
    double dim = to_double(num::imag_part(z)) - pole_im;
    if (std::hypot(dre, dim) < kPoleRelTol * scale)
        throw DomainError(std::string("evaluation point within 1e-12 of a pole of ") + what);
}

// w^(lambda-1) coth(pi sqrt(w)) with the analytic continuation across w < 0
// used on the real line between consecutive poles.
template <class C>
C theta_core(const C& w, double lambda) {
    using std::sqrt;
    C pi = num::pi_like(w);
    if constexpr (num::is_real_v<C>) {
        if (w >= 0.0) {
            // removable limit: s coth(pi s) -> 1/pi, s^3 coth(pi s) -> 0
            if (to_double(w) == 0.0) return num::make(w, lambda < 2.0 ? 1.0 / M_PI : 0.0);
            C s = sqrt(w);
            C base = coth(pi * s);
            return lambda < 2.0 ? s * base : (s * s * s) * base;
        }
        using std::cos;
        using std::sin;
        C t = sqrt(-w);
        C ct = cos(pi * t) / sin(pi * t);
        return lambda < 2.0 ? t * ct : -1.0 * ((t * t * t) * ct);
    } else {
        C s = sqrt(w);
        C base = coth(pi * s);
        C v = s * base;
        if (lambda < 2.0) return v;
        return (s * s) * v;
    }
}

template <class C>
Jet<C> theta_core_jet(const Jet<C>& w, double lambda) {
    C pi = num::pi_like(w.f);
    if constexpr (num::is_real_v<C>) {
        if (to_double(w.f) < 0.0) {
            Jet<C> t = jsqrt(-w);
            Jet<C> ct = jcot(Jet<C>{pi * t.f, pi * t.d1, pi * t.d2, pi * t.d3});
            Jet<C> tc = t * ct;
            if (lambda < 2.0) return tc;
            return -(t * t * tc);
        }
    }
    Jet<C> s = jsqrt(w);
    Jet<C> base = jcoth(Jet<C>{pi * s.f, pi * s.d1, pi * s.d2, pi * s.d3});
    Jet<C> v = s * base;
    if (lambda < 2.0) return v;
    return (s * s) * v;
}

// Beta function value of B(u, y) with fixed real y, over any field.
template <class C>
C beta_fn(const C& u, double y) {
    using std::exp;
    if constexpr (num::is_real_v<C>) {
        if constexpr (std::is_same_v<C, double>) {
            auto [l1, s1] = sf::lgamma_signed(u);
            auto [l2, s2] = sf::lgamma_signed(y);
            auto [l3, s3] = sf::lgamma_signed(u + y);
            return s1 * s2 * s3 * std::exp(l1 + l2 - l3);
        } else {
            C g1 = tgamma(u);
            C g2 = tgamma(num::make(u, y));
            C g3 = tgamma(u + y);
            return g1 * g2 / g3;
        }
    } else {
        C ln = sf::lngamma_any(u) + sf::lngamma_any(num::make(u, y)) -
               sf::lngamma_any(u + num::make(u, y));
        return exp(ln);
    }
}

// Jet of B(u(z), y) given the jet of u; log-derivatives via polygamma.
template <class C>
Jet<C> beta_fn_jet(const Jet<C>& u, double y) {
    C b = beta_fn(u.f, y);
    C yy = num::make(u.f, y);
    C l1 = sf::polygamma(0, u.f) - sf::polygamma(0, u.f + yy);
    C l2 = sf::polygamma(1, u.f) - sf::polygamma(1, u.f + yy);
    C l3 = sf::polygamma(2, u.f) - sf::polygamma(2, u.f + yy);
    // derivatives of B = exp(lnB): B' = B l1, B'' = B (l1^2 + l2), ...
    C g0 = b;
    C g1 = b * l1;
    C g2 = b * (l1 * l1 + l2);
    C g3 = b * (l1 * l1 * l1 + 3.0 * (l1 * l2) + l3);
    return compose(g0, g1, g2, g3, u);
}

template <class C>
C pow_int_neg(const C& base, int m) { // base^-m, m >= 1
    C inv = num::make(base, 1.0) / base;
    C r = inv;
    for (int i = 1; i < m; ++i) r = r * inv;
    return r;
}

} // namespace detail

/// Laplace exponent contribution of one component.
template <class C>
C psi_component(const JumpComponent& comp, const C& z) {
    using std::exp;
    using std::pow;
    return std::visit(
        [&](const auto& c) -> C {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, GaussianPart>) {
                return (0.5 * c.sigma * c.sigma) * (z * z);
            } else if constexpr (std::is_same_v<T, DriftPart>) {
                return c.mu * z;
            } else if constexpr (std::is_same_v<T, TemperedStablePart>) {
                double g = std::tgamma(-c.alpha) * c.c;
                C zl = z + c.lambda;
                double la = std::pow(c.lambda, c.alpha);
                double la1 = c.alpha * std::pow(c.lambda, c.alpha - 1.0);
                return g * (pow(zl, c.alpha) - la - (z * la1));
            } else if constexpr (std::is_same_v<T, StablePart>) {
                double g = std::tgamma(-c.alpha) * c.c;
                return g * pow(z, c.alpha);
            } else if constexpr (std::is_same_v<T, AtomPart>) {
                return c.c * (exp((-c.a) * z) - 1.0);
            } else if constexpr (std::is_same_v<T, ShiftedExpPart>) {
                detail::check_pole(z, -c.rate, 0.0, "shifted_exponential");
                return c.c * ((c.rate * exp((-c.a) * z)) / (z + c.rate) - 1.0);
            } else if constexpr (std::is_same_v<T, RationalPart>) {
                using CC = num::complex_of_t<C>;
                CC zc = num::to_complex_field(z);
                CC acc = num::make(zc, 0.0);
                for (const auto& t : c.terms) {
                    detail::check_pole(z, -t.rho.real(), -t.rho.imag(), "rational component");
                    CC rhoc = num::lift_c(zc, t.rho);
                    CC ac = num::lift_c(zc, t.a);
                    double fact = 1.0;
                    for (int i = 2; i < t.m; ++i) fact *= i;
                    acc += (fact * ac) *
                           (detail::pow_int_neg(rhoc + zc, t.m) - detail::pow_int_neg(rhoc, t.m));
                }
                if constexpr (num::is_real_v<C>) {
                    return num::real_part(acc);
                } else {
                    return acc;
                }
            } else if constexpr (std::is_same_v<T, ThetaPart>) {
                for (int j = 1; j <= 4; ++j)
                    detail::check_pole(z, -c.beta * (c.alpha + j * j), 0.0, "theta component");
                double eps = c.lambda < 2.0 ? -1.0 : 1.0;
                C u = num::make(z, c.alpha) + z * (1.0 / c.beta);
                double const_term = [&] {
                    double s0 = std::sqrt(c.alpha);
                    double base = coth(M_PI * s0);
                    return c.lambda < 2.0 ? s0 * base : s0 * s0 * s0 * base;
                }();
                C cterm = num::make(z, const_term);
                return (eps * c.c) * (detail::theta_core(u, c.lambda) - cterm);
            } else {
                const BetaPart& bp = c;
                for (int j = 1; j <= 4; ++j)
                    detail::check_pole(z, -bp.beta * (bp.alpha + j), 0.0, "beta component");
                C u = num::make(z, 1.0 + bp.alpha) + z * (1.0 / bp.beta);
                C b = detail::beta_fn(u, 1.0 - bp.lambda);
                C b0 = detail::beta_fn(num::make(z, 1.0 + bp.alpha), 1.0 - bp.lambda);
                return bp.c * (b - b0);
            }
        },
        comp);
}

/// Laplace exponent psi(z) = sum over components.
template <class C>
C psi(const Model& m, const C& z) {
    C acc = num::make(z, 0.0);
    for (const auto& comp : m.components) acc = acc + psi_component(comp, z);
    return acc;
}

/// Jet of the Laplace exponent (value and first three derivatives).
template <class C>
Jet<C> psi_jet(const Model& m, const C& z) {
    using std::exp;
    Jet<C> zj = Jet<C>::variable(z);
    Jet<C> acc = Jet<C>::constant(num::make(z, 0.0));
    for (const auto& comp : m.components) {
        std::visit(
            [&](const auto& c) {
                using T = std::decay_t<decltype(c)>;
                if constexpr (std::is_same_v<T, GaussianPart>) {
                    acc = acc + (0.5 * c.sigma * c.sigma) * (zj * zj);
                } else if constexpr (std::is_same_v<T, DriftPart>) {
                    acc = acc + c.mu * zj;
                } else if constexpr (std::is_same_v<T, TemperedStablePart>) {
                    double g = std::tgamma(-c.alpha) * c.c;
                    double la = std::pow(c.lambda, c.alpha);
                    double la1 = c.alpha * std::pow(c.lambda, c.alpha - 1.0);
                    acc = acc + g * (jpow(zj + c.lambda, c.alpha) - la - la1 * zj);
                } else if constexpr (std::is_same_v<T, StablePart>) {
                    double g = std::tgamma(-c.alpha) * c.c;
                    acc = acc + g * jpow(zj, c.alpha);
                } else if constexpr (std::is_same_v<T, AtomPart>) {
                    acc = acc + c.c * (jexp((-c.a) * zj) - 1.0);
                } else if constexpr (std::is_same_v<T, ShiftedExpPart>) {
                    acc = acc + c.c * ((c.rate * jexp((-c.a) * zj)) / (zj + c.rate) - 1.0);
                } else if constexpr (std::is_same_v<T, RationalPart>) {
                    // value path handles real/complex mixing; jets only need the
                    // complex field here
                    using CC = num::complex_of_t<C>;
                    Jet<CC> zjc = Jet<CC>::variable(num::to_complex_field(z));
                    Jet<CC> sub = Jet<CC>::constant(num::make(zjc.f, 0.0));
                    for (const auto& t : c.terms) {
                        CC rhoc = num::lift_c(zjc.f, t.rho);
                        CC ac = num::lift_c(zjc.f, t.a);
                        double fact = 1.0;
                        for (int i = 2; i < t.m; ++i) fact *= i;
                        Jet<CC> term =
                            reciprocal(zjc + Jet<CC>::constant(rhoc));
                        Jet<CC> p = term;
                        for (int i = 1; i < t.m; ++i) p = p * term;
                        CC cst = detail::pow_int_neg(rhoc, t.m);
                        sub = sub + Jet<CC>{(fact * ac) * (p.f - cst), (fact * ac) * p.d1,
                                            (fact * ac) * p.d2, (fact * ac) * p.d3};
                    }
                    if constexpr (num::is_real_v<C>) {
                        acc = acc + Jet<C>{num::real_part(sub.f), num::real_part(sub.d1),
                                           num::real_part(sub.d2), num::real_part(sub.d3)};
                    } else {
                        acc = acc + sub;
                    }
                } else if constexpr (std::is_same_v<T, ThetaPart>) {
                    double eps = c.lambda < 2.0 ? -1.0 : 1.0;
                    Jet<C> u = (1.0 / c.beta) * zj + c.alpha;
                    double s0 = std::sqrt(c.alpha);
                    double base = coth(M_PI * s0);
                    double const_term = c.lambda < 2.0 ? s0 * base : s0 * s0 * s0 * base;
                    acc = acc + (eps * c.c) * (detail::theta_core_jet(u, c.lambda) - const_term);
                } else {
                    const BetaPart& bp = c;
                    Jet<C> u = (1.0 / bp.beta) * zj + (1.0 + bp.alpha);
                    C b0 = detail::beta_fn(num::make(z, 1.0 + bp.alpha), 1.0 - bp.lambda);
                    Jet<C> bj = detail::beta_fn_jet(u, 1.0 - bp.lambda);
                    acc = acc + bp.c * (bj - Jet<C>::constant(b0));
                }
            },
            comp);
    }
    return acc;
}

/// Exact n-th derivative (n = 1..3) of the Laplace exponent.
template <class C>
C psi_derivative(const Model& m, const C& z, int n) {
    if (n < 1 || n > 3) throw ConfigError("psi_derivative: n must be 1, 2 or 3");
    Jet<C> j = psi_jet(m, z);
    return n == 1 ? j.d1 : (n == 2 ? j.d2 : j.d3);
}

// ---------------------------------------------------------------------------
// structure queries
// ---------------------------------------------------------------------------

/// Total Gaussian coefficient.
double model_sigma(const Model& m);

/// psi'(0+), possibly -infinity.
double psi_prime_zero(const Model& m);

/// Path variation/creeping classification and the bounded-variation drift.
PathClass classify(const Model& m);

/// Total jump mass Pi(-inf, 0); +infinity for infinite activity.
double jump_mass(const Model& m);

/// Levy tail Pi(-inf, -v) for v > 0 (atoms included as steps).
double levy_tail(const Model& m, double v);

/// Levy density pi(x) for x < 0. Throws if an atom sits at x.
double levy_density(const Model& m, double x);

/// Abscissae of atom components (positive magnitudes).
std::vector<double> atom_positions(const Model& m);

struct BoundaryValues {
    double W0;      // W(0+)
    double W0prime; // W'(0+), may be +infinity
};

/// Boundary behaviour of the q-scale function at 0+.
BoundaryValues boundary_values(const Model& m, double q);

/// Largest root of psi = q, q >= 0: bracketing plus safeguarded Newton,
/// |psi(Phi) - q| <= 1e-13 max(1, q).
double phi_q(const Model& m, double q);

/// Same at arbitrary precision (Newton refinement of the double root).
MpReal phi_q_mp(const Model& m, double q, mpfr_prec_t prec);

struct ValidationIssue {
    std::string what;
};

/// Structural invariants: nonempty, psi(0) = 0, convexity on a sample grid,
/// conjugate closure of rational terms, nonnegative sampled jump density.
std::vector<ValidationIssue> validate(const Model& m);

} // namespace levyscale
