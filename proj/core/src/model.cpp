#include "levyscale/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace levyscale {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool finite_variation(const JumpComponent& comp) {
    return std::visit(
        [](const auto& c) -> bool {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, GaussianPart>) {
                return c.sigma == 0.0;
            } else if constexpr (std::is_same_v<T, TemperedStablePart> ||
                                 std::is_same_v<T, StablePart>) {
                return c.alpha < 1.0;
            } else if constexpr (std::is_same_v<T, ThetaPart> || std::is_same_v<T, BetaPart>) {
                return c.lambda < 2.0;
            } else {
                return true;
            }
        },
        comp);
}

// mass Pi(-inf, 0) of one component; +inf for infinite activity
double component_mass(const JumpComponent& comp) {
    return std::visit(
        [](const auto& c) -> double {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, GaussianPart> || std::is_same_v<T, DriftPart>) {
                return 0.0;
            } else if constexpr (std::is_same_v<T, TemperedStablePart>) {
                if (c.alpha > 0.0) return kInf;
                return c.c * std::tgamma(-c.alpha) * std::pow(c.lambda, c.alpha);
            } else if constexpr (std::is_same_v<T, StablePart>) {
                return kInf;
            } else if constexpr (std::is_same_v<T, AtomPart> ||
                                 std::is_same_v<T, ShiftedExpPart>) {
                return c.c;
            } else if constexpr (std::is_same_v<T, RationalPart>) {
                std::complex<double> acc = 0.0;
                for (const auto& t : c.terms) {
                    double fact = 1.0;
                    for (int i = 2; i <= t.m; ++i) fact *= (i - 1);
                    acc += t.a * fact / std::pow(t.rho, t.m);
                }
                return acc.real();
            } else {
                return kInf; // theta / beta: infinite activity
            }
        },
        comp);
}

// Gamma(m, w) for integer m >= 1, complex w: (m-1)! e^{-w} sum_{i<m} w^i/i!
std::complex<double> upper_gamma_int(int m, std::complex<double> w) {
    std::complex<double> s = 0.0;
    std::complex<double> p = 1.0;
    double fact = 1.0;
    for (int i = 0; i < m; ++i) {
        if (i > 0) {
            p *= w;
            fact *= i;
        }
        s += p / fact;
    }
    double fm = 1.0;
    for (int i = 2; i < m; ++i) fm *= i;
    return fm * std::exp(-w) * s;
}

// poles rho_j of the meromorphic families
double mero_pole(const ThetaPart& c, int j) { return c.beta * (c.alpha + double(j) * j); }
double mero_pole(const BetaPart& c, int j) { return c.beta * (c.alpha + j); }
double mero_coef(const ThetaPart& c, int j) {
    return (2.0 / M_PI) * c.c * c.beta * std::pow(double(j), 2.0 * c.lambda - 1.0);
}
double mero_coef(const BetaPart& c, int j) {
    // c beta binom(j + lambda - 2, j - 1)
    double lg = std::lgamma(j + c.lambda - 1.0) - std::lgamma(double(j)) - std::lgamma(c.lambda);
    return c.c * c.beta * std::exp(lg);
}

template <class Part>
double mero_tail(const Part& c, double v) {
    double acc = 0.0;
    for (int j = 1; j <= 400000; ++j) {
        double rho = mero_pole(c, j);
        double t = mero_coef(c, j) * std::exp(-rho * v) / rho;
        acc += t;
        if (t < 1e-18 * (acc + 1e-300) && j > 4) break;
    }
    return acc;
}

template <class Part>
double mero_density(const Part& c, double x) {
    double acc = 0.0;
    for (int j = 1; j <= 400000; ++j) {
        double t = mero_coef(c, j) * std::exp(mero_pole(c, j) * x);
        acc += t;
        if (t < 1e-18 * (acc + 1e-300) && j > 4) break;
    }
    return acc;
}

} // namespace

double model_sigma(const Model& m) {
    double s2 = 0.0;
    for (const auto& comp : m.components)
        if (const auto* g = std::get_if<GaussianPart>(&comp)) s2 += g->sigma * g->sigma;
    return std::sqrt(s2);
}

double psi_prime_zero(const Model& m) {
    double acc = 0.0;
    for (const auto& comp : m.components) {
        if (const auto* s = std::get_if<StablePart>(&comp)) {
            if (s->alpha < 1.0) return -kInf;
            continue; // alpha in (1,2): derivative vanishes at 0
        }
        Jet<double> j = psi_jet(Model{{comp}, ""}, 0.0);
        acc += j.d1;
    }
    return acc;
}

PathClass classify(const Model& m) {
    PathClass pc;
    double sigma = model_sigma(m);
    pc.creeps_down = sigma > 0.0;
    bool bounded = sigma == 0.0 &&
                   std::all_of(m.components.begin(), m.components.end(), finite_variation);
    pc.variation = bounded ? Variation::Bounded : Variation::Unbounded;
    if (bounded) {
        // X_t = delta t - S_t; delta = lim psi(z)/z as z -> inf
        double delta = 0.0;
        for (const auto& comp : m.components) {
            if (const auto* d = std::get_if<DriftPart>(&comp)) delta += d->mu;
            if (const auto* ts = std::get_if<TemperedStablePart>(&comp))
                delta += ts->c * std::tgamma(1.0 - ts->alpha) *
                         std::pow(ts->lambda, ts->alpha - 1.0);
        }
        if (delta <= 0.0)
            throw DomainError("model has monotone paths: bounded variation requires "
                              "a positive decomposition drift");
        pc.delta = delta;
    }
    return pc;
}

double jump_mass(const Model& m) {
    double acc = 0.0;
    for (const auto& comp : m.components) {
        double v = component_mass(comp);
        if (v == kInf) return kInf;
        acc += v;
    }
    return acc;
}

double levy_tail(const Model& m, double v) {
    if (!(v > 0.0)) throw DomainError("levy_tail: need v > 0");
    double acc = 0.0;
    for (const auto& comp : m.components) {
        acc += std::visit(
            [&](const auto& c) -> double {
                using T = std::decay_t<decltype(c)>;
                if constexpr (std::is_same_v<T, GaussianPart> || std::is_same_v<T, DriftPart>) {
                    return 0.0;
                } else if constexpr (std::is_same_v<T, TemperedStablePart>) {
                    return c.c * std::pow(c.lambda, c.alpha) *
                           sf::incomplete_gamma_any(-c.alpha, c.lambda * v);
                } else if constexpr (std::is_same_v<T, StablePart>) {
                    return c.c * std::pow(v, -c.alpha) / c.alpha;
                } else if constexpr (std::is_same_v<T, AtomPart>) {
                    return v <= c.a ? c.c : 0.0;
                } else if constexpr (std::is_same_v<T, ShiftedExpPart>) {
                    return v <= c.a ? c.c : c.c * std::exp(-c.rate * (v - c.a));
                } else if constexpr (std::is_same_v<T, RationalPart>) {
                    std::complex<double> s = 0.0;
                    for (const auto& t : c.terms)
                        s += t.a * upper_gamma_int(t.m, t.rho * v) / std::pow(t.rho, t.m);
                    return s.real();
                } else {
                    return mero_tail(c, v);
                }
            },
            comp);
    }
    return acc;
}

double levy_density(const Model& m, double x) {
    if (!(x < 0.0)) throw DomainError("levy_density: need x < 0");
    double acc = 0.0;
    for (const auto& comp : m.components) {
        acc += std::visit(
            [&](const auto& c) -> double {
                using T = std::decay_t<decltype(c)>;
                if constexpr (std::is_same_v<T, GaussianPart> || std::is_same_v<T, DriftPart>) {
                    return 0.0;
                } else if constexpr (std::is_same_v<T, TemperedStablePart>) {
                    return c.c * std::exp(c.lambda * x) * std::pow(-x, -1.0 - c.alpha);
                } else if constexpr (std::is_same_v<T, StablePart>) {
                    return c.c * std::pow(-x, -1.0 - c.alpha);
                } else if constexpr (std::is_same_v<T, AtomPart>) {
                    if (std::fabs(x + c.a) < 1e-12 * std::max(1.0, c.a))
                        throw DomainError("levy_density: atom at this abscissa, no density");
                    return 0.0;
                } else if constexpr (std::is_same_v<T, ShiftedExpPart>) {
                    return x < -c.a ? c.c * c.rate * std::exp(c.rate * (x + c.a)) : 0.0;
                } else if constexpr (std::is_same_v<T, RationalPart>) {
                    std::complex<double> s = 0.0;
                    for (const auto& t : c.terms)
                        s += t.a * std::pow(-x, t.m - 1.0) * std::exp(t.rho * x);
                    return s.real();
                } else if constexpr (std::is_same_v<T, BetaPart>) {
                    return c.c * c.beta * std::exp((1.0 + c.alpha) * c.beta * x) /
                           std::pow(1.0 - std::exp(c.beta * x), c.lambda);
                } else {
                    return mero_density(c, x);
                }
            },
            comp);
    }
    return acc;
}

std::vector<double> atom_positions(const Model& m) {
    std::vector<double> out;
    for (const auto& comp : m.components)
        if (const auto* a = std::get_if<AtomPart>(&comp)) out.push_back(a->a);
    std::sort(out.begin(), out.end());
    return out;
}

BoundaryValues boundary_values(const Model& m, double q) {
    PathClass pc = classify(m);
    BoundaryValues bv{};
    double sigma = model_sigma(m);
    if (pc.variation == Variation::Unbounded) {
        bv.W0 = 0.0;
        bv.W0prime = sigma > 0.0 ? 2.0 / (sigma * sigma) : kInf;
        return bv;
    }
    bv.W0 = 1.0 / *pc.delta;
    double mass = jump_mass(m);
    bv.W0prime = mass == kInf ? kInf : (mass + q) / (*pc.delta * *pc.delta);
    return bv;
}

namespace {

// safeguarded Newton on psi - q over a sign-changing bracket [lo, hi]
template <class R>
R newton_bracketed(const Model& m, R q, R lo, R hi, double rel_tol, int max_iter) {
    R x = 0.5 * (lo + hi);
    for (int it = 0; it < max_iter; ++it) {
        Jet<R> j = psi_jet(m, x);
        R f = j.f - q;
        double fd = to_double(f);
        double qd = std::max(1.0, std::fabs(to_double(q)));
        if (std::fabs(fd) <= rel_tol * qd) {
            // one more polish step when the derivative allows it
            if (to_double(j.d1) != 0.0) x = x - f / j.d1;
            return x;
        }
        if (fd > 0)
            hi = x;
        else
            lo = x;
        R step = f / j.d1;
        R cand = x - step;
        if (to_double(j.d1) <= 0.0 || cand <= lo || cand >= hi)
            cand = 0.5 * (lo + hi);
        x = cand;
    }
    return x;
}

} // namespace

double phi_q(const Model& m, double q) {
    if (q < 0.0) throw DomainError("phi_q: need q >= 0");
    double p0 = psi_prime_zero(m);
    if (q == 0.0 && p0 >= 0.0) return 0.0;
    // bracket: double theta until psi(theta) > q
    double hi = 1.0;
    int guard = 0;
    while (psi(m, hi) <= q && guard++ < 2000) hi *= 2.0;
    double lo = 0.0;
    if (q == 0.0) {
        // largest root is positive; start the bracket beyond the dip
        lo = hi;
        while (psi(m, lo) > 0.0 && guard++ < 4000) lo *= 0.5;
    }
    return newton_bracketed<double>(m, q, lo, hi, 1e-13, 200);
}

MpReal phi_q_mp(const Model& m, double q, mpfr_prec_t prec) {
    double x0 = phi_q(m, q);
    if (x0 == 0.0) return MpReal(0.0, prec);
    MpReal x(x0, prec);
    MpReal qq(q, prec);
    // quadratic convergence from the double-precision root
    for (int i = 0; i < 40; ++i) {
        Jet<MpReal> j = psi_jet(m, x);
        MpReal f = j.f - qq;
        MpReal step = f / j.d1;
        x = x - step;
        MpReal tol = pow(MpReal(2.0, prec), -(long)(prec - 6)) * fmax(abs(x), MpReal(1.0, prec));
        if (abs(step) < tol) break;
    }
    return x;
}

std::vector<ValidationIssue> validate(const Model& m) {
    std::vector<ValidationIssue> issues;
    if (m.components.empty()) {
        issues.push_back({"model has no components"});
        return issues;
    }
    for (const auto& comp : m.components) {
        if (const auto* r = std::get_if<RationalPart>(&comp)) {
            // conjugate closure: the multiset of (a, rho, m) must equal its conjugate
            for (const auto& t : r->terms) {
                bool found = false;
                for (const auto& u : r->terms) {
                    if (u.m == t.m && std::abs(u.rho - std::conj(t.rho)) <= 1e-12 &&
                        std::abs(u.a - std::conj(t.a)) <= 1e-12) {
                        found = true;
                        break;
                    }
                }
                if (!found) issues.push_back({"rational terms not closed under conjugation"});
            }
        }
    }
    if (std::fabs(psi(m, 0.0)) != 0.0) issues.push_back({"psi(0) != 0"});
    // strict convexity beyond Phi(0): sample psi'' > 0
    double start = 0.0;
    try {
        start = phi_q(m, 0.0);
    } catch (const Error&) {
        start = 0.0;
    }
    for (int i = 1; i <= 64; ++i) {
        double z = start + 1e-3 + 50.0 * i / 64.0;
        Jet<double> j = psi_jet(m, z);
        if (!(j.d2 > 0.0)) {
            issues.push_back({"psi'' not positive at z = " + std::to_string(z)});
            break;
        }
    }
    // sampled nonnegativity of the jump density (only meaningful with jumps)
    bool has_density = false;
    for (const auto& comp : m.components) {
        has_density = has_density || std::visit(
                                         [](const auto& c) {
                                             using T = std::decay_t<decltype(c)>;
                                             return !(std::is_same_v<T, GaussianPart> ||
                                                      std::is_same_v<T, DriftPart> ||
                                                      std::is_same_v<T, AtomPart>);
                                         },
                                         comp);
    }
    if (has_density) {
        auto atoms = atom_positions(m);
        for (int i = 0; i < 1000; ++i) {
            double mag = std::pow(10.0, -6.0 + 9.0 * i / 999.0); // log-spaced in (0, 1e3)
            bool near_atom = false;
            for (double a : atoms)
                if (std::fabs(mag - a) < 1e-9 * std::max(1.0, a)) near_atom = true;
            if (near_atom) continue;
            if (levy_density(m, -mag) < -1e-12) {
                issues.push_back({"jump density negative at x = -" + std::to_string(mag)});
                break;
            }
        }
    }
    return issues;
}

} // namespace levyscale
