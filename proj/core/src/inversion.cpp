#include "levyscale/inversion.hpp"

#include <gmp.h>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "levyscale/detail/dd.hpp"
#include "levyscale/detail/parallel.hpp"
#include "levyscale/fft.hpp"

namespace levyscale {

// ---------------------------------------------------------------------------
// Filon coefficient functions
// ---------------------------------------------------------------------------

namespace detail {

// A(t) = 1/t + sin(2t)/(2t^2) - 2 sin^2(t)/t^3
//      = sum_{m>=1} (-1)^(m+1) 4^(m+1) (2m) / (2m+4)! t^(2m+1)
double filon_A(double t) {
    double at = std::fabs(t);
    if (at >= 0.05) {
        double s = std::sin(t), s2 = std::sin(2.0 * t);
        return 1.0 / t + s2 / (2.0 * t * t) - 2.0 * s * s / (t * t * t);
    }
    double t2 = t * t;
    double sum = 0.0;
    double pow4 = 16.0;     // 4^(m+1)
    double fact = 720.0;    // (2m+4)!
    double tp = t * t2;     // t^(2m+1)
    double sign = 1.0;
    for (int m = 1; m <= 10; ++m) {
        double term = sign * pow4 * (2.0 * m) / fact * tp;
        sum += term;
        if (std::fabs(term) < 1e-20 * std::fabs(sum)) break;
        sign = -sign;
        pow4 *= 4.0;
        fact *= (2.0 * m + 5) * (2.0 * m + 6);
        tp *= t2;
    }
    return sum;
}

// B(t) = 2 [ (1+cos^2 t)/t^2 - sin(2t)/t^3 ]
//      = sum_{m>=0} (-1)^(m+1) 4^(m+1) (2m-1) / (2m+3)! t^(2m)
double filon_B(double t) {
    double at = std::fabs(t);
    if (at >= 0.05) {
        double c = std::cos(t), s2 = std::sin(2.0 * t);
        return 2.0 * ((1.0 + c * c) / (t * t) - s2 / (t * t * t));
    }
    double t2 = t * t;
    double sum = 0.0;
    double pow4 = 4.0;   // 4^(m+1)
    double fact = 6.0;   // (2m+3)!
    double tp = 1.0;     // t^(2m)
    double sign = -1.0;  // (-1)^(m+1), m = 0
    for (int m = 0; m <= 10; ++m) {
        double term = sign * pow4 * (2.0 * m - 1.0) / fact * tp;
        sum += term;
        if (m > 0 && std::fabs(term) < 1e-20 * std::fabs(sum)) break;
        sign = -sign;
        pow4 *= 4.0;
        fact *= (2.0 * m + 4) * (2.0 * m + 5);
        tp *= t2;
    }
    return sum;
}

// C(t) = 4 [ sin(t)/t^3 - cos(t)/t^2 ]
//      = sum_{m>=0} (-1)^m 4 (2m+2) / (2m+3)! t^(2m)
double filon_C(double t) {
    double at = std::fabs(t);
    if (at >= 0.05) {
        return 4.0 * (std::sin(t) / (t * t * t) - std::cos(t) / (t * t));
    }
    double t2 = t * t;
    double sum = 0.0;
    double fact = 6.0; // (2m+3)!
    double tp = 1.0;
    double sign = 1.0;
    for (int m = 0; m <= 10; ++m) {
        double term = sign * 4.0 * (2.0 * m + 2.0) / fact * tp;
        sum += term;
        if (m > 0 && std::fabs(term) < 1e-20 * std::fabs(sum)) break;
        sign = -sign;
        fact *= (2.0 * m + 4) * (2.0 * m + 5);
        tp *= t2;
    }
    return sum;
}

} // namespace detail

// ---------------------------------------------------------------------------
// direct composite Filon rule
// ---------------------------------------------------------------------------

double filon_cosine(const std::function<double(double)>& G, double a, double b, int N,
                    double x) {
    if (!(a < b) || N < 1) throw ConfigError("filon_cosine: need a < b and N >= 1");
    const double h = (b - a) / (2.0 * N);
    const double theta = h * x;
    double c1 = 0.0, c2 = 0.0;
    for (int n = 0; n < N; ++n) {
        double u1 = a + (2 * n + 1) * h;
        double u2 = a + (2 * n + 2) * h;
        double cs, sn;
        detail::cos_sin_prod(u1, x, cs, sn);
        c1 += G(u1) * cs;
        detail::cos_sin_prod(u2, x, cs, sn);
        c2 += G(u2) * cs;
    }
    double Ga = G(a), Gb = G(b);
    double cb, sb, ca, sa;
    detail::cos_sin_prod(b, x, cb, sb);
    detail::cos_sin_prod(a, x, ca, sa);
    double A = detail::filon_A(theta), B = detail::filon_B(theta), C = detail::filon_C(theta);
    return h * (A * (Gb * sb - Ga * sa) + B * (c2 - 0.5 * (Gb * cb - Ga * ca)) + C * c1);
}

// ---------------------------------------------------------------------------
// all-points inversion: Filon + fractional FFT
// ---------------------------------------------------------------------------

FilonResult invert_filon(const TransformFn& g, const FilonConfig& cfg) {
    if (!g.eval) throw ConfigError("invert_filon: transform has no double evaluator");
    if (!g.real_symmetric)
        throw ConfigError("invert_filon: cosine-transform route requires a real-symmetric "
                          "transform");
    if (!(cfg.c > g.analytic_halfplane))
        throw ConfigError("invert_filon: contour abscissa must exceed the analytic half-plane");
    if (cfg.n < 1 || cfg.N < 1 || cfg.Nx < 1 || !(cfg.b > 0) || !(cfg.delta_x > 0))
        throw ConfigError("invert_filon: bad grid configuration");

    const int n = cfg.n, N = cfg.N, Nx = cfg.Nx;
    FilonResult res;
    res.x.resize(Nx);
    res.f.assign(Nx, 0.0);
    for (int m = 0; m < Nx; ++m) res.x[m] = cfg.x0 + m * cfg.delta_x;

    std::vector<std::vector<double>> partial(n);
    detail::parallel_for(static_cast<std::size_t>(n), cfg.threads, [&](std::size_t j) {
        double fj0 = std::pow(static_cast<double>(j) / n, cfg.p);
        double fj1 = std::pow(static_cast<double>(j + 1) / n, cfg.p);
        const double a = cfg.b * fj0;
        const double bnd = cfg.b * fj1;
        const double h = (bnd - a) / (2.0 * N);
        const double two_h = 2.0 * h;

        std::vector<double> G(2 * N + 1);
        for (int i = 0; i <= 2 * N; ++i)
            G[i] = g.eval({cfg.c, a + i * h}).real();

        // the two oscillatory sums, all x at once
        const double alpha = two_h * cfg.delta_x;
        const detail::DD coef_x0 = detail::two_prod(two_h, cfg.x0);
        ComplexBuffer sums[2];
        for (int k = 1; k <= 2; ++k) {
            ComplexBuffer v(N);
            for (int i = 0; i < N; ++i) {
                double cs, sn;
                detail::cos_sin_coef_n(coef_x0, static_cast<double>(i), cs, sn);
                v[i] = G[2 * i + k] * std::complex<double>(cs, sn);
            }
            sums[k - 1] = frac_dft(v, alpha, Nx);
        }

        auto& out = partial[j];
        out.assign(Nx, 0.0);
        const double Ga = G[0], Gb = G[2 * N];
        for (int m = 0; m < Nx; ++m) {
            detail::DD xm = detail::dd_add(detail::two_prod(static_cast<double>(m), cfg.delta_x),
                                           cfg.x0);
            double x = res.x[m];
            double A = detail::filon_A(h * x);
            double B = detail::filon_B(h * x);
            double C = detail::filon_C(h * x);
            double c1, c2;
            {
                double cs, sn;
                double t = detail::dd_mod_2pi(detail::dd_mul(xm, a + h));
                cs = std::cos(t), sn = std::sin(t);
                std::complex<double> ph(cs, sn);
                c1 = (ph * sums[0][m]).real();
                t = detail::dd_mod_2pi(detail::dd_mul(xm, a + 2.0 * h));
                ph = {std::cos(t), std::sin(t)};
                c2 = (ph * sums[1][m]).real();
            }
            double tb = detail::dd_mod_2pi(detail::dd_mul(xm, bnd));
            double ta = detail::dd_mod_2pi(detail::dd_mul(xm, a));
            double sb = std::sin(tb), cb = std::cos(tb);
            double sa = std::sin(ta), ca = std::cos(ta);
            out[m] = h * (A * (Gb * sb - Ga * sa) + B * (c2 - 0.5 * (Gb * cb - Ga * ca)) +
                          C * c1);
        }
    });

    for (int j = 0; j < n; ++j)
        for (int m = 0; m < Nx; ++m) res.f[m] += partial[j][m];
    for (int m = 0; m < Nx; ++m)
        res.f[m] *= (2.0 / M_PI) * std::exp(cfg.c * res.x[m]);

    double g0 = std::fabs(g.eval({cfg.c, 0.0}).real());
    double gb = std::fabs(g.eval({cfg.c, cfg.b}).real());
    res.tail_ratio = gb / std::max(g0, 1e-300);
    res.cutoff_warning = res.tail_ratio > 1e-10;
    return res;
}

// ---------------------------------------------------------------------------
// Gaver-Stehfest
// ---------------------------------------------------------------------------

namespace {

struct GsCoeffs {
    std::vector<MpReal> a; // a_1..a_2M
    double float_checksum = 0.0;
};

// exact integer numerators S_n with a_n = (-1)^(M+n) S_n / M!
std::shared_ptr<const GsCoeffs> gaver_coefficients(int M, mpfr_prec_t work_prec) {
    static std::mutex mu;
    static std::map<std::pair<int, mpfr_prec_t>, std::shared_ptr<const GsCoeffs>> cache;
    std::lock_guard lock(mu);
    auto key = std::make_pair(M, work_prec);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::vector<mpz_t> S(2 * M + 1);
    for (auto& z : S) mpz_init(z);
    mpz_t t, u, signed_sum;
    mpz_init(t);
    mpz_init(u);
    mpz_init(signed_sum);
    std::size_t max_bits = 0;
    for (int nn = 1; nn <= 2 * M; ++nn) {
        for (int j = (nn + 1) / 2; j <= std::min(nn, M); ++j) {
            if (nn - j > j) continue;
            mpz_ui_pow_ui(t, static_cast<unsigned long>(j), static_cast<unsigned long>(M + 1));
            mpz_bin_uiui(u, static_cast<unsigned long>(M), static_cast<unsigned long>(j));
            mpz_mul(t, t, u);
            mpz_bin_uiui(u, static_cast<unsigned long>(2 * j), static_cast<unsigned long>(j));
            mpz_mul(t, t, u);
            mpz_bin_uiui(u, static_cast<unsigned long>(j), static_cast<unsigned long>(nn - j));
            mpz_mul(t, t, u);
            mpz_add(S[nn], S[nn], t);
        }
        if ((M + nn) % 2 != 0) mpz_neg(S[nn], S[nn]);
        mpz_add(signed_sum, signed_sum, S[nn]);
        max_bits = std::max(max_bits, mpz_sizeinbase(S[nn], 2));
    }
    if (mpz_sgn(signed_sum) != 0)
        throw NumericalError("gaver_stehfest: exact coefficient checksum failed");

    // store the rationals S_n / M! well above working precision so the
    // floating checksum stays clean
    mpfr_prec_t store_prec = work_prec + static_cast<mpfr_prec_t>(max_bits) + 64;
    mpz_t mfact;
    mpz_init(mfact);
    mpz_fac_ui(mfact, static_cast<unsigned long>(M));
    auto out = std::make_shared<GsCoeffs>();
    out->a.reserve(2 * M);
    MpReal fsum(store_prec);
    for (int nn = 1; nn <= 2 * M; ++nn) {
        MpReal v(store_prec);
        mpfr_set_z(v.raw(), S[nn], MPFR_RNDN);
        mpfr_div_z(v.raw(), v.raw(), mfact, MPFR_RNDN);
        fsum += v;
        out->a.push_back(std::move(v));
    }
    out->float_checksum = abs(fsum).to_double();
    mpz_clear(mfact);
    mpz_clear(t);
    mpz_clear(u);
    mpz_clear(signed_sum);
    for (auto& z : S) mpz_clear(z);
    cache[key] = out;
    return out;
}

} // namespace

double gaver_stehfest(const TransformFn& g, double x, const MpConfig& cfg) {
    if (!(x > 0.0)) throw DomainError("gaver_stehfest: need x > 0");
    int M = cfg.M;
    int digits = cfg.digits > 0 ? cfg.digits : static_cast<int>(std::ceil(2.2 * M));
    mpfr_prec_t prec = PrecisionContext::arbitrary(digits).bits();
    auto coeffs = gaver_coefficients(M, prec);
    if (coeffs->float_checksum > std::pow(10.0, 3.0 - digits))
        throw NumericalError("gaver_stehfest: coefficient checksum exceeds tolerance");

    if (digits <= 16 && g.eval) {
        double ln2 = M_LN2;
        double sum = 0.0;
        for (int nn = 1; nn <= 2 * M; ++nn)
            sum += coeffs->a[nn - 1].to_double() * g.eval({nn * ln2 / x, 0.0}).real();
        return ln2 / x * sum;
    }
    if (!g.eval_mp_real)
        throw ConfigError("gaver_stehfest: transform lacks a real multi-precision evaluator");
    MpReal ln2 = MpReal::ln2(prec);
    MpReal xx(x, prec);
    MpReal sum(prec);
    for (int nn = 1; nn <= 2 * M; ++nn) {
        MpReal z = (static_cast<double>(nn) * ln2) / xx;
        sum += coeffs->a[nn - 1] * g.eval_mp_real(z);
    }
    return ((ln2 / xx) * sum).to_double();
}

// ---------------------------------------------------------------------------
// Euler summation
// ---------------------------------------------------------------------------

namespace {

struct EulerCoeffs {
    std::vector<MpReal> a; // a_0..a_2M
    double float_checksum = 0.0;
};

std::shared_ptr<const EulerCoeffs> euler_coefficients(int M, mpfr_prec_t work_prec) {
    static std::mutex mu;
    static std::map<std::pair<int, mpfr_prec_t>, std::shared_ptr<const EulerCoeffs>> cache;
    std::lock_guard lock(mu);
    auto key = std::make_pair(M, work_prec);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    // A_n = a_n 2^M are integers: A_0 = 2^(M-1), A_n = 2^M (1 <= n <= M),
    // A_2M = 1, and A_(2M-k) = A_(2M-k+1) + binom(M, k) downward.
    std::vector<mpz_t> A(2 * M + 1);
    for (auto& z : A) mpz_init(z);
    mpz_ui_pow_ui(A[0], 2, static_cast<unsigned long>(M - 1));
    for (int nn = 1; nn <= M; ++nn) mpz_ui_pow_ui(A[nn], 2, static_cast<unsigned long>(M));
    mpz_set_ui(A[2 * M], 1);
    mpz_t binom;
    mpz_init(binom);
    for (int k = 1; k < M; ++k) {
        mpz_bin_uiui(binom, static_cast<unsigned long>(M), static_cast<unsigned long>(k));
        mpz_add(A[2 * M - k], A[2 * M - k + 1], binom);
    }
    mpz_t signed_sum;
    mpz_init(signed_sum);
    for (int nn = 0; nn <= 2 * M; ++nn) {
        if (nn % 2 == 0)
            mpz_add(signed_sum, signed_sum, A[nn]);
        else
            mpz_sub(signed_sum, signed_sum, A[nn]);
    }
    if (mpz_sgn(signed_sum) != 0)
        throw NumericalError("euler_inversion: exact coefficient checksum failed");

    mpfr_prec_t store_prec = std::max<mpfr_prec_t>(work_prec + 64, 2 * M + 64);
    auto out = std::make_shared<EulerCoeffs>();
    out->a.reserve(2 * M + 1);
    MpReal fsum(store_prec);
    MpReal scale = pow(MpReal(2.0, store_prec), -(long)M);
    for (int nn = 0; nn <= 2 * M; ++nn) {
        MpReal v(store_prec);
        mpfr_set_z(v.raw(), A[nn], MPFR_RNDN);
        v *= scale;
        fsum += (nn % 2 == 0) ? v : -v;
        out->a.push_back(std::move(v));
    }
    out->float_checksum = abs(fsum).to_double();
    mpz_clear(binom);
    mpz_clear(signed_sum);
    for (auto& z : A) mpz_clear(z);
    cache[key] = out;
    return out;
}

} // namespace

double euler_inversion(const TransformFn& g, double x, const MpConfig& cfg) {
    if (!(x > 0.0)) throw DomainError("euler_inversion: need x > 0");
    int M = cfg.M;
    int digits = cfg.digits > 0 ? cfg.digits : M;
    mpfr_prec_t prec = PrecisionContext::arbitrary(digits).bits();
    auto coeffs = euler_coefficients(M, prec);
    if (coeffs->float_checksum > std::pow(10.0, 3.0 - digits))
        throw NumericalError("euler_inversion: coefficient checksum exceeds tolerance");

    if (digits <= 16 && g.eval) {
        double lnf = (M / 3.0) * std::log(10.0);
        double sum = 0.0;
        for (int nn = 0; nn <= 2 * M; ++nn) {
            double term = g.eval({lnf / x, M_PI * nn / x}).real();
            double w = coeffs->a[nn].to_double();
            sum += (nn % 2 == 0 ? w : -w) * term;
        }
        return std::exp(lnf) / x * sum;
    }
    if (!g.eval_mp)
        throw ConfigError("euler_inversion: transform lacks a multi-precision evaluator");
    MpReal lnf = (static_cast<double>(M) / 3.0) * MpReal::ln10(prec);
    MpReal xx(x, prec);
    MpReal pi = MpReal::pi(prec);
    MpReal sum(prec);
    for (int nn = 0; nn <= 2 * M; ++nn) {
        MpComplex z((lnf / xx), (static_cast<double>(nn) * pi) / xx);
        MpReal term = g.eval_mp(z).real();
        sum += (nn % 2 == 0) ? coeffs->a[nn] * term : -(coeffs->a[nn] * term);
    }
    return ((exp(lnf) / xx) * sum).to_double();
}

// ---------------------------------------------------------------------------
// fixed Talbot
// ---------------------------------------------------------------------------

namespace {

struct TalbotCoeffs {
    std::vector<MpComplex> a, b;
};

std::shared_ptr<const TalbotCoeffs> talbot_coefficients(int M, mpfr_prec_t prec) {
    static std::mutex mu;
    static std::map<std::pair<int, mpfr_prec_t>, std::shared_ptr<const TalbotCoeffs>> cache;
    std::lock_guard lock(mu);
    auto key = std::make_pair(M, prec);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    auto out = std::make_shared<TalbotCoeffs>();
    MpReal pi = MpReal::pi(prec);
    MpReal b0(2.0 * M / 5.0, prec);
    out->b.emplace_back(b0, MpReal(0.0, prec));
    out->a.emplace_back(MpReal(0.0, prec), exp(b0) / 5.0);
    for (int nn = 1; nn < M; ++nn) {
        MpReal th = (static_cast<double>(nn) * pi) / static_cast<double>(M);
        MpReal cot = cos(th) / sin(th);
        MpReal r = (2.0 * pi * static_cast<double>(nn)) / 5.0;
        MpComplex bn(r * cot, r);
        MpComplex an = (bn - (5.0 / (2.0 * M)) * norm(bn)) * exp(bn) /
                       (static_cast<double>(nn) * pi);
        out->b.push_back(bn);
        out->a.push_back(an);
    }
    cache[key] = out;
    return out;
}

} // namespace

double talbot(const TransformFn& g, double x, const MpConfig& cfg) {
    if (!(x > 0.0)) throw DomainError("talbot: need x > 0");
    int M = cfg.M;
    int digits = cfg.digits > 0 ? cfg.digits : M;

    if (digits <= 16 && g.eval) {
        double sum = 0.0;
        for (int nn = 0; nn < M; ++nn) {
            std::complex<double> bn, an;
            if (nn == 0) {
                bn = {2.0 * M / 5.0, 0.0};
                an = {0.0, std::exp(bn.real()) / 5.0};
            } else {
                double th = M_PI * nn / M;
                double cot = std::cos(th) / std::sin(th);
                double r = 2.0 * M_PI * nn / 5.0;
                bn = {r * cot, r};
                an = (bn - 5.0 / (2.0 * M) * std::norm(bn)) * std::exp(bn) / (nn * M_PI);
            }
            sum += (an * g.eval(bn / x)).imag();
        }
        return sum / x;
    }
    if (!g.eval_mp) throw ConfigError("talbot: transform lacks a multi-precision evaluator");
    mpfr_prec_t prec = PrecisionContext::arbitrary(digits).bits();
    auto coeffs = talbot_coefficients(M, prec);
    MpReal xx(x, prec);
    MpReal sum(prec);
    for (int nn = 0; nn < M; ++nn) {
        MpComplex z = coeffs->b[nn] / xx;
        sum += imag(coeffs->a[nn] * g.eval_mp(z));
    }
    return (sum / xx).to_double();
}

// ---------------------------------------------------------------------------
// checksum diagnostics
// ---------------------------------------------------------------------------

namespace detail {

double gaver_checksum(int M, int digits) {
    mpfr_prec_t prec = PrecisionContext::arbitrary(digits).bits();
    return gaver_coefficients(M, prec)->float_checksum;
}

double euler_checksum(int M, int digits) {
    mpfr_prec_t prec = PrecisionContext::arbitrary(digits).bits();
    return euler_coefficients(M, prec)->float_checksum;
}

} // namespace detail

} // namespace levyscale
