#include "levyscale/special.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace levyscale::sf {

// ---------------------------------------------------------------------------
// gamma helpers
// ---------------------------------------------------------------------------

std::pair<double, int> lgamma_signed(double x) {
    if (x > 0.0) return {std::lgamma(x), 1};
    if (x == std::floor(x)) return {std::numeric_limits<double>::infinity(), 1};
    // Gamma(x) alternates sign on the intervals (-k-1, -k)
    double l = std::lgamma(x); // ln|Gamma(x)|
    int k = static_cast<int>(std::floor(-x));
    int sign = (k % 2 == 0) ? -1 : 1;
    return {l, sign};
}

double recip_gamma(double x) {
    if (x > 0.5) {
        if (x > 170.0) return std::exp(-std::lgamma(x));
        return 1.0 / std::tgamma(x);
    }
    if (x == std::floor(x)) return 0.0; // poles of Gamma
    // 1/Gamma(x) = Gamma(1-x) sin(pi x) / pi
    double one_minus = 1.0 - x;
    double s = std::sin(M_PI * x);
    if (one_minus > 170.0) {
        // form in log space; may legitimately overflow for very negative x
        double mag = std::lgamma(one_minus) + std::log(std::fabs(s) / M_PI);
        double v = std::exp(mag);
        return s >= 0 ? v : -v;
    }
    return std::tgamma(one_minus) * s / M_PI;
}

// ---------------------------------------------------------------------------
// Bernoulli numbers, B_{2k} = (-1)^{k+1} 2 (2k)! zeta(2k) / (2 pi)^{2k}
// ---------------------------------------------------------------------------

namespace {

std::vector<MpReal> compute_bernoulli_mp(int count, mpfr_prec_t prec) {
    std::vector<MpReal> out;
    out.reserve(count);
    MpReal two_pi_sq = pow(2.0 * MpReal::pi(prec), 2L);
    MpReal factor(2.0, prec); // 2 (2k)! / (2 pi)^(2k), maintained iteratively
    for (int k = 1; k <= count; ++k) {
        factor = factor * ((2.0 * k) * (2.0 * k - 1.0)) / two_pi_sq;
        MpReal z(prec);
        mpfr_zeta_ui(z.raw(), static_cast<unsigned long>(2 * k), MPFR_RNDN);
        MpReal b = factor * z;
        if (k % 2 == 0) b = -b;
        out.push_back(std::move(b));
    }
    return out;
}

} // namespace

const std::vector<double>& bernoulli_2k(int count) {
    static std::mutex mu;
    static std::vector<double> cache;
    std::lock_guard lock(mu);
    if (static_cast<int>(cache.size()) < count) {
        auto mp = compute_bernoulli_mp(std::max(count, 96), 128);
        cache.clear();
        for (auto& b : mp) cache.push_back(b.to_double());
    }
    return cache;
}

MpReal bernoulli_2k_mp(int k, mpfr_prec_t prec) {
    static std::mutex mu;
    static std::map<mpfr_prec_t, std::vector<MpReal>> cache;
    std::lock_guard lock(mu);
    // round precision up to limit the number of cached tables
    mpfr_prec_t bucket = ((prec + 255) / 256) * 256;
    auto& vec = cache[bucket];
    if (static_cast<int>(vec.size()) < k) {
        int want = std::max<int>(k, static_cast<int>(vec.size()) * 2 + 64);
        vec = compute_bernoulli_mp(want, bucket);
    }
    return vec[k - 1];
}

// ---------------------------------------------------------------------------
// incomplete gamma
// ---------------------------------------------------------------------------

namespace {

// regularized lower incomplete gamma by series, b < a + 1
double gamma_p_series(double a, double b) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int n = 0; n < 1000; ++n) {
        ap += 1.0;
        del *= b / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * 1e-17) break;
    }
    return sum * std::exp(-b + a * std::log(b) - std::lgamma(a));
}

// continued fraction for the (non-regularized prefactor) upper gamma, b >= a + 1
double gamma_q_cf(double a, double b) {
    constexpr double FPMIN = 1e-300;
    double b0 = b + 1.0 - a;
    double c = 1.0 / FPMIN;
    double d = 1.0 / b0;
    double h = d;
    for (int i = 1; i < 2000; ++i) {
        double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b0 += 2.0;
        d = an * d + b0;
        if (std::fabs(d) < FPMIN) d = FPMIN;
        c = b0 + an / c;
        if (std::fabs(c) < FPMIN) c = FPMIN;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-17) break;
    }
    return h; // Gamma(a,b) = exp(-b + a ln b) * h
}

} // namespace

double incomplete_gamma(double a, double b) {
    if (!(a > 0.0) || b < 0.0) throw DomainError("incomplete_gamma: need a > 0, b >= 0");
    if (b == 0.0) return std::tgamma(a);
    if (b < a + 1.0) {
        double p = gamma_p_series(a, b);
        double q = 1.0 - p;
        if (a <= 170.0) return q * std::tgamma(a);
        return std::exp(std::lgamma(a) + std::log(q));
    }
    return std::exp(-b + a * std::log(b)) * gamma_q_cf(a, b);
}

double incomplete_gamma_any(double a, double b) {
    if (a > 0.0) return incomplete_gamma(a, b);
    if (!(b > 0.0)) throw DomainError("incomplete_gamma_any: need b > 0 when a <= 0");
    // Gamma(a, b) = (Gamma(a+1, b) - b^a e^{-b}) / a, applied downward
    int k = static_cast<int>(std::ceil(-a)) + 1;
    double atop = a + k;
    double g = incomplete_gamma(atop, b);
    for (int i = 1; i <= k; ++i) {
        double ai = atop - i; // target parameter of this step
        g = (g - std::exp((ai)*std::log(b) - b)) / ai;
    }
    return g;
}

// ---------------------------------------------------------------------------
// Mittag-Leffler
// ---------------------------------------------------------------------------

double ml_series_term(double a, double b, double x, int n) {
    double g = recip_gamma(n * a + b);
    if (g == 0.0) return 0.0;
    return std::pow(x, n) * g;
}

namespace {

// series in double for x >= 0 (all terms positive, no cancellation)
double ml_series_positive(double a, double b, double x, bool& ok) {
    double sum = 0.0;
    double prev = std::numeric_limits<double>::infinity();
    ok = false;
    for (int n = 0; n < 4000; ++n) {
        double t = std::exp(n * std::log(x) - std::lgamma(a * n + b));
        if (n == 0) t = recip_gamma(b);
        sum += t;
        if (n > 2 && t < prev && t < 1e-17 * sum) {
            ok = true;
            break;
        }
        prev = t;
    }
    return sum;
}

// escalated-precision series for x < 0
double ml_series_escalated(double a, double b, double x, bool& warn) {
    int digits = 40;
    for (int attempt = 0; attempt < 4; ++attempt) {
        mpfr_prec_t prec = static_cast<mpfr_prec_t>((digits + 8) * 3.322);
        MpReal sum(prec);
        MpReal ax(x, prec);
        MpReal term(1.0, prec);
        MpReal maxterm(0.0, prec);
        MpReal xpow(1.0, prec);
        for (int n = 0; n < 100000; ++n) {
            MpReal garg(a * n + b, prec);
            MpReal g(prec);
            mpfr_gamma(g.raw(), garg.raw(), MPFR_RNDN);
            term = xpow / g;
            sum += term;
            MpReal at = abs(term);
            if (at > maxterm) maxterm = at;
            if (n > 4 && at < abs(sum) * pow(MpReal(10.0, prec), -(long)(digits + 4)) &&
                a * n + b > 2.0)
                break;
            xpow *= ax;
        }
        double cancel = (maxterm / fmax(abs(sum), MpReal(1e-300, prec))).to_double();
        double lost = cancel > 0 ? std::log10(cancel) : 0.0;
        if (digits - lost >= 17.0) {
            warn = false;
            return sum.to_double();
        }
        int needed = static_cast<int>(lost) + 24;
        if (needed > 300) {
            warn = true;
            return sum.to_double();
        }
        digits = needed;
    }
    warn = true;
    return 0.0;
}

// algebraic asymptotic for x << 0; returns the optimally truncated sum and an
// error estimate (first omitted term plus exponential remainder bound)
double ml_asymptotic_negative(double a, double b, double x, double& err) {
    double sum = 0.0;
    double last = std::numeric_limits<double>::infinity();
    double minterm = std::numeric_limits<double>::infinity();
    for (int k = 1; k < 400; ++k) {
        double t = -std::pow(x, -static_cast<double>(k)) * recip_gamma(b - a * k);
        double at = std::fabs(t);
        if (at > last && k > 2) {
            minterm = last;
            break;
        }
        sum += t;
        last = at > 0 ? at : last;
        minterm = std::min(minterm, at > 0 ? at : minterm);
    }
    double eps_exp = 0.0;
    if (a >= 1.0 - 1e-12 && a < 2.0) {
        double r = std::pow(-x, 1.0 / a);
        eps_exp = (2.0 / a) * std::pow(-x, (1.0 - b) / a) * std::exp(r * std::cos(M_PI / a));
    }
    err = minterm + eps_exp;
    return sum;
}

} // namespace

MlResult mittag_leffler_ex(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0))
        throw DomainError("mittag_leffler: parameters must be positive");
    if (x == 0.0) return {recip_gamma(b), false};
    if (x > 0.0) {
        // peak of the series sits near n* = x^(1/a)/a; fall back to the
        // exponential asymptotic when the series would need too many terms
        double peak = std::pow(x, 1.0 / a) / a;
        if (peak < 2500.0) {
            bool ok = false;
            double v = ml_series_positive(a, b, x, ok);
            return {v, !ok};
        }
        double r = std::pow(x, 1.0 / a);
        double lead = (1.0 / a) * std::exp((1.0 - b) / a * std::log(x) + r);
        double sum = 0.0;
        double lastt = std::numeric_limits<double>::infinity();
        for (int k = 1; k < 200; ++k) {
            double t = -std::pow(x, -static_cast<double>(k)) * recip_gamma(b - a * k);
            if (std::fabs(t) > lastt && k > 2) break;
            sum += t;
            lastt = std::fabs(t) > 0 ? std::fabs(t) : lastt;
        }
        return {lead + sum, false};
    }
    // x < 0
    if (a < 1.99) {
        double err = 0.0;
        double s = ml_asymptotic_negative(a, b, x, err);
        if (err <= 1e-14 * std::max(std::fabs(s), 1e-280)) return {s, false};
    }
    bool warn = false;
    double v = ml_series_escalated(a, b, x, warn);
    return {v, warn};
}

double mittag_leffler(double a, double b, double x) {
    return mittag_leffler_ex(a, b, x).value;
}

double mittag_leffler_negative_params(double a, double b, double x) {
    if (!(a > -1.0 && a < 0.0) || std::fabs(b - a) > 1e-12)
        throw DomainError("mittag_leffler_negative_params: need -1 < a < 0 and b == a");
    if (x < 0.0)
        throw DomainError("mittag_leffler_negative_params: validated region is x >= 0");
    return mittag_leffler(-a, -b, x);
}

} // namespace levyscale::sf
