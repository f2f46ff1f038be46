#include "levyscale/quadrature.hpp"

#include <cmath>

namespace levyscale {

namespace {

double simpson(const std::function<double(double)>& f, double a, double fa, double b,
               double fb, double m, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive(const std::function<double(double)>& f, double a, double fa, double b,
                double fb, double m, double fm, double whole, double tol, int depth) {
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = simpson(f, a, fa, m, fm, lm, flm);
    double right = simpson(f, m, fm, b, fb, rm, frm);
    double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adaptive(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double tol,
                 int max_depth) {
    if (a == b) return 0.0;
    double fa = f(a), fb = f(b), m = 0.5 * (a + b), fm = f(m);
    double whole = simpson(f, a, fa, b, fb, m, fm);
    return adaptive(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

double integrate_to_inf(const std::function<double(double)>& f, double a, double tol,
                        double first_step) {
    double acc = 0.0;
    double lo = a;
    double step = first_step;
    int negligible = 0;
    for (int i = 0; i < 200 && negligible < 3; ++i) {
        double hi = lo + step;
        double seg = integrate(f, lo, hi, tol * 0.25);
        acc += seg;
        if (std::fabs(seg) < tol * (1.0 + std::fabs(acc)))
            ++negligible;
        else
            negligible = 0;
        lo = hi;
        step *= 2.0;
    }
    return acc;
}

std::vector<double> cumulative_integral(const std::function<double(double)>& f,
                                        const std::vector<double>& xs, double tol) {
    std::vector<double> out(xs.size());
    double acc = 0.0;
    double prev = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        acc += integrate(f, prev, xs[i], tol);
        out[i] = acc;
        prev = xs[i];
    }
    return out;
}

} // namespace levyscale
