#pragma once

#include <functional>
#include <vector>

namespace levyscale {

/// Adaptive Simpson quadrature on [a, b].
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-10, int max_depth = 48);

/// Integral over [a, infinity) for integrands with (at least) exponential or
/// fast algebraic decay: doubling segments until three negligible in a row.
double integrate_to_inf(const std::function<double(double)>& f, double a,
                        double tol = 1e-10, double first_step = 1.0);

/// Cumulative integrals F(x_i) = int_0^{x_i} f, for an increasing grid.
std::vector<double> cumulative_integral(const std::function<double(double)>& f,
                                        const std::vector<double>& xs,
                                        double tol = 1e-10);

} // namespace levyscale
