#pragma once

#include <functional>
#include <vector>

namespace landau {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// on [-1, 1]
QuadratureRule gauss_legendre(int n);
// weight x^alpha e^{-x} on [0, inf)
QuadratureRule gauss_laguerre(int n, double alpha);

// adaptive Gauss-Kronrod; throws IntegralNonConvergent when the error estimate misses tol
double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol = 1e-12);
// [a, inf) by exp-sinh
double integrate_to_infinity(const std::function<double(double)>& f, double a, double rel_tol = 1e-12);

// (0, inf) through x = e^s with |s| <= log_span; the integrand must decay exponentially in s
double integrate_positive_axis(const std::function<double(double)>& f, double rel_tol = 1e-12,
                               double log_span = 45.0);

} // namespace landau
