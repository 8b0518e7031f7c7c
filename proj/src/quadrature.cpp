#include "landau/quadrature.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Dense>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "landau/errors.hpp"

namespace landau {

QuadratureRule gauss_legendre(int n)
{
    QuadratureRule rule{std::vector<double>(n), std::vector<double>(n)};
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = rule.weights[n - 1 - i] = w;
    }
    return rule;
}

QuadratureRule gauss_laguerre(int n, double alpha)
{
    // Golub-Welsch on the Jacobi matrix of the Laguerre recurrence
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        J(k, k) = 2.0 * k + alpha + 1.0;
        if (k + 1 < n) J(k, k + 1) = J(k + 1, k) = std::sqrt((k + 1.0) * (k + 1.0 + alpha));
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(J);
    QuadratureRule rule{std::vector<double>(n), std::vector<double>(n)};
    const double mu0 = std::tgamma(alpha + 1.0);
    for (int k = 0; k < n; ++k) {
        rule.nodes[k] = eig.eigenvalues()(k);
        const double v = eig.eigenvectors()(0, k);
        rule.weights[k] = mu0 * v * v;
    }
    return rule;
}

double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol)
{
    double err = 0.0, l1 = 0.0;
    const double value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 25, rel_tol, &err, &l1);
    if (!std::isfinite(value) || err > 1e3 * rel_tol * std::max(l1, 1e-300))
        fail(Errc::IntegralNonConvergent, "Gauss-Kronrod error estimate " + std::to_string(err));
    return value;
}

double integrate_to_infinity(const std::function<double(double)>& f, double a, double rel_tol)
{
    boost::math::quadrature::exp_sinh<double> rule;
    double err = 0.0, l1 = 0.0;
    auto shifted = [&](double x) { return f(a + x); };
    const double value = rule.integrate(shifted, rel_tol, &err, &l1);
    if (!std::isfinite(value) || err > 1e3 * rel_tol * std::max(l1, 1e-300))
        fail(Errc::IntegralNonConvergent, "exp-sinh error estimate " + std::to_string(err));
    return value;
}

double integrate_positive_axis(const std::function<double(double)>& f, double rel_tol, double log_span)
{
    auto mapped = [&](double s) {
        const double x = std::exp(s);
        return f(x) * x;
    };
    return integrate(mapped, -log_span, log_span, rel_tol);
}

} // namespace landau
