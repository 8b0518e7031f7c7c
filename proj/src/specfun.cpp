#include "landau/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/special_functions/bessel.hpp>

#include "landau/errors.hpp"

namespace landau {

using cd = std::complex<double>;

double laguerre(int n, double alpha, double x)
{
    if (n < 0) return 0.0;
    double prev = 1.0;
    if (n == 0) return prev;
    double cur = 1.0 + alpha - x;
    for (int k = 1; k < n; ++k) {
        const double next = ((2.0 * k + alpha + 1.0 - x) * cur - (k + alpha) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

double hermite(int n, double x)
{
    if (n < 0) return 0.0;
    double prev = 1.0;
    if (n == 0) return prev;
    double cur = 2.0 * x;
    for (int k = 1; k < n; ++k) {
        const double next = 2.0 * x * cur - 2.0 * k * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double bessel(BesselKind kind, double nu, double x)
{
    namespace bm = boost::math;
    switch (kind) {
    case BesselKind::J:
        if (x < 0.0) fail(Errc::DomainError, "J requires x >= 0");
        return bm::cyl_bessel_j(nu, x);
    case BesselKind::I:
        if (x < 0.0) fail(Errc::DomainError, "I requires x >= 0");
        return bm::cyl_bessel_i(nu, x);
    case BesselKind::Y:
        if (x <= 0.0) fail(Errc::DomainError, "Y requires x > 0");
        return bm::cyl_neumann(nu, x);
    case BesselKind::K:
        if (x <= 0.0) fail(Errc::DomainError, "K requires x > 0");
        return bm::cyl_bessel_k(nu, x);
    }
    return 0.0;
}

double gamma_fn(double x)
{
    if (x <= 0.0 && x == std::floor(x)) fail(Errc::PoleError, "Gamma at non-positive integer");
    return std::tgamma(x);
}

namespace {

// log sin(pi z) modulo 2 pi i, stable for large |Im z|
cd log_sin_pi(cd z)
{
    const cd i(0.0, 1.0);
    const double pi = std::numbers::pi;
    if (std::abs(z.imag()) < 10.0) return std::log(std::sin(pi * z));
    if (z.imag() > 0.0) return -i * pi * z + std::log(1.0 - std::exp(2.0 * i * pi * z)) - std::log(-2.0 * i);
    return i * pi * z + std::log(1.0 - std::exp(-2.0 * i * pi * z)) - std::log(2.0 * i);
}

} // namespace

cd log_gamma(cd z)
{
    const double pi = std::numbers::pi;
    if (z.real() < 0.5) {
        if (z.imag() == 0.0 && z.real() == std::floor(z.real()))
            return {std::numeric_limits<double>::infinity(), 0.0};
        return std::log(pi) - log_sin_pi(z) - log_gamma(1.0 - z);
    }
    cd prod(1.0, 0.0);
    while (std::abs(z) < 15.0) {
        prod *= z;
        z += 1.0;
    }
    const cd shift = std::log(prod);
    static constexpr double bern[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730, 7.0 / 6,
                                      -3617.0 / 510};
    const cd inv = 1.0 / z, inv2 = inv * inv;
    cd series(0.0, 0.0);
    cd pw = inv;
    for (int k = 1; k <= 8; ++k) {
        series += bern[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * pw;
        pw *= inv2;
    }
    return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * pi) + series - shift;
}

namespace {

bool non_positive_integer(double v) { return v <= 0.0 && v == std::floor(v); }

} // namespace

double hypergeometric(const std::vector<double>& a, const std::vector<double>& b, double z)
{
    if (z == 0.0) return 1.0;
    long terminate_at = -1;
    for (double ai : a)
        if (non_positive_integer(ai)) {
            const long k = static_cast<long>(-ai);
            terminate_at = (terminate_at < 0) ? k : std::min(terminate_at, k);
        }
    for (double bi : b)
        if (non_positive_integer(bi) && (terminate_at < 0 || static_cast<long>(-bi) < terminate_at))
            fail(Errc::PoleError, "lower parameter is a non-positive integer");

    const std::size_t p = a.size(), q = b.size();
    if (terminate_at < 0) {
        if (p > q + 1) fail(Errc::DivergentSeries, "p > q+1 series diverges");
        if (p == q + 1 && std::abs(z) >= 1.0) fail(Errc::DivergentSeries, "|z| >= 1 outside the disk");
    }

    constexpr long max_terms = 1000000;
    double term = 1.0, sum = 1.0;
    for (long k = 0; k < max_terms; ++k) {
        if (terminate_at >= 0 && k >= terminate_at) return sum;
        double ratio = z / (k + 1.0);
        for (double ai : a) ratio *= ai + k;
        for (double bi : b) ratio /= bi + k;
        term *= ratio;
        sum += term;
        if (terminate_at < 0) {
            // tail bound from the asymptotic ratio once terms shrink
            double r = std::abs(z) / (k + 2.0);
            for (double ai : a) r *= std::abs(ai + k + 1.0);
            for (double bi : b) r /= std::abs(bi + k + 1.0);
            if (r < 1.0 && std::abs(term) * r / (1.0 - r) <= 1e-14 * std::abs(sum) && k > 2) return sum;
            if (term == 0.0) return sum;
        }
    }
    fail(Errc::DivergentSeries, "no convergence within term budget");
}

cd bessel_i_reduced(double nu, cd w)
{
    cd term = 1.0 / std::tgamma(nu + 1.0);
    cd sum = term;
    for (int k = 1; k < 10000; ++k) {
        term *= w / (k * (k + nu));
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum) && static_cast<double>(k) > std::abs(w)) return sum;
    }
    fail(Errc::DivergentSeries, "reduced Bessel series");
}

cd meijer_log_mellin(const MeijerGSpec& spec, cd s)
{
    cd acc(0.0, 0.0);
    for (int j = 0; j < spec.q; ++j) {
        if (j < spec.m) acc += log_gamma(spec.b[j] + s);
        else acc -= log_gamma(1.0 - spec.b[j] - s);
    }
    for (int j = 0; j < spec.p; ++j) {
        if (j < spec.n) acc += log_gamma(1.0 - spec.a[j] - s);
        else acc -= log_gamma(spec.a[j] + s);
    }
    return acc;
}

double meijer_g(const MeijerGSpec& spec, double x)
{
    const bool su2_instance = spec.m == 2 && spec.n == 1 && spec.p == 2 && spec.q == 2;
    const bool bg_instance = spec.m == 4 && spec.n == 0 && spec.p == 2 && spec.q == 4;
    if (!su2_instance && !bg_instance)
        fail(Errc::UnsupportedInstance, "only G^{2,1}_{2,2} and G^{4,0}_{2,4} are supported");
    if (spec.a.size() != static_cast<std::size_t>(spec.p) || spec.b.size() != static_cast<std::size_t>(spec.q))
        fail(Errc::UnsupportedInstance, "parameter lengths do not match (p, q)");
    if (!(x > 0.0)) fail(Errc::DomainError, "Meijer G requires x > 0");

    // Gamma(b_j+s) / Gamma(a_k+s) with a_k = b_j is identically 1: drop both so the contour may cross s = -b_j
    MeijerGSpec red;
    std::vector<bool> used(spec.p, false);
    for (int j = 0; j < spec.q; ++j) {
        bool cancelled = false;
        if (j < spec.m)
            for (int k = spec.n; k < spec.p && !cancelled; ++k)
                if (!used[k] && spec.a[k] == spec.b[j]) used[k] = cancelled = true;
        if (cancelled) continue;
        red.b.push_back(spec.b[j]);
        red.m += j < spec.m;
    }
    for (int k = 0; k < spec.p; ++k)
        if (!used[k]) {
            red.a.push_back(spec.a[k]);
            red.n += k < spec.n;
        }
    red.p = int(red.a.size());
    red.q = int(red.b.size());

    // fundamental strip: left poles from Gamma(b_j+s), right poles from Gamma(1-a_j-s)
    double lo = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < red.m; ++j) lo = std::max(lo, -red.b[j]);
    double hi = std::numeric_limits<double>::infinity();
    for (int j = 0; j < red.n; ++j) hi = std::min(hi, 1.0 - red.a[j]);
    if (!(lo < hi)) fail(Errc::ContourFailure, "pole families overlap");
    if (!std::isfinite(lo)) fail(Errc::ContourFailure, "no left pole family after cancellation");

    const double logx = std::log(x);
    auto envelope = [&](double c) { return meijer_log_mellin(red, cd(c, 0.0)).real() - c * logx; };

    // vertical line through the real saddle of |M(s) x^{-s}|; the saddle may sit close to a pole for extreme x
    const double margin = 1e-4 * (std::isfinite(hi) ? std::min(1.0, hi - lo) : 1.0);
    double left = lo + margin;
    double right;
    if (std::isfinite(hi)) {
        right = hi - margin;
    } else {
        // grow the bracket until the envelope turns upward
        double step = 4.0;
        right = left + step;
        while (envelope(right + step) < envelope(right) && right < 1e8) {
            right += step;
            step *= 2.0;
        }
        right += step;
    }
    const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
    double c1 = right - golden * (right - left), c2 = left + golden * (right - left);
    double f1 = envelope(c1), f2 = envelope(c2);
    for (int it = 0; it < 80 && right - left > 1e-6; ++it) {
        if (f1 < f2) {
            right = c2; c2 = c1; f2 = f1;
            c1 = right - golden * (right - left); f1 = envelope(c1);
        } else {
            left = c1; c1 = c2; f1 = f2;
            c2 = left + golden * (right - left); f2 = envelope(c2);
        }
    }
    const double c = 0.5 * (left + right);
    const double dist = std::min(c - lo, std::isfinite(hi) ? hi - c : std::numeric_limits<double>::infinity());
    const double h = std::min(0.1, dist / 5.0);
    const double env0 = envelope(c);
    // the saddle bounds |G|; nothing representable is left below exp(-745)
    if (env0 < -760.0) return 0.0;

    // G(x) = (1/pi) int_0^inf Re[M(c+i tau) x^{-c-i tau}] d tau, trapezoid (exponentially convergent)
    double sum = 0.5;
    double tau = 0.0;
    for (long k = 1;; ++k) {
        tau = k * h;
        if (tau > 4000.0) fail(Errc::ContourFailure, "integrand does not decay on the contour");
        const cd s(c, tau);
        const cd lg = meijer_log_mellin(red, s) - s * logx;
        if (lg.real() - env0 < -42.0 && tau > 1.0) break;
        sum += std::exp(lg.real() - env0) * std::cos(lg.imag());
    }
    return std::exp(env0) * sum * h / std::numbers::pi;
}

} // namespace landau
