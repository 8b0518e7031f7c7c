#include <doctest.h>

#include <cmath>
#include <numbers>

#include "landau/errors.hpp"
#include "landau/quadrature.hpp"
#include "landau/specfun.hpp"

using namespace landau;
using std::numbers::pi;

TEST_CASE("laguerre values") {
    for (double a : {0.0, 1.0, 2.5}) CHECK(laguerre(0, a, 7.3) == 1.0);
    CHECK(laguerre(1, 2.0, 3.0) == doctest::Approx(0.0).scale(1.0));
    CHECK(laguerre(2, 0.0, 1.0) == doctest::Approx(-0.5));
    // closed form of L_3^a as an independent check
    for (double x : {0.0, 0.4, 3.3, 11.0}) {
        double a = 1.5;
        double ref = (a + 1) * (a + 2) * (a + 3) / 6 - (a + 2) * (a + 3) / 2 * x + (a + 3) / 2 * x * x - x * x * x / 6;
        CHECK(laguerre(3, a, x) == doctest::Approx(ref).epsilon(1e-13));
    }
}

TEST_CASE("property: laguerre three-term recurrence") {
    for (double a : {0.0, 1.0, 2.5})
        for (int n = 1; n < 30; ++n)
            for (double x = 0.0; x <= 40.0; x += 0.5) {
                double lhs = (n + 1) * laguerre(n + 1, a, x) - (2 * n + a + 1 - x) * laguerre(n, a, x) +
                             (n + a) * laguerre(n - 1, a, x);
                double scale = std::max({1.0, std::abs(laguerre(n + 1, a, x)) * (n + 1),
                                         std::abs(laguerre(n, a, x)) * (2 * n + a + 1 + x)});
                CHECK(std::abs(lhs) / scale < 1e-10);
            }
}

TEST_CASE("property: laguerre derivative identity") {
    for (double a : {0.0, 1.0, 2.5})
        for (int n = 1; n <= 12; ++n)
            for (double x = 0.5; x <= 20.0; x += 0.75) {
                const double h = 1e-4 * x;
                auto L = [&](double s) { return laguerre(n, a, s); };
                double d = (L(x - 2 * h) - 8 * L(x - h) + 8 * L(x + h) - L(x + 2 * h)) / (12 * h);
                double lhs = x * d - n * laguerre(n, a, x) + (n + a) * laguerre(n - 1, a, x);
                double scale = std::max(1.0, std::abs(n * laguerre(n, a, x)));
                CHECK(std::abs(lhs) / scale < 1e-8);
            }
}

TEST_CASE("property: laguerre orthogonality") {
    for (double a : {0.0, 1.0, 2.5}) {
        QuadratureRule r = gauss_laguerre(12, a);
        for (int n = 0; n <= 8; ++n)
            for (int m = 0; m <= 8; ++m) {
                double s = 0.0;
                for (std::size_t i = 0; i < r.nodes.size(); ++i)
                    s += r.weights[i] * laguerre(n, a, r.nodes[i]) * laguerre(m, a, r.nodes[i]);
                double expect = n == m ? std::tgamma(a + n + 1) / std::tgamma(n + 1.0) : 0.0;
                CHECK(std::abs(s - expect) < 1e-8 * std::max(1.0, expect));
            }
    }
}

TEST_CASE("property: laguerre generating function") {
    for (double a : {0.0, 1.0, 2.5})
        for (double u : {0.0, 0.7, 2.0, 5.0}) {
            double z = 0.5, s = 0.0, zn = 1.0;
            for (int n = 0; n <= 200; ++n, zn *= z) s += laguerre(n, a, u) * zn;
            double closed = std::exp(u * z / (z - 1)) / std::pow(1 - z, 1 + a);
            CHECK(std::abs(s - closed) < 1e-8);
        }
}

TEST_CASE("hermite values") {
    CHECK(hermite(0, 0.3) == 1.0);
    CHECK(hermite(1, 1.5) == 3.0);
    CHECK(hermite(3, 2.0) == 40.0);
    for (double x : {-1.2, 0.0, 0.9})
        CHECK(hermite(4, x) == doctest::Approx(16 * std::pow(x, 4) - 48 * x * x + 12).epsilon(1e-14));
}

TEST_CASE("bessel values and domain") {
    CHECK(bessel(BesselKind::J, 0, 0.0) == 1.0);
    CHECK(bessel(BesselKind::I, 0, 0.0) == 1.0);
    CHECK(bessel(BesselKind::K, 0.5, 1.0) == doctest::Approx(std::sqrt(pi / 2) * std::exp(-1.0)).epsilon(1e-13));
    CHECK(bessel(BesselKind::J, 0.5, 2.0) == doctest::Approx(std::sqrt(2 / (pi * 2.0)) * std::sin(2.0)).epsilon(1e-13));
    CHECK_THROWS_AS(bessel(BesselKind::Y, 1, 0.0), Error);
    CHECK_THROWS_AS(bessel(BesselKind::K, 1, -1.0), Error);
}

TEST_CASE("bessel against power series") {
    for (double nu : {0.0, 1.0, 2.5, 7.0, 20.0})
        for (double x : {1e-3, 0.1, 1.0, 4.0, 9.0}) {
            double j = 0.0, i = 0.0, hx = 0.5 * x;
            for (int k = 0; k < 80; ++k) {
                double t = std::exp(k * 2 * std::log(hx) - std::lgamma(k + 1.0) - std::lgamma(k + nu + 1)) *
                           std::pow(hx, nu);
                j += (k % 2 ? -t : t);
                i += t;
            }
            CHECK(bessel(BesselKind::I, nu, x) == doctest::Approx(i).epsilon(1e-10));
            if (std::abs(j) > 1e-3 * i) CHECK(bessel(BesselKind::J, nu, x) == doctest::Approx(j).epsilon(1e-9));
        }
}

TEST_CASE("property: bessel Wronskian") {
    const double h = 1e-5;
    for (double nu : {0.0, 0.5, 3.0, 10.0})
        for (double x : {0.5, 2.0, 7.5, 30.0, 50.0}) {
            auto J = [&](double s) { return bessel(BesselKind::J, nu, s); };
            auto Y = [&](double s) { return bessel(BesselKind::Y, nu, s); };
            double dj = (J(x + h) - J(x - h)) / (2 * h), dy = (Y(x + h) - Y(x - h)) / (2 * h);
            double w = J(x) * dy - dj * Y(x);
            CHECK(std::abs(w - 2 / (pi * x)) < 1e-8 * std::max(1.0, std::abs(Y(x))));
        }
}

TEST_CASE("gamma") {
    CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-14));
    double half = integrate_positive_axis([](double t) { return std::exp(-t) / std::sqrt(t); }, 1e-12, 100.0);
    CHECK(gamma_fn(0.5) == doctest::Approx(half).epsilon(1e-11));
    CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(pi)).epsilon(1e-14));
    CHECK_THROWS_AS(gamma_fn(0.0), Error);
    CHECK_THROWS_AS(gamma_fn(-3.0), Error);
    CHECK(std::abs(log_gamma({4.0, 0.0}) - std::complex<double>(std::log(6.0), 0.0)) < 1e-14);
}

TEST_CASE("hypergeometric") {
    CHECK(hypergeometric({1.3, 2.2}, {0.7}, 0.0) == 1.0);
    CHECK(hypergeometric({1, -2}, {1}, -0.5) == doctest::Approx(2.25).epsilon(1e-14));
    CHECK(hypergeometric({1, 1}, {1, 1, 1}, 1.0) == doctest::Approx(bessel(BesselKind::I, 0, 2.0)).epsilon(1e-13));
    CHECK(hypergeometric({1, 1}, {1, 1, 1}, 1.0) == doctest::Approx(2.27958530233607).epsilon(1e-12));
    CHECK_THROWS_AS(hypergeometric({0.5, 0.5}, {1.5}, 1.2), Error);
    CHECK(hypergeometric({-3, 0.5}, {1.5}, 4.0) == doctest::Approx(1 - 3 * 0.5 / 1.5 * 4 + 3 * 0.5 * 1.5 / (1.5 * 2.5) * 16 -
                                                                     0.5 * 1.5 * 2.5 / (1.5 * 2.5 * 3.5) * 64)
                                                         .epsilon(1e-13));
}

TEST_CASE("reduced modified Bessel series") {
    for (double nu : {0.0, 1.0, 3.0})
        for (double w : {0.0, 0.3, 4.0}) {
            std::complex<double> s = 0.0;
            for (int k = 0; k < 100; ++k) s += std::pow(w, k) / (std::tgamma(k + 1.0) * std::tgamma(k + nu + 1));
            CHECK(std::abs(bessel_i_reduced(nu, w) - s) < 1e-13 * std::abs(s));
        }
    std::complex<double> w(-1.1, 0.6);
    std::complex<double> s = 0.0, wk = 1.0;
    for (int k = 0; k < 60; ++k, wk *= w) s += wk / (std::tgamma(k + 1.0) * std::tgamma(k + 3.0));
    CHECK(std::abs(bessel_i_reduced(2.0, w) - s) < 1e-14);
}

TEST_CASE("meijer G instance with a rational closed form") {
    for (double j : {0.5, 1.0, 2.0})
        for (double x : {1e-3, 0.1, 1.0, 7.0, 20.0}) {
            MeijerGSpec g{2, 1, 2, 2, {-2 * j - 1, 0.0}, {0.0, 0.0}};
            double expect = std::tgamma(2 * j + 1) * (2 * j + 1) / std::pow(1 + x, 2 * j + 2);
            CHECK(meijer_g(g, x) == doctest::Approx(expect).epsilon(1e-8));
        }
}

TEST_CASE("meijer G instance reducing to a Macdonald function") {
    MeijerGSpec g{4, 0, 2, 4, {0.0, 1.0}, {0.0, 0.0, 1.0, 1.0}};
    for (double x : {1e-3, 0.05, 1.0, 5.0, 20.0}) {
        double s = std::sqrt(x);
        CHECK(meijer_g(g, x) == doctest::Approx(2 * s * bessel(BesselKind::K, 1, 2 * s)).epsilon(1e-8));
    }
}

TEST_CASE("meijer G with a cancelling numerator-denominator pair") {
    // Gamma(1+s) Gamma(3-s) inverts to 6 x / (1+x)^4
    MeijerGSpec g{2, 1, 2, 2, {-2.0, 0.0}, {0.0, 1.0}};
    for (double x : {1e-19, 1e-6, 0.3, 1.0, 40.0, 1e8})
        CHECK(meijer_g(g, x) == doctest::Approx(6 * x / std::pow(1 + x, 4)).epsilon(1e-9));
}

TEST_CASE("meijer G moment matches the Mellin transform") {
    MeijerGSpec g{2, 1, 2, 2, {-2.0, 0.0}, {0.0, 1.0}};
    double mu = integrate_positive_axis([&](double x) { return meijer_g(g, x); }, 1e-10);
    double expect = std::exp(meijer_log_mellin(g, {1.0, 0.0}).real());
    CHECK(mu == doctest::Approx(expect).epsilon(1e-6));
}

TEST_CASE("meijer G decays past its last sign change") {
    MeijerGSpec g{4, 0, 2, 4, {1.0, 2.0}, {0.0, 1.0, 1.0, 2.0}};
    double prev = meijer_g(g, 20.0);
    for (double x = 21.0; x <= 60.0; x += 1.0) {
        double v = meijer_g(g, x);
        CHECK(v >= 0.0);
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("meijer G rejects other instances") {
    try {
        meijer_g({1, 1, 1, 1, {0.5}, {0.0}}, 1.0);
        FAIL("expected UnsupportedInstance");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::UnsupportedInstance);
    }
}
