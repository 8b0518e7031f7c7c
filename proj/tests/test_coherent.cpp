#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>

#include "landau/coherent.hpp"
#include "landau/quadrature.hpp"
#include "landau/specfun.hpp"

using namespace landau;
using std::numbers::pi;

namespace {

double lfact(int n) { return std::lgamma(n + 1.0); }

// a(N) acting on the flattened state, compared to lambda * state on the interior block
double eigen_residual(const SpMat& op, const StateVector& s, cplx lambda) {
    Eigen::VectorXcd v = s.to_vector();
    Eigen::VectorXcd r = op * v - lambda * v;
    double worst = 0.0;
    for (int i : interior_indices(s.cutoff)) worst = std::max(worst, std::abs(r(i)));
    return worst;
}

SpMat diagonal_of(int cutoff, const std::function<double(int, int)>& f) {
    const int dim = (cutoff + 1) * (cutoff + 1);
    SpMat d(dim, dim);
    for (int p = 0; p <= cutoff; ++p)
        for (int m = 0; m <= cutoff; ++m) d.insert(basis_index(p, m, cutoff), basis_index(p, m, cutoff)) = f(p, m);
    return d;
}

} // namespace

TEST_CASE("canonical state coefficients and Poisson distribution") {
    auto g = canonical_state(0.0, 0.0, 4);
    CHECK(g.at(0, 0) == cplx(1, 0));
    CHECK(std::abs(g.norm_deficit) < 1e-15);

    auto s = canonical_state(1.0, 0.0, 10);
    CHECK(distribution(s)(0, 0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));

    cplx zp(0.8, -0.3), zm(-0.4, 1.1);
    auto c = canonical_state(zp, zm, 20);
    CHECK(c.cutoff >= 20);
    CHECK(std::abs(c.norm_deficit) < 1e-12);
    for (int p = 0; p <= 6; ++p)
        for (int m = 0; m <= 6; ++m) {
            cplx want = std::exp(-0.5 * (std::norm(zp) + std::norm(zm))) * std::pow(zp, p) * std::pow(zm, m) /
                        std::sqrt(std::tgamma(p + 1.0) * std::tgamma(m + 1.0));
            CHECK(std::abs(c.at(p, m) - want) < 1e-15);
        }

    auto one = canonical_state(1.0, 1.0, 12);
    auto P = distribution(one);
    for (int p = 0; p <= 5; ++p)
        for (int m = 0; m <= 5; ++m)
            CHECK(P(p, m) == doctest::Approx(std::exp(-2.0 - lfact(p) - lfact(m))).epsilon(1e-13));
}

TEST_CASE("cutoff is raised until the tail settles") {
    auto s = canonical_state(cplx(3.0, 2.0), 0.5, 4);
    CHECK(s.cutoff > 30);
    CHECK(std::abs(s.norm_deficit) < 1e-12);
    auto big = canonical_state(40.0, 0.0, 0);
    CHECK(std::abs(big.norm_deficit) < 1e-12);
    CHECK_THROWS_AS(canonical_state(200.0, 0.0, 0), Error);
}

TEST_CASE("overlap plumbing and canonical modulus") {
    cplx a1(0.3, 0.4), a2(-0.2, 0.1), b1(1.0, -0.5), b2(0.6, 0.7);
    auto s = canonical_state(a1, a2, 30), t = canonical_state(b1, b2, 30);
    int n = std::max(s.cutoff, t.cutoff);
    s = s.resized(n);
    t = t.resized(n);
    CHECK(std::abs(overlap(s, s) - (1.0 - s.norm_deficit)) < 1e-15);
    double want = std::exp(-0.5 * std::norm(a1 - b1) - 0.5 * std::norm(a2 - b2));
    CHECK(std::abs(overlap(s, t)) == doctest::Approx(want).epsilon(1e-12));
    CHECK_THROWS_AS(overlap(s, t.resized(n + 1)), Error);
}

TEST_CASE("property: every distribution sums to one minus the deficit") {
    std::vector<StateVector> states{
        canonical_state(cplx(1.2, -0.7), 0.4, 0),
        photon_added_state(cplx(0.5, 0.5), cplx(-1.0, 0.2), 2, 1, 0),
        su2_state(2.5, cplx(0.7, 0.2), 5),
        su2_pa_state(2.0, cplx(-0.4, 1.3), 1, 4),
        su11_bg_state(SU11Mode::two(1.5), cplx(1.5, -0.5), 0),
        su11_perelomov_state(SU11Mode::single(-2), cplx(0.3, 0.4), 0),
        su11_pa_perelomov_state(1.0, cplx(0.2, -0.6), 2, 0),
        su11_pa_bg_state(1.0, cplx(0.9, 0.1), 3, 0),
    };
    for (const auto& s : states) {
        CAPTURE(s.family);
        CHECK(distribution(s).sum() == doctest::Approx(1.0 - s.norm_deficit).epsilon(1e-14));
        CHECK(s.norm_deficit < 1e-10);
        CHECK(s.norm_deficit >= -1e-12);
    }
}

TEST_CASE("canonical evolution") {
    cplx zp(0.7, 0.2), zm(-0.3, 0.9);
    auto s = canonical_state(zp, zm, 20);
    EvolutionParams ev{1.3, 0.4, 0.25};
    auto same = evolve_canonical(s, ev, 0.0);
    CHECK((same.coeffs - s.coeffs).cwiseAbs().maxCoeff() < 1e-15);
    for (double tau : {0.3, 1.7, 12.0}) {
        auto e = evolve_canonical(s, ev, tau);
        cplx ep = e.params.at("z_plus_re") + cplx(0, 1) * e.params.at("z_plus_im");
        cplx em = e.params.at("z_minus_re") + cplx(0, 1) * e.params.at("z_minus_im");
        CHECK(std::abs(ep) == doctest::Approx(std::abs(zp)).epsilon(1e-14));
        CHECK(std::abs(em) == doctest::Approx(std::abs(zm)).epsilon(1e-14));
        CHECK(std::abs(ep - zp * std::polar(1.0, -(ev.T1 + ev.T2) * tau)) < 1e-14);
        CHECK(std::abs(e.at(0, 0) - s.at(0, 0) * std::polar(1.0, -(ev.T1 - ev.lambda) * tau)) < 1e-14);
    }
    auto sym = evolve_canonical(s, {1.3, 0.0, 0.0}, 2.0);
    cplx rp = (sym.params.at("z_plus_re") + cplx(0, 1) * sym.params.at("z_plus_im")) / zp;
    cplx rm = (sym.params.at("z_minus_re") + cplx(0, 1) * sym.params.at("z_minus_im")) / zm;
    CHECK(std::abs(rp - rm) < 1e-14);
    CHECK_THROWS_AS(evolve_canonical(su2_state(1, 0.3, 2), ev, 1.0), Error);
}

TEST_CASE("evolution parameters keep T1 >= |T2|") {
    Frame f{};
    f.kappa = 1.0;
    f.M = 1.3;
    f.rho = 0.8;
    f.rho_dot = 0.4;
    f.omega = 1.1;
    f.omega_c = 0.9;
    f.Omega = std::sqrt(1.1 * 1.1 + 0.25 * 0.81);
    auto ev = evolution_params(f);
    CHECK(ev.T2 == doctest::Approx(0.45));
    CHECK(ev.T1 >= std::abs(ev.T2));
}

TEST_CASE("U(1) rotation by the angular momentum") {
    cplx zp(0.9, -0.2), zm(0.3, 0.6);
    const double alpha = 0.77;
    auto s = canonical_state(zp, zm, 24);
    auto ops = fock_operators(s.cutoff);
    Eigen::VectorXcd v = s.to_vector();
    Eigen::VectorXcd rotated(v.size());
    SpMat lz = ops.at("Lz").entries;
    for (int i = 0; i < v.size(); ++i) rotated(i) = std::exp(cplx(0, alpha) * lz.coeff(i, i)) * v(i);
    // L_z = N_- - N_+, so the rotation advances z_- and retards z_+
    auto want = canonical_state(zp * std::polar(1.0, -alpha), zm * std::polar(1.0, alpha), s.cutoff)
                    .resized(s.cutoff)
                    .to_vector();
    CHECK((rotated - want).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("nonlinear states") {
    cplx ap(0.6, 0.3), am(-0.5, 0.8);
    auto one = [](int) { return 1.0; };
    auto nl = nonlinear_state(ap, am, one, one, 20);
    auto c = canonical_state(ap, am, nl.cutoff).resized(nl.cutoff);
    CHECK((nl.coeffs - c.coeffs).cwiseAbs().maxCoeff() < 1e-14);

    auto ground = nonlinear_state(0.0, 0.0, one, one, 3);
    CHECK(std::abs(ground.at(0, 0) - cplx(1, 0)) < 1e-15);

    ModeFunction fp = [](int n) { return 1.0 + 0.1 * n; };
    ModeFunction fm = [](int n) { return 1.0 / std::sqrt(1.0 + 0.05 * n); };
    auto s = nonlinear_state(ap, am, fp, fm, 30);
    auto ops = fock_operators(s.cutoff);
    SpMat Am = ops.at("a_minus").entries * diagonal_of(s.cutoff, [&](int, int m) { return fm(m); });
    SpMat Ap = ops.at("a_plus").entries * diagonal_of(s.cutoff, [&](int p, int) { return fp(p); });
    CHECK(eigen_residual(Am, s, am) < 1e-8);
    CHECK(eigen_residual(Ap, s, ap) < 1e-8);

    CHECK_THROWS_AS(nonlinear_state(0.5, 0.5, [](int n) { return n == 3 ? 0.0 : 1.0; }, one, 10), Error);
    // f shrinking fast enough makes the series diverge
    CHECK_THROWS_AS(nonlinear_state(0.5, 0.5, [](int n) { return 1.0 / n; }, one, 10), Error);
}

TEST_CASE("photon-added states") {
    cplx ap(0.7, -0.4), am(0.2, 0.5);
    auto zero = photon_added_state(ap, am, 0, 0, 10);
    auto c = canonical_state(ap, am, zero.cutoff).resized(zero.cutoff);
    CHECK((zero.coeffs - c.coeffs).cwiseAbs().maxCoeff() < 1e-14);

    auto s = photon_added_state(ap, am, 2, 1, 10);
    for (int m = 0; m <= s.cutoff; ++m) {
        CHECK(s.at(0, m) == cplx(0, 0));
        CHECK(s.at(1, m) == cplx(0, 0));
        CHECK(s.at(m, 0) == cplx(0, 0));
    }
    // Poisson-like display normalized independently
    auto P = distribution(s);
    double total = 0.0;
    Eigen::MatrixXd want = Eigen::MatrixXd::Zero(P.rows(), P.cols());
    for (int np = 0; np + 2 <= s.cutoff; ++np)
        for (int nm = 0; nm + 1 <= s.cutoff; ++nm) {
            double w = std::exp(2 * np * std::log(std::abs(ap)) + 2 * nm * std::log(std::abs(am)) + lfact(np + 2) +
                                lfact(nm + 1) - 2 * lfact(np) - 2 * lfact(nm));
            want(np + 2, nm + 1) = w;
            total += w;
        }
    CHECK((P - want / total).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("photon-added states are eigenstates of the deformed pair lowering") {
    CHECK(pa_nonlinear_function(0, 0, 3, 5) == 1.0);
    CHECK(pa_nonlinear_function(1, 0, 0, 4) == 0.0);
    CHECK(pa_nonlinear_function(2, 0, 3, 7) == 0.5);

    cplx ap(0.8, 0.1), am(-0.3, 0.6);
    const int mp = 2, mm = 1;
    auto s = photon_added_state(ap, am, mp, mm, 20);
    auto ops = fock_operators(s.cutoff);
    // the deformation acts after the pair is lowered
    SpMat A = diagonal_of(s.cutoff, [&](int p, int m) { return pa_nonlinear_function(mp, mm, p, m); }) *
              ops.at("a_plus").entries * ops.at("a_minus").entries;
    CHECK(eigen_residual(A, s, ap * am) < 1e-10);
}

TEST_CASE("SU(2) states") {
    auto low = su2_state(1.5, 0.0, 3);
    CHECK(std::abs(low.at(0, 3) - cplx(1, 0)) < 1e-15);
    CHECK_THROWS_AS(su2_state(2, 0.5, 3), Error);
    CHECK_THROWS_AS(su2_state(0.7, 0.5, 3), Error);

    auto a = su2_state(0.5, 0.0, 1), b = su2_state(0.5, 1.0, 1);
    CHECK(std::abs(overlap(a, b)) == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-14));

    for (double j : {0.5, 1.0, 2.5, 4.0}) {
        cplx z1(0.4, -0.9), z2(-1.3, 0.2);
        int n = int(2 * j);
        cplx got = overlap(su2_state(j, z1, n), su2_state(j, z2, n));
        cplx want = std::pow(1 + std::norm(z1), -j) * std::pow(1 + std::norm(z2), -j) *
                    std::pow(1.0 + std::conj(z1) * z2, 2 * j);
        CHECK(std::abs(got - want) < 1e-12);
        // support on the anti-diagonal n_+ + n_- = 2j
        auto s = su2_state(j, z1, n + 2);
        for (int p = 0; p <= n + 2; ++p)
            for (int m = 0; m <= n + 2; ++m)
                if (p + m != n) CHECK(s.at(p, m) == cplx(0, 0));
    }
}

TEST_CASE("SU(2) photon-added states") {
    cplx z(0.6, 0.8);
    auto base = su2_state(2.0, z, 4), zero = su2_pa_state(2.0, z, 0, 4);
    CHECK((base.coeffs - zero.coeffs).cwiseAbs().maxCoeff() < 1e-13);
    CHECK(hypergeometric({1.0, -4.0}, {1.0}, -std::norm(z)) ==
          doctest::Approx(std::pow(1 + std::norm(z), 4)).epsilon(1e-13));

    auto full = su2_pa_state(1.5, z, 3, 3);
    CHECK(std::abs(std::abs(full.at(3, 0)) - 1.0) < 1e-14);
    CHECK(full.norm2() == doctest::Approx(1.0).epsilon(1e-14));

    for (int p = 0; p <= 4; ++p) {
        auto s = su2_pa_state(2.0, cplx(-0.5, 1.1), p, 4);
        CHECK(std::abs(s.norm_deficit) < 1e-12);
    }
    CHECK_THROWS_AS(su2_pa_state(1.0, z, 3, 4), Error);
}

TEST_CASE("Barut-Girardello states") {
    auto ground = su11_bg_state(SU11Mode::single(2), 0.0, 4);
    CHECK(std::abs(std::abs(ground.at(2, 0)) - 1.0) < 1e-15);

    // series oracle for the modified Bessel normalization
    double series = 0.0;
    for (int m = 0; m < 40; ++m) series += 1.0 / std::exp(lfact(m) + std::lgamma(m + 1.0));
    CHECK(series == doctest::Approx(2.2795853023360673).epsilon(1e-14));
    CHECK(bessel(BesselKind::I, 0, 2.0) == doctest::Approx(series).epsilon(1e-13));

    for (int ell : {0, 1, -2}) {
        cplx z1(0.7, 0.4), z2(-0.2, 1.1);
        auto a = su11_bg_state(SU11Mode::single(ell), z1, 30), b = su11_bg_state(SU11Mode::single(ell), z2, 30);
        int n = std::max(a.cutoff, b.cutoff);
        int L = std::abs(ell);
        cplx got = overlap(a.resized(n), b.resized(n));
        cplx w = 2.0 * std::sqrt(std::conj(z1) * z2);
        // I_L(w) / (w/2)^L is entire; evaluated through the reduced series
        cplx reduced = bessel_i_reduced(L, w * w / 4.0);
        double na = std::pow(std::abs(z1), L) / bessel(BesselKind::I, L, 2 * std::abs(z1));
        double nb = std::pow(std::abs(z2), L) / bessel(BesselKind::I, L, 2 * std::abs(z2));
        cplx want = std::sqrt(na * nb) * reduced;
        CHECK(std::abs(got - want) < 1e-8);
        if (ell < 0) CHECK(a.at(0, L) != cplx(0, 0));
    }

    for (double k : {0.5, 1.0, 1.5}) {
        cplx z(1.1, -0.6);
        auto s = su11_bg_state(SU11Mode::two(k), z, 30);
        auto ops = fock_operators(s.cutoff);
        CHECK(eigen_residual(ops.at("K_minus").entries, s, z) < 1e-8);
    }
}

TEST_CASE("Perelomov states") {
    auto low = su11_perelomov_state(SU11Mode::two(1.0), 0.0, 4);
    CHECK(std::abs(std::abs(low.at(1, 0)) - 1.0) < 1e-15);
    CHECK_THROWS_AS(su11_perelomov_state(SU11Mode::two(1.0), 1.0, 4), Error);

    auto s = su11_perelomov_state(SU11Mode::two(1.5), cplx(0.3, 0.4), 0);
    CHECK(std::abs(s.norm_deficit) < 1e-10);

    for (int ell : {0, 1, 3}) {
        cplx e1(0.3, -0.2), e2(-0.1, 0.5);
        auto a = su11_perelomov_state(SU11Mode::single(ell), e1, 0);
        auto b = su11_perelomov_state(SU11Mode::single(ell), e2, 0);
        int n = std::max(a.cutoff, b.cutoff);
        cplx got = overlap(a.resized(n), b.resized(n));
        double x = (ell + 1) / 2.0;
        cplx want = std::pow((1 - std::norm(e1)) * (1 - std::norm(e2)), x) *
                    std::pow(1.0 - std::conj(e1) * e2, -double(ell + 1));
        CHECK(std::abs(got - want) < 1e-10);
        CHECK(a.params.at("paper_prefactor_exponent") == ell + 1);
    }
}

TEST_CASE("photon-added Perelomov states") {
    cplx eta(0.4, -0.3);
    auto base = su11_perelomov_state(SU11Mode::two(1.0), eta, 0);
    auto zero = su11_pa_perelomov_state(1.0, eta, 0, 0);
    int n = std::max(base.cutoff, zero.cutoff);
    CHECK(std::abs(std::abs(overlap(base.resized(n), zero.resized(n))) - 1.0) < 1e-12);

    const double k = 1.5;
    const int l = 2;
    auto s = su11_pa_perelomov_state(k, eta, l, 0);
    const int L = 2;  // lattice offset 2k - 1
    for (int m = 0; m < l; ++m) CHECK(s.at(m + L, m) == cplx(0, 0));
    // photon distribution against |eta|^{2m} / F_l(k, m), normalized independently
    double total = 0.0;
    std::vector<double> w;
    for (int m = 0; m + l + L <= s.cutoff; ++m) {
        double log_f = 2 * lfact(m) + std::lgamma(2 * k) - std::lgamma(m + l + 1.0) - std::lgamma(m + 2 * k + l);
        w.push_back(std::exp(2 * m * std::log(std::abs(eta)) - log_f));
        total += w.back();
    }
    auto P = distribution(s);
    for (std::size_t m = 0; m < w.size(); ++m) CHECK(std::abs(P(m + l + L, m + l) - w[m] / total) < 1e-10);
    CHECK(pa_perelomov_weight(k, l, 3) == doctest::Approx(std::exp(2 * lfact(3) + std::lgamma(3.0) -
                                                                     std::lgamma(6.0) - std::lgamma(8.0))));
}

TEST_CASE("photon-added Barut-Girardello states") {
    cplx z(0.8, 0.5);
    auto base = su11_bg_state(SU11Mode::two(1.0), z, 0);
    auto zero = su11_pa_bg_state(1.0, z, 0, 0);
    int n = std::max(base.cutoff, zero.cutoff);
    CHECK(std::abs(std::abs(overlap(base.resized(n), zero.resized(n))) - 1.0) < 1e-12);

    auto lowest = su11_pa_bg_state(1.0, 0.0, 2, 0);
    CHECK(std::abs(std::abs(lowest.at(3, 2)) - 1.0) < 1e-15);

    // overlap closed form through a 2F3 series at k = 1, n = n' = 1, z1 = z2 = 0.5
    const double k = 1.0;
    auto a = su11_pa_bg_state(k, 0.5, 1, 0);
    cplx got = overlap(a, a);
    double x = 0.25;
    double f23 = hypergeometric({2.0, 3.0}, {1.0, 2.0, 2.0}, x);
    double norm = hypergeometric({2.0, 3.0}, {1.0, 2.0, 2.0}, x);
    CHECK(std::abs(got - f23 / norm) < 1e-7);
    auto b = su11_pa_bg_state(k, 0.3, 1, a.cutoff);
    int m = std::max(a.cutoff, b.cutoff);
    double want = hypergeometric({2.0, 3.0}, {1.0, 2.0, 2.0}, 0.5 * 0.3) /
                  std::sqrt(hypergeometric({2.0, 3.0}, {1.0, 2.0, 2.0}, 0.25) *
                            hypergeometric({2.0, 3.0}, {1.0, 2.0, 2.0}, 0.09));
    CHECK(std::abs(overlap(a.resized(m), b.resized(m)) - want) < 1e-7);
}

TEST_CASE("single-mode closed-form wavefunctions match Fock sums") {
    Frame f{};
    f.kappa = 1.0;
    f.M = 1.2;
    f.rho = 0.9;
    f.rho_dot = -0.35;
    const double theta = 0.6;
    for (int ell : {0, 1, 2}) {
        for (auto fam : {SingleModeFamily::bg, SingleModeFamily::perelomov}) {
            cplx param = fam == SingleModeFamily::bg ? cplx(0.9, 0.4) : cplx(0.35, -0.25);
            auto s = fam == SingleModeFamily::bg ? su11_bg_state(SU11Mode::single(ell), param, 0)
                                                 : su11_perelomov_state(SU11Mode::single(ell), param, 0);
            double worst = 0.0;
            for (int i = 0; i <= 100; ++i) {
                double u = 0.1 * i, r = f.rho * std::sqrt(u / f.kappa);
                cplx sum = 0.0;
                for (int m = 0; m + ell <= s.cutoff; ++m)
                    sum += s.at(m + ell, m) * wavefunction_polar({m + ell, m}, f, r, theta);
                worst = std::max(worst, std::abs(sum - single_mode_wavefunction(fam, ell, param, f, u, theta)));
            }
            CAPTURE(ell);
            CHECK(worst < 1e-7);
        }
    }
    // only the lowest term survives at zero parameter
    cplx bg0 = single_mode_wavefunction(SingleModeFamily::bg, 1, 0.0, f, 2.0, 0.0);
    cplx pe0 = single_mode_wavefunction(SingleModeFamily::perelomov, 1, 0.0, f, 2.0, 0.0);
    CHECK(std::abs(bg0 - pe0) < 1e-15);
    CHECK(std::abs(bg0 - wavefunction_polar({1, 0}, f, f.rho * std::sqrt(2.0), 0.0)) < 1e-15);
    CHECK_THROWS_AS(single_mode_wavefunction(SingleModeFamily::perelomov, 0, 1.2, f, 1.0, 0.0), Error);
}

TEST_CASE("weight functions reproduce their moments") {
    auto canon = weight_spec("canonical", {});
    CHECK(integrate_positive_axis([&](double x) { return x * x * x * canon.evaluator(x); }) ==
          doctest::Approx(6.0).epsilon(1e-10));

    auto su2 = weight_spec("su2_pa", {{"j", 1}, {"p", 0}});
    CHECK(su2.moment_target(0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(weight_spec("su2_pa", {{"j", 1}, {"p", 3}}), Error);
    CHECK_THROWS_AS(weight_spec("squeezed", {}), Error);

    std::vector<WeightSpec> specs{canon};
    for (double j : {0.5, 1.0, 1.5, 2.0})
        for (int p = 0; p <= int(2 * j); ++p) specs.push_back(weight_spec("su2_pa", {{"j", j}, {"p", double(p)}}));
    for (const auto& w : specs) {
        std::map<double, double> memo;
        auto weight = [&](double x) {
            auto it = memo.find(x);
            return it != memo.end() ? it->second : memo[x] = w.evaluator(x);
        };
        for (int m = 0; m <= std::min(6, w.max_moment); ++m) {
            double got = integrate_positive_axis([&](double x) { return std::pow(x, m) * weight(x); }, 1e-11);
            CAPTURE(w.family);
            CAPTURE(m);
            CHECK(std::abs(got / w.moment_target(m) - 1.0) < 1e-5);
            CHECK(w.moment_target(m) > 0.0);
        }
    }

    ModeFunction fp = [](int n) { return 1.0 + 0.5 * n; };
    CHECK(nonlinear_moment_target(3, fp) == doctest::Approx(6.0 * std::pow(1.5 * 2.0 * 2.5, 2)));
}
