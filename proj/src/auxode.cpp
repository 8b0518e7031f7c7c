#include "landau/auxode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "landau/errors.hpp"
#include "landau/quadrature.hpp"
#include "landau/specfun.hpp"

namespace landau {

using cd = std::complex<double>;

const char* provenance_name(AuxProvenance p)
{
    switch (p) {
    case AuxProvenance::numeric: return "numeric";
    case AuxProvenance::pinney_constant: return "pinney_constant";
    case AuxProvenance::bessel_exponential: return "bessel_exponential";
    case AuxProvenance::yermakov_dissipative: return "yermakov_dissipative";
    case AuxProvenance::sampled: return "sampled";
    }
    return "?";
}

AuxProvenance parse_closed_form_kind(const std::string& name)
{
    if (name == "pinney_constant") return AuxProvenance::pinney_constant;
    if (name == "bessel_exponential") return AuxProvenance::bessel_exponential;
    if (name == "yermakov_dissipative") return AuxProvenance::yermakov_dissipative;
    fail(Errc::UnsupportedKind, "closed form '" + name + "'");
}

std::vector<double> uniform_grid(double t0, double t1, int points)
{
    if (points < 2) fail(Errc::GridTooShort, "need at least two grid points");
    std::vector<double> g(points);
    for (int i = 0; i < points; ++i) g[i] = t0 + (t1 - t0) * i / (points - 1);
    g.back() = t1;
    return g;
}

double ep_rho_ddot(const ParameterProfile& profile, double t, double rho, double rho_dot)
{
    const double M = profile.M(t);
    const double Om = eval_derived(profile, t).Omega;
    const double k = profile.kappa();
    return -profile.Mdot(t) / M * rho_dot - Om * Om * rho + k * k / (M * M * rho * rho * rho);
}

AuxState adiabatic_initial(const ParameterProfile& profile, double t)
{
    return {std::sqrt(profile.kappa() / (profile.M(t) * eval_derived(profile, t).Omega)), 0.0};
}

AuxiliarySolution solve_ep_numeric(const ParameterProfile& profile, double rho0, double rho_dot0,
                                   const std::vector<double>& grid, const OdeOptions& opts)
{
    if (!(rho0 > 0.0)) fail(Errc::PreconditionViolation, "rho0 must be positive");
    if (grid.empty()) fail(Errc::GridTooShort, "empty grid");
    for (double t : {grid.front(), grid.back()})
        if (!profile.in_domain(t)) fail(Errc::OutOfDomain, "grid leaves the profile domain");

    auto rhs = [&](double t, const std::array<double, 2>& y) {
        return std::array<double, 2>{y[1], ep_rho_ddot(profile, t, y[0], y[1])};
    };
    auto admissible = [](const std::array<double, 2>& y) { return y[0] > 0.0 && y[0] < 1e150; };
    const auto states = integrate_on_grid<2>(rhs, {rho0, rho_dot0}, grid, opts, admissible);

    AuxiliarySolution sol;
    sol.grid = grid;
    sol.provenance = AuxProvenance::numeric;
    for (const auto& s : states) {
        sol.rho.push_back(s[0]);
        sol.rho_dot.push_back(s[1]);
    }
    sol.max_residual = grid.size() >= 5 ? ep_residual(sol, profile) : 0.0;
    return sol;
}

AuxiliarySolution solve_ep_numeric(const ParameterProfile& profile, const std::vector<double>& grid,
                                   const OdeOptions& opts)
{
    if (grid.empty()) fail(Errc::GridTooShort, "empty grid");
    const AuxState s0 = adiabatic_initial(profile, grid.front());
    return solve_ep_numeric(profile, s0.rho, s0.rho_dot, grid, opts);
}

namespace {

AuxState pinney(const ParamTable& p, double t)
{
    const double w = p.get("omega");
    const double tau = p.get_or("tau", 1.0);
    const double nu = p.has("nu") ? p.get("nu") : p.get("kappa") / tau;
    const double a1 = p.get_or("a1", 1.0), b1 = p.get_or("b1", 0.0);
    const double a2 = p.get_or("a2", 0.0), b2 = p.get_or("b2", 1.0);
    const double W = w * (a1 * b2 - b1 * a2);
    if (W == 0.0) fail(Errc::SingularParameter, "Wronskian vanishes");
    const double c = std::cos(w * t), s = std::sin(w * t);
    const double v1 = a1 * c + b1 * s, v2 = a2 * c + b2 * s;
    const double d1 = w * (-a1 * s + b1 * c), d2 = w * (-a2 * s + b2 * c);
    const double g = nu * nu / (W * W);
    const double rho = std::sqrt(v1 * v1 + g * v2 * v2);
    return {rho, (v1 * d1 + g * v2 * d2) / rho};
}

double bessel_rho(const ParamTable& p, double t)
{
    const double tau = p.get("tau"), alpha = p.get("alpha"), A = p.get("A1");
    const double nu = p.get("kappa") / p.get_or("M", 1.0);
    if (A == 0.0) fail(Errc::SingularParameter, "A1 = 0");
    if (alpha == 0.0 || !(tau > 0.0)) fail(Errc::SingularParameter, "need alpha != 0 and tau > 0");
    const double xi = tau / alpha * std::exp(alpha * t);
    if (!(xi > 0.0)) fail(Errc::SingularParameter, "Bessel argument must be positive");
    const double J = bessel(BesselKind::J, 0.0, xi), Y = bessel(BesselKind::Y, 0.0, xi);
    const double pi = std::numbers::pi;
    return std::sqrt(A * A * J * J + nu * nu * pi * pi / (4.0 * alpha * alpha * A * A) * Y * Y);
}

double yermakov_rho(const ParamTable& p, double t)
{
    const double alpha = p.get("alpha"), kappa = p.get("kappa");
    const double d1 = p.get("d1"), d2 = p.get("d2");
    const double e1 = p.get("e1"), e2 = p.get("e2");
    if (d1 == 0.0) fail(Errc::SingularParameter, "d1 = 0");
    if (!(d2 > 0.0)) fail(Errc::SingularParameter, "d2 must be positive for a real rho");
    if (alpha == 0.0) fail(Errc::SingularParameter, "alpha = 0");
    // s = R sin(theta), theta = alpha u + phi; int_0^t du / s^2 = (cot phi - cot theta) / (alpha R^2), so
    // s (d2 + d1 int) is a trigonometric polynomial and stays finite through the roots of s
    const double R = std::hypot(e1, e2);
    const double phi = std::atan2(e2, e1);
    if (R == 0.0 || std::abs(std::sin(phi)) < 1e-12)
        fail(Errc::SingularParameter, "s(0) = 0: the integral from 0 diverges");
    const double theta = alpha * t + phi;
    const double st = R * std::sin(theta);
    const double weighted = d2 * st + d1 * (std::sin(theta) / std::tan(phi) - std::cos(theta)) / (alpha * R);
    const double sq = kappa * kappa * d2 / (d1 * d1) * st * st + weighted * weighted / d2;
    return std::exp(0.5 * alpha * t) * std::sqrt(sq);
}

} // namespace

AuxState ep_closed_form(AuxProvenance kind, const ParamTable& params, double t)
{
    const double span = params.get_or("t1", 10.0) - params.get_or("t0", 0.0);
    const double h = 1e-6 * span;
    switch (kind) {
    case AuxProvenance::pinney_constant: return pinney(params, t);
    case AuxProvenance::bessel_exponential: {
        const double r = bessel_rho(params, t);
        return {r, (bessel_rho(params, t + h) - bessel_rho(params, t - h)) / (2.0 * h)};
    }
    case AuxProvenance::yermakov_dissipative: {
        const double r = yermakov_rho(params, t);
        return {r, (yermakov_rho(params, t + h) - yermakov_rho(params, t - h)) / (2.0 * h)};
    }
    default: fail(Errc::UnsupportedKind, "not a closed-form kind");
    }
}

ParameterProfile closed_form_profile(AuxProvenance kind, const ParamTable& params)
{
    ParamTable p;
    p.set("t0", params.get_or("t0", 0.0));
    p.set("t1", params.get_or("t1", 10.0));
    switch (kind) {
    case AuxProvenance::pinney_constant: {
        const double tau = params.get_or("tau", 1.0);
        p.set("kappa", params.has("nu") ? params.get("nu") * tau : params.get("kappa"));
        p.set("M", tau);
        p.set("omega", params.get("omega"));
        return make_profile("constant", p);
    }
    case AuxProvenance::bessel_exponential:
        p.set("kappa", params.get("kappa"));
        p.set("M0", params.get_or("M", 1.0));
        p.set("alpha", 0.0);
        p.set("omega0", params.get("tau"));
        p.set("beta", params.get("alpha"));
        return make_profile("exponential", p);
    case AuxProvenance::yermakov_dissipative: {
        const double a = params.get("alpha");
        p.set("kappa", params.get("kappa"));
        p.set("alpha", a);
        p.set("omega0", 0.5 * std::sqrt(5.0) * a);
        return make_profile("exponential", p);
    }
    default: fail(Errc::UnsupportedKind, "not a closed-form kind");
    }
}

AuxiliarySolution sample_closed_form(AuxProvenance kind, const ParamTable& params, const std::vector<double>& grid)
{
    AuxiliarySolution sol;
    sol.grid = grid;
    sol.provenance = kind;
    for (double t : grid) {
        const AuxState s = ep_closed_form(kind, params, t);
        if (!(s.rho > 0.0)) fail(Errc::SingularParameter, "closed form gives non-positive rho");
        sol.rho.push_back(s.rho);
        sol.rho_dot.push_back(s.rho_dot);
    }
    if (grid.size() >= 5) sol.max_residual = ep_residual(sol, closed_form_profile(kind, params));
    return sol;
}

std::vector<double> fd_weights(double x0, const std::vector<double>& x, int order)
{
    const int n = static_cast<int>(x.size());
    std::vector<std::vector<double>> c(n, std::vector<double>(order + 1, 0.0));
    double c1 = 1.0, c4 = x[0] - x0;
    c[0][0] = 1.0;
    for (int i = 1; i < n; ++i) {
        const int mn = std::min(i, order);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = x[i] - x0;
        for (int j = 0; j < i; ++j) {
            const double c3 = x[i] - x[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k) c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    std::vector<double> w(n);
    for (int i = 0; i < n; ++i) w[i] = c[i][order];
    return w;
}

std::vector<double> ep_residual_samples(const AuxiliarySolution& sol, const ParameterProfile& profile)
{
    const std::size_t n = sol.grid.size();
    if (n < 5) fail(Errc::GridTooShort, "residual needs at least 5 samples");
    std::vector<double> r(n, std::numeric_limits<double>::quiet_NaN());
    const double k = profile.kappa();
    // sixth-order seven-point stencil when the grid allows, fourth-order five-point otherwise
    const std::size_t half = n >= 7 ? 3 : 2;
    for (std::size_t i = half; i + half < n; ++i) {
        const std::vector<double> nodes(sol.grid.begin() + (i - half), sol.grid.begin() + (i + half + 1));
        const auto w = fd_weights(sol.grid[i], nodes, 2);
        double rdd = 0.0;
        for (std::size_t j = 0; j < nodes.size(); ++j) rdd += w[j] * sol.rho[i - half + j];
        const double t = sol.grid[i], rho = sol.rho[i];
        const double M = profile.M(t), Om = eval_derived(profile, t).Omega;
        r[i] = std::abs(rdd + profile.Mdot(t) / M * sol.rho_dot[i] + Om * Om * rho - k * k / (M * M * rho * rho * rho));
    }
    return r;
}

double ep_residual(const AuxiliarySolution& sol, const ParameterProfile& profile)
{
    double worst = 0.0;
    for (double v : ep_residual_samples(sol, profile))
        if (!std::isnan(v)) worst = std::max(worst, v);
    return worst;
}

AuxState aux_at(const AuxiliarySolution& sol, const ParameterProfile& profile, double t)
{
    const auto& g = sol.grid;
    if (g.empty()) fail(Errc::GridTooShort, "empty auxiliary solution");
    const double slack = 1e-12 * std::max(1.0, std::abs(g.back() - g.front()));
    if (t < g.front() - slack || t > g.back() + slack) fail(Errc::OutOfDomain, "t outside auxiliary grid");
    if (g.size() == 1) return {sol.rho[0], sol.rho_dot[0]};
    auto it = std::upper_bound(g.begin(), g.end(), t);
    std::size_t i = (it == g.begin()) ? 0 : static_cast<std::size_t>(it - g.begin()) - 1;
    i = std::min(i, g.size() - 2);
    if (t == g[i]) return {sol.rho[i], sol.rho_dot[i]};

    const double h = g[i + 1] - g[i];
    const double s = std::clamp((t - g[i]) / h, 0.0, 1.0);
    const double y0 = sol.rho[i], y1 = sol.rho[i + 1];
    const double d0 = sol.rho_dot[i], d1 = sol.rho_dot[i + 1];
    if (sol.provenance == AuxProvenance::sampled) {
        const double s2 = s * s, s3 = s2 * s;
        const double rho = y0 * (2 * s3 - 3 * s2 + 1) + h * d0 * (s3 - 2 * s2 + s) + y1 * (3 * s2 - 2 * s3) +
                           h * d1 * (s3 - s2);
        const double rho_dot = 6 * (y0 - y1) * (s2 - s) / h + d0 * (3 * s2 - 4 * s + 1) + d1 * (3 * s2 - 2 * s);
        return {rho, rho_dot};
    }
    const double a0 = ep_rho_ddot(profile, g[i], y0, d0), a1 = ep_rho_ddot(profile, g[i + 1], y1, d1);
    const double s2 = s * s, s3 = s2 * s, s4 = s3 * s, s5 = s4 * s;
    const double H0 = 1 - 10 * s3 + 15 * s4 - 6 * s5, H1 = s - 6 * s3 + 8 * s4 - 3 * s5;
    const double H2 = 0.5 * (s2 - 3 * s3 + 3 * s4 - s5), H3 = 10 * s3 - 15 * s4 + 6 * s5;
    const double H4 = -4 * s3 + 7 * s4 - 3 * s5, H5 = 0.5 * (s3 - 2 * s4 + s5);
    const double D0 = -30 * s2 + 60 * s3 - 30 * s4, D1 = 1 - 18 * s2 + 32 * s3 - 15 * s4;
    const double D2 = 0.5 * (2 * s - 9 * s2 + 12 * s3 - 5 * s4), D3 = 30 * s2 - 60 * s3 + 30 * s4;
    const double D4 = -12 * s2 + 28 * s3 - 15 * s4, D5 = 0.5 * (3 * s2 - 8 * s3 + 5 * s4);
    const double rho = y0 * H0 + h * d0 * H1 + h * h * a0 * H2 + y1 * H3 + h * d1 * H4 + h * h * a1 * H5;
    const double rho_dot = (y0 * D0 + y1 * D3) / h + d0 * D1 + d1 * D4 + h * (a0 * D2 + a1 * D5);
    return {rho, rho_dot};
}

ClassicalTrajectory classical_trajectory(const ParameterProfile& profile, cd z0, cd z_dot0,
                                         const std::vector<double>& grid, const OdeOptions& opts)
{
    if (grid.empty()) fail(Errc::GridTooShort, "empty grid");
    for (double t : {grid.front(), grid.back()})
        if (!profile.in_domain(t)) fail(Errc::OutOfDomain, "grid leaves the profile domain");
    const double q = profile.q();
    auto E0 = [&](double t) {
        const auto E = profile.E(t);
        return q * cd(E[0], E[1]) / profile.M(t);
    };

    ClassicalTrajectory traj;
    traj.grid = grid;
    const double t0 = grid.front();
    const auto d = eval_derived(profile, t0);
    const double w = profile.omega(t0);
    if (w == 0.0 && std::abs(E0(t0)) != 0.0) fail(Errc::ZeroFrequencyParticular, "E0/omega^2 undefined");

    if (profile.is_static() && d.Omega > 0.0) {
        const cd i(0.0, 1.0);
        const double wp = d.Omega + 0.5 * d.omega_c, wm = d.Omega - 0.5 * d.omega_c;
        const cd P = E0(t0) / (w * w);
        // A, B fixed at t0 via shifted time
        const cd Bc = (z_dot0 + i * wp * (z0 - P)) / (i * (wp + wm));
        const cd Ac = z0 - P - Bc;
        for (double t : grid) {
            const double s = t - t0;
            const cd ep = std::exp(-i * wp * s), em = std::exp(i * wm * s);
            traj.z.push_back(Ac * ep + Bc * em + P);
            traj.z_dot.push_back(-i * wp * Ac * ep + i * wm * Bc * em);
        }
        traj.closed_form = true;
        return traj;
    }

    auto rhs = [&](double t, const std::array<double, 4>& y) {
        const cd z(y[0], y[1]), zd(y[2], y[3]);
        const double wc = eval_derived(profile, t).omega_c, om = profile.omega(t);
        const cd zdd = E0(t) - cd(0.0, wc) * zd - om * om * z;
        return std::array<double, 4>{y[2], y[3], zdd.real(), zdd.imag()};
    };
    const auto states = integrate_on_grid<4>(rhs, {z0.real(), z0.imag(), z_dot0.real(), z_dot0.imag()}, grid, opts,
                                             [](const std::array<double, 4>&) { return true; });
    for (const auto& s : states) {
        traj.z.emplace_back(s[0], s[1]);
        traj.z_dot.emplace_back(s[2], s[3]);
    }
    return traj;
}

double classical_eom_residual(const ClassicalTrajectory& traj, const ParameterProfile& profile)
{
    const std::size_t n = traj.grid.size();
    if (n < 5) fail(Errc::GridTooShort, "residual needs at least 5 samples");
    double worst = 0.0;
    for (std::size_t i = 2; i + 2 < n; ++i) {
        const std::vector<double> nodes(traj.grid.begin() + (i - 2), traj.grid.begin() + (i + 3));
        const auto w = fd_weights(traj.grid[i], nodes, 1);
        cd zdd(0.0, 0.0);
        for (int j = 0; j < 5; ++j) zdd += w[j] * traj.z_dot[i - 2 + j];
        const double t = traj.grid[i];
        const auto E = profile.E(t);
        const cd E0 = profile.q() * cd(E[0], E[1]) / profile.M(t);
        const double wc = eval_derived(profile, t).omega_c, om = profile.omega(t);
        worst = std::max(worst, std::abs(zdd + cd(0.0, wc) * traj.z_dot[i] + om * om * traj.z[i] - E0));
    }
    return worst;
}

PhasePoint gauge_map(double q, double B, double M, double omega, double E1, double E2, const PhasePoint& in)
{
    if (omega == 0.0) fail(Errc::ZeroFrequency, "gauge shift divides by omega^2");
    const double den = M * omega * omega;
    return {in.x + q * E1 / den, in.y + q * E2 / den, in.px - q * q * B * E2 / (2.0 * den),
            in.py - q * q * B * E1 / (2.0 * den)};
}

PhasePoint gauge_unmap(double q, double B, double M, double omega, double E1, double E2, const PhasePoint& in)
{
    if (omega == 0.0) fail(Errc::ZeroFrequency, "gauge shift divides by omega^2");
    const double den = M * omega * omega;
    return {in.x - q * E1 / den, in.y - q * E2 / den, in.px + q * q * B * E2 / (2.0 * den),
            in.py + q * q * B * E1 / (2.0 * den)};
}

PhasePoint gauge_map(const ParameterProfile& profile, double t, const PhasePoint& in)
{
    const auto E = profile.E(t);
    return gauge_map(profile.q(), profile.B(), profile.M(t), profile.omega(t), E[0], E[1], in);
}

double ermakov_invariant(double x, double x_dot, double rho, double rho_dot, double M, double kappa)
{
    const double w = rho * x_dot - rho_dot * x;
    return 0.5 * (kappa * kappa * x * x / (rho * rho) + w * w * M * M);
}

} // namespace landau
