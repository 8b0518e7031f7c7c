#pragma once

#include <complex>
#include <string>
#include <vector>

#include "landau/ode.hpp"
#include "landau/profiles.hpp"

namespace landau {

// `sampled`: caller-supplied (rho, rho_dot) that need not solve the equation; interpolated as a cubic
enum class AuxProvenance { numeric, pinney_constant, bessel_exponential, yermakov_dissipative, sampled };
const char* provenance_name(AuxProvenance p);
AuxProvenance parse_closed_form_kind(const std::string& name);

struct AuxiliarySolution {
    std::vector<double> grid;
    std::vector<double> rho;
    std::vector<double> rho_dot;
    AuxProvenance provenance = AuxProvenance::numeric;
    double max_residual = 0.0;
};

struct AuxState {
    double rho;
    double rho_dot;
};

std::vector<double> uniform_grid(double t0, double t1, int points);

// right-hand side of the Ermakov-Pinney equation solved for rho''
double ep_rho_ddot(const ParameterProfile& profile, double t, double rho, double rho_dot);

// adiabatic stationary point rho = (kappa/(M Omega))^{1/2}, rho' = 0
AuxState adiabatic_initial(const ParameterProfile& profile, double t);

AuxiliarySolution solve_ep_numeric(const ParameterProfile& profile, double rho0, double rho_dot0,
                                   const std::vector<double>& grid, const OdeOptions& opts = {});
AuxiliarySolution solve_ep_numeric(const ParameterProfile& profile, const std::vector<double>& grid,
                                   const OdeOptions& opts = {});

// Closed forms. Keys:
//  pinney_constant: omega, kappa (or nu), tau=1, a1=1, b1=0, a2=0, b2=1 with v1 = a1 cos wt + b1 sin wt, v2 likewise
//  bessel_exponential: tau, alpha, kappa, A1, M=1 with Omega = tau e^{alpha t}
//  yermakov_dissipative: alpha, kappa, d1, d2, e1, e2 with M = e^{-alpha t}, Omega = (sqrt5/2) alpha
//  all: t0=0, t1=10 (window for the finite-difference step and the matching profile)
AuxState ep_closed_form(AuxProvenance kind, const ParamTable& params, double t);
ParameterProfile closed_form_profile(AuxProvenance kind, const ParamTable& params);
AuxiliarySolution sample_closed_form(AuxProvenance kind, const ParamTable& params, const std::vector<double>& grid);

// pointwise residual with a seven-point (five-point below 7 samples) second difference; NaN where the stencil
// does not fit
std::vector<double> ep_residual_samples(const AuxiliarySolution& sol, const ParameterProfile& profile);
double ep_residual(const AuxiliarySolution& sol, const ParameterProfile& profile);

// quintic Hermite interpolation with rho'' from the equation itself
AuxState aux_at(const AuxiliarySolution& sol, const ParameterProfile& profile, double t);

struct ClassicalTrajectory {
    std::vector<double> grid;
    std::vector<std::complex<double>> z;
    std::vector<std::complex<double>> z_dot;
    bool closed_form = false;
};

// z = x1 + i x2 obeys z'' + i w_c z' + w^2 z = E0, E0 = q(E1 + i E2)/M
ClassicalTrajectory classical_trajectory(const ParameterProfile& profile, std::complex<double> z0,
                                         std::complex<double> z_dot0, const std::vector<double>& grid,
                                         const OdeOptions& opts = {});
double classical_eom_residual(const ClassicalTrajectory& traj, const ParameterProfile& profile);

struct PhasePoint {
    double x, y, px, py;
};

PhasePoint gauge_map(double q, double B, double M, double omega, double E1, double E2, const PhasePoint& in);
PhasePoint gauge_unmap(double q, double B, double M, double omega, double E1, double E2, const PhasePoint& in);
PhasePoint gauge_map(const ParameterProfile& profile, double t, const PhasePoint& in);

// classical content of the invariant for one Cartesian component
double ermakov_invariant(double x, double x_dot, double rho, double rho_dot, double M, double kappa);

// finite-difference weights (Fornberg) for derivative `order` at x0 over nodes
std::vector<double> fd_weights(double x0, const std::vector<double>& nodes, int order);

} // namespace landau
