#pragma once

#include <string>
#include <utility>
#include <vector>

#include "landau/auxode.hpp"
#include "landau/coherent.hpp"
#include "landau/profiles.hpp"
#include "landau/spectrum.hpp"

namespace landau {

struct CheckReport {
    std::string name;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::vector<std::pair<std::string, double>> details;
};

CheckReport make_report(std::string name, double residual, double tol,
                        std::vector<std::pair<std::string, double>> details = {});

// Gram matrix of all states with n_+, n_- <= n_max. A gap between the `radial_nodes` and
// 2*radial_nodes Gram matrices above tol fails the report (detail "nonconvergent" = 1).
CheckReport orthonormality_check(const ParameterProfile& profile, const AuxiliarySolution& aux, double t,
                                 int n_max, double tol, int radial_nodes = 96);

// Delta x Delta p_x of the (n, ell) eigenfunction by 2D quadrature
double uncertainty_quadrature(int n, int ell, const Frame& f, int radial_nodes = 128);

struct SpacetimePoint {
    double t, x, y;
};

// max |i d_t psi - H psi| / max |psi| under one phase convention
double schrodinger_residual(const HelicityQuanta& q, const ParameterProfile& profile, const AuxiliarySolution& aux,
                            const std::vector<SpacetimePoint>& points, PhaseConvention convention);
// one report per convention: integrated, paper_closed_form, zero (control)
std::vector<CheckReport> schrodinger_residual_check(const HelicityQuanta& q, const ParameterProfile& profile,
                                                    const AuxiliarySolution& aux,
                                                    const std::vector<SpacetimePoint>& points, double tol);

CheckReport lr_invariant_check(const ParameterProfile& profile, const AuxiliarySolution& aux, double t, int cutoff,
                               double tol);

CheckReport algebra_check(int cutoff, double tol);

// relative moment error for m <= min(m_max, spec.max_moment); Gaussian smoothing is deconvolved
CheckReport moment_problem_check(const WeightSpec& spec, int m_max, double tol);

// a_+-, A_+- = a_+- f(N_+-), K_- eigenvalue residuals on the interior block
CheckReport eigenvector_check(int cutoff, cplx z_plus, cplx z_minus, cplx bg_z, double tol);

// coefficient inner products against the closed-form overlaps (canonical modulus, SU(2), single-mode BG,
// Perelomov, photon-added BG)
CheckReport overlap_check(double tol);

// suite: all | ortho | schrodinger | lr | algebra | moments | coherent
// comparison legs carry an infinite tolerance and never fail a suite
std::vector<CheckReport> run_suite(const std::string& suite, const ParameterProfile& profile,
                                   const AuxiliarySolution& aux);

} // namespace landau
