#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <map>
#include <string>

#include <Eigen/Dense>

#include "landau/auxode.hpp"
#include "landau/profiles.hpp"
#include "landau/spectrum.hpp"

namespace landau {

using cplx = std::complex<double>;

// Coefficient table c(n_+, n_-) for 0 <= n_+-, n_- <= cutoff.
struct StateVector {
    int cutoff = 0;
    Eigen::MatrixXcd coeffs;
    std::string family;
    std::map<std::string, double> params;
    double norm_deficit = 0.0;

    cplx at(int n_plus, int n_minus) const { return coeffs(n_plus, n_minus); }
    double norm2() const { return coeffs.squaredNorm(); }
    // zero-padded or truncated copy; norm_deficit recomputed
    StateVector resized(int new_cutoff) const;
    // flattened with basis_index ordering
    Eigen::VectorXcd to_vector() const;
};

struct WeightSpec {
    std::string family;
    std::function<double(double)> evaluator;
    std::function<double(int)> moment_target;
    int max_moment = 6;
    double support_lo = 0.0;
    double support_hi = std::numeric_limits<double>::infinity();
    // Gaussian width the evaluator was smoothed with; 0 means exact
    double reg_sigma = 0.0;
};

struct EvolutionParams {
    double T1, T2, lambda;
};

using ModeFunction = std::function<double(int)>;

// su(1,1) mode selector: two_mode(k) lives on (m + 2k-1, m); single_mode(ell) on (m + ell, m) or (m, m + |ell|)
struct SU11Mode {
    bool two_mode = true;
    double k = 0.5;
    int ell = 0;

    static SU11Mode two(double k);
    static SU11Mode single(int ell);
    double bargmann() const;
    int lattice_ell() const;
};

StateVector canonical_state(cplx z_plus, cplx z_minus, int cutoff);
cplx overlap(const StateVector& a, const StateVector& b);
Eigen::MatrixXd distribution(const StateVector& s);

EvolutionParams evolution_params(const Frame& f);
EvolutionParams evolution_params(const ParameterProfile& profile, const AuxiliarySolution& aux, double t);
StateVector evolve_canonical(const StateVector& s, const EvolutionParams& params, double tau);

// A = a f(N) eigenstates; [f(n)]! = f(1)...f(n)
StateVector nonlinear_state(cplx alpha_plus, cplx alpha_minus, const ModeFunction& f_plus,
                            const ModeFunction& f_minus, int cutoff);
StateVector photon_added_state(cplx alpha_plus, cplx alpha_minus, int m_plus, int m_minus, int cutoff);
double pa_nonlinear_function(int m_plus, int m_minus, int n_plus, int n_minus);

// lattice (n_+, n_-) = (m, 2j - m)
StateVector su2_state(double j, cplx zeta, int cutoff);
// lattice (m + p, 2j - m - p)
StateVector su2_pa_state(double j, cplx zeta, int p, int cutoff);
// |W|^{-2} for su2_pa_state
double su2_pa_normalization(double j, int p, double zeta_abs2);

StateVector su11_bg_state(const SU11Mode& mode, cplx z, int cutoff);
StateVector su11_perelomov_state(const SU11Mode& mode, cplx eta, int cutoff);
StateVector su11_pa_perelomov_state(double k, cplx eta, int l, int cutoff);
StateVector su11_pa_bg_state(double k, cplx z, int n_add, int cutoff);

// F_l(k, m) and rho_n(k, m)
double pa_perelomov_weight(double k, int l, int m);
double pa_bg_weight(double k, int n, int m);

enum class SingleModeFamily { bg, perelomov };
// closed forms in u = kappa r^2 / rho^2; phase gamma omitted
cplx single_mode_wavefunction(SingleModeFamily family, int ell, cplx param, const Frame& f, double u,
                              double theta);
cplx single_mode_wavefunction(SingleModeFamily family, int ell, cplx param, const ParameterProfile& profile,
                              const AuxiliarySolution& aux, double t, double u, double theta);

// m! ([f(m)]!)^2
double nonlinear_moment_target(int m, const ModeFunction& f);

// families: canonical (f = 1 nonlinear), su2_pa {j, p}, bg_pa {k, n}, perelomov_pa {k, l}
WeightSpec weight_spec(const std::string& family, const ParamTable& params);

} // namespace landau
