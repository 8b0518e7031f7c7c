#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Sparse>

#include "landau/auxode.hpp"
#include "landau/profiles.hpp"

namespace landau {

using SpMat = Eigen::SparseMatrix<std::complex<double>>;

struct HelicityQuanta {
    int n_plus = 0;
    int n_minus = 0;

    int ell() const { return n_plus - n_minus; }
    int n() const { return n_plus < n_minus ? n_plus : n_minus; }
};

double invariant_eigenvalue(const HelicityQuanta& q, double kappa);
int lz_eigenvalue(const HelicityQuanta& q);

struct SU2Label {
    double j;
    double m;
};
struct SU11Label {
    double k;
    int m;
};
SU2Label su2_relabel(const HelicityQuanta& q);
SU11Label su11_relabel(const HelicityQuanta& q);
double casimir_su11(int ell);

// every scalar a formula needs at one instant
struct Frame {
    double t, kappa, M, omega, omega_c, Omega, E, q, rho, rho_dot;
};
Frame frame_at(const ParameterProfile& profile, const AuxiliarySolution& aux, double t);

double hamiltonian_expectation(const HelicityQuanta& q, const Frame& f);
double hamiltonian_expectation(const HelicityQuanta& q, const ParameterProfile& profile,
                               const AuxiliarySolution& aux, double t);

enum class PhaseConvention { integrated, paper_closed_form, zero };
const char* convention_name(PhaseConvention c);

// d gamma / dt under the chosen convention
double phase_rate(const HelicityQuanta& q, const Frame& f, PhaseConvention c);
double phase_between(const HelicityQuanta& q, const ParameterProfile& profile, const AuxiliarySolution& aux,
                     double from, double to, PhaseConvention c);

struct PhaseTrace {
    std::vector<double> grid;
    std::vector<double> gamma;
    std::vector<double> integrand;
    std::vector<double> gamma_paper;
};
PhaseTrace phase_gamma(const HelicityQuanta& q, const ParameterProfile& profile, const AuxiliarySolution& aux,
                       const std::vector<double>& grid);

// angular factor e^{i(n_- - n_+)theta}, the sign carried by L_z = n_- - n_+
std::complex<double> wavefunction_polar(const HelicityQuanta& q, const Frame& f, double r, double theta);
std::complex<double> wavefunction_polar(const HelicityQuanta& q, const ParameterProfile& profile,
                                        const AuxiliarySolution& aux, double t, double r, double theta);
std::complex<double> wavefunction_cartesian(int nx, int ny, const Frame& f, double x, double y);
std::complex<double> wavefunction_cartesian(int nx, int ny, const ParameterProfile& profile,
                                            const AuxiliarySolution& aux, double t, double x, double y);

std::vector<std::complex<double>> full_solution(const HelicityQuanta& q, const ParameterProfile& profile,
                                                const AuxiliarySolution& aux, const std::vector<double>& grid,
                                                double r, double theta);

double uncertainty_product(int n, int ell, const Frame& f);
double uncertainty_product(int n, int ell, const ParameterProfile& profile, const AuxiliarySolution& aux, double t);

struct OperatorMatrix {
    int cutoff = 0;
    SpMat entries;
    std::vector<int> edge_band;

    int dim() const { return (cutoff + 1) * (cutoff + 1); }
};
using OperatorSet = std::map<std::string, OperatorMatrix>;

inline int basis_index(int n_plus, int n_minus, int cutoff) { return n_plus * (cutoff + 1) + n_minus; }
std::vector<int> edge_band(int cutoff);
// indices with n_+, n_- <= cutoff - shells
std::vector<int> interior_indices(int cutoff, int shells = 2);
// max |A_ij| over i, j in the interior block
double interior_max_abs(const SpMat& A, int cutoff, int shells = 2);
double hermiticity_defect(const SpMat& A, int cutoff);

// a_plus, a_minus, a_plus_dag, a_minus_dag, N_plus, N_minus, Lz, J_plus, J_minus, J3, K_plus, K_minus, K0, Id
OperatorSet fock_operators(int cutoff);

// adds x, y, px, py (images in the frame basis at `frame_time`, default t), I (Fock form when the
// frame is t), I_composed (built from x, p with rho(t)), H
OperatorSet build_operator_matrices(const ParameterProfile& profile, const AuxiliarySolution& aux, double t,
                                    int cutoff, std::optional<double> frame_time = std::nullopt);

struct Invariant3DTrace {
    std::vector<double> grid;
    std::vector<double> alpha;
    double variation = 0.0;
};
Invariant3DTrace invariant3d_diagnostic(const HelicityQuanta& q, double p, const ParameterProfile& profile,
                                        const AuxiliarySolution& aux, const std::vector<double>& grid);

} // namespace landau
