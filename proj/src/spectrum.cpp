#include "landau/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "landau/errors.hpp"
#include "landau/quadrature.hpp"
#include "landau/specfun.hpp"

namespace landau {

namespace {

using cd = std::complex<double>;
using Triplet = Eigen::Triplet<cd>;

constexpr cd I_UNIT{0.0, 1.0};

double field_term(const Frame& f) {
    double qe = f.q * f.E;
    if (qe == 0.0) return 0.0;
    if (f.omega == 0.0) fail(Errc::ZeroFrequency, "electric term needs omega != 0");
    return qe * qe / (2.0 * f.M * f.omega);
}

// prefactor of (n_+ + n_- + 1) in <H>
double energy_scale(const Frame& f) {
    return (f.M * f.rho_dot * f.rho_dot + f.kappa * f.kappa / (f.M * f.rho * f.rho) +
            f.M * f.Omega * f.Omega * f.rho * f.rho) /
           (2.0 * f.kappa);
}

// <i d/dt> on an eigenstate, before simplification
double time_derivative_expectation(const HelicityQuanta& q, const Frame& f) {
    double total = q.n_plus + q.n_minus + 1;
    return -(f.M / (2.0 * f.kappa)) *
           (f.kappa * f.kappa / (f.M * f.M * f.rho * f.rho) - f.Omega * f.Omega * f.rho * f.rho -
            f.rho_dot * f.rho_dot) *
           total;
}

OperatorMatrix wrap(SpMat m, int cutoff, const std::vector<int>& band) {
    OperatorMatrix out;
    out.cutoff = cutoff;
    out.entries = std::move(m);
    out.entries.prune(cd(0.0, 0.0));
    out.edge_band = band;
    return out;
}

std::vector<char> interior_mask(int cutoff, int shells) {
    int side = cutoff + 1;
    std::vector<char> mask(side * side, 0);
    for (int p = 0; p <= cutoff - shells; ++p)
        for (int m = 0; m <= cutoff - shells; ++m) mask[basis_index(p, m, cutoff)] = 1;
    return mask;
}

} // namespace

double invariant_eigenvalue(const HelicityQuanta& q, double kappa) {
    return kappa * (q.n_plus + q.n_minus + 1);
}

int lz_eigenvalue(const HelicityQuanta& q) { return q.n_minus - q.n_plus; }

SU2Label su2_relabel(const HelicityQuanta& q) {
    return {0.5 * (q.n_plus + q.n_minus), 0.5 * (q.n_plus - q.n_minus)};
}

SU11Label su11_relabel(const HelicityQuanta& q) {
    return {0.5 * (std::abs(q.ell()) + 1), q.n()};
}

double casimir_su11(int ell) {
    double a = std::abs(ell);
    return 0.25 * (a + 1.0) * (a - 1.0);
}

Frame frame_at(const ParameterProfile& profile, const AuxiliarySolution& aux, double t) {
    AuxState s = aux_at(aux, profile, t);
    DerivedFrequencies d = eval_derived(profile, t);
    return {t, profile.kappa(), profile.M(t), profile.omega(t), d.omega_c, d.Omega, d.E_mag, profile.q(),
            s.rho, s.rho_dot};
}

double hamiltonian_expectation(const HelicityQuanta& q, const Frame& f) {
    return energy_scale(f) * (q.n_plus + q.n_minus + 1) - 0.5 * f.omega_c * (q.n_minus - q.n_plus) -
           field_term(f);
}

double hamiltonian_expectation(const HelicityQuanta& q, const ParameterProfile& profile,
                               const AuxiliarySolution& aux, double t) {
    return hamiltonian_expectation(q, frame_at(profile, aux, t));
}

const char* convention_name(PhaseConvention c) {
    switch (c) {
    case PhaseConvention::integrated: return "integrated";
    case PhaseConvention::paper_closed_form: return "paper_closed_form";
    case PhaseConvention::zero: return "zero";
    }
    return "?";
}

double phase_rate(const HelicityQuanta& q, const Frame& f, PhaseConvention c) {
    switch (c) {
    case PhaseConvention::integrated:
        return time_derivative_expectation(q, f) - hamiltonian_expectation(q, f);
    case PhaseConvention::paper_closed_form: {
        double first = -0.5 * f.kappa * (q.n_plus + q.n_minus + 1) / (f.M * f.rho * f.rho);
        return first + 0.5 * (q.n_minus - q.n_plus) * f.omega_c + field_term(f);
    }
    case PhaseConvention::zero: return 0.0;
    }
    return 0.0;
}

double phase_between(const HelicityQuanta& q, const ParameterProfile& profile, const AuxiliarySolution& aux,
                     double from, double to, PhaseConvention c) {
    if (c == PhaseConvention::zero || from == to) return 0.0;
    // the interpolant is polynomial between knots, so a fixed rule per knot interval is exact to rounding
    static const QuadratureRule gl = gauss_legendre(12);
    double lo = std::min(from, to), hi = std::max(from, to);
    std::vector<double> cuts{lo};
    auto first = std::upper_bound(aux.grid.begin(), aux.grid.end(), lo);
    for (auto it = first; it != aux.grid.end() && *it < hi; ++it) cuts.push_back(*it);
    cuts.push_back(hi);
    double sum = 0.0;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        double mid = 0.5 * (cuts[k] + cuts[k + 1]), half = 0.5 * (cuts[k + 1] - cuts[k]);
        for (std::size_t j = 0; j < gl.nodes.size(); ++j)
            sum += half * gl.weights[j] * phase_rate(q, frame_at(profile, aux, mid + half * gl.nodes[j]), c);
    }
    return to >= from ? sum : -sum;
}

PhaseTrace phase_gamma(const HelicityQuanta& q, const ParameterProfile& profile, const AuxiliarySolution& aux,
                       const std::vector<double>& grid) {
    PhaseTrace out;
    out.grid = grid;
    std::size_t n = grid.size();
    out.gamma.assign(n, 0.0);
    out.gamma_paper.assign(n, 0.0);
    out.integrand.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        Frame f = frame_at(profile, aux, grid[i]);
        out.integrand[i] = phase_rate(q, f, PhaseConvention::integrated);
        if (i == 0) continue;
        out.gamma[i] = out.gamma[i - 1] +
                       phase_between(q, profile, aux, grid[i - 1], grid[i], PhaseConvention::integrated);
        out.gamma_paper[i] = out.gamma_paper[i - 1] + phase_between(q, profile, aux, grid[i - 1], grid[i],
                                                                    PhaseConvention::paper_closed_form);
    }
    return out;
}

std::complex<double> wavefunction_polar(const HelicityQuanta& q, const Frame& f, double r, double theta) {
    if (r < 0.0) fail(Errc::PreconditionViolation, "wavefunction_polar: r must be >= 0");
    int n = q.n();
    int L = std::abs(q.ell());
    double u = f.kappa * r * r / (f.rho * f.rho);
    double log_norm = 0.5 * (std::lgamma(n + 1.0) - std::lgamma(n + L + 1.0));
    double amp = std::sqrt(f.kappa / std::numbers::pi) / f.rho * std::exp(log_norm) *
                 (L == 0 ? 1.0 : std::pow(u, 0.5 * L)) * laguerre(n, L, u);
    if (n % 2 == 1) amp = -amp;
    cd exponent = 0.5 * r * r * cd(-f.kappa / (f.rho * f.rho), f.M * f.rho_dot / f.rho);
    return amp * std::exp(exponent + I_UNIT * double(q.n_minus - q.n_plus) * theta);
}

std::complex<double> wavefunction_polar(const HelicityQuanta& q, const ParameterProfile& profile,
                                        const AuxiliarySolution& aux, double t, double r, double theta) {
    return wavefunction_polar(q, frame_at(profile, aux, t), r, theta);
}

std::complex<double> wavefunction_cartesian(int nx, int ny, const Frame& f, double x, double y) {
    if (nx < 0 || ny < 0) fail(Errc::PreconditionViolation, "wavefunction_cartesian: negative order");
    double s = std::sqrt(f.kappa) / f.rho;
    double log_pref = 0.5 * (std::log(f.kappa / std::numbers::pi) - (nx + ny) * std::numbers::ln2 -
                             std::lgamma(nx + 1.0) - std::lgamma(ny + 1.0));
    double amp = std::exp(log_pref) / f.rho * hermite(nx, s * x) * hermite(ny, s * y);
    double r2 = x * x + y * y;
    return amp * std::exp(0.5 * r2 * cd(-f.kappa / (f.rho * f.rho), f.M * f.rho_dot / f.rho));
}

std::complex<double> wavefunction_cartesian(int nx, int ny, const ParameterProfile& profile,
                                            const AuxiliarySolution& aux, double t, double x, double y) {
    return wavefunction_cartesian(nx, ny, frame_at(profile, aux, t), x, y);
}

std::vector<std::complex<double>> full_solution(const HelicityQuanta& q, const ParameterProfile& profile,
                                                const AuxiliarySolution& aux, const std::vector<double>& grid,
                                                double r, double theta) {
    std::vector<cd> out;
    out.reserve(grid.size());
    if (grid.empty()) return out;
    PhaseTrace trace = phase_gamma(q, profile, aux, grid);
    for (std::size_t i = 0; i < grid.size(); ++i)
        out.push_back(std::exp(I_UNIT * trace.gamma[i]) *
                      wavefunction_polar(q, profile, aux, grid[i], r, theta));
    return out;
}

double uncertainty_product(int n, int ell, const Frame& f) {
    if (n < 0) fail(Errc::PreconditionViolation, "uncertainty_product: n must be >= 0");
    double chirp = f.M * f.rho_dot * f.rho / f.kappa;
    return 0.5 * (2.0 * n + std::abs(ell) + 1.0) * std::sqrt(1.0 + chirp * chirp);
}

double uncertainty_product(int n, int ell, const ParameterProfile& profile, const AuxiliarySolution& aux,
                           double t) {
    return uncertainty_product(n, ell, frame_at(profile, aux, t));
}

std::vector<int> edge_band(int cutoff) {
    std::vector<int> out;
    for (int p = 0; p <= cutoff; ++p)
        for (int m = 0; m <= cutoff; ++m)
            if (p == cutoff || m == cutoff) out.push_back(basis_index(p, m, cutoff));
    return out;
}

std::vector<int> interior_indices(int cutoff, int shells) {
    std::vector<int> out;
    for (int p = 0; p <= cutoff - shells; ++p)
        for (int m = 0; m <= cutoff - shells; ++m) out.push_back(basis_index(p, m, cutoff));
    return out;
}

double interior_max_abs(const SpMat& A, int cutoff, int shells) {
    std::vector<char> mask = interior_mask(cutoff, shells);
    double best = 0.0;
    for (int k = 0; k < A.outerSize(); ++k)
        for (SpMat::InnerIterator it(A, k); it; ++it)
            if (mask[it.row()] && mask[it.col()]) best = std::max(best, std::abs(it.value()));
    return best;
}

double hermiticity_defect(const SpMat& A, int cutoff) {
    SpMat diff = A - SpMat(A.adjoint());
    return interior_max_abs(diff, cutoff, 1);
}

OperatorSet fock_operators(int cutoff) {
    if (cutoff < 2) fail(Errc::CutoffTooSmall, "operator cutoff must be >= 2");
    int side = cutoff + 1;
    int dim = side * side;
    std::vector<int> band = edge_band(cutoff);

    std::vector<Triplet> ap, am, np, nm;
    for (int p = 0; p <= cutoff; ++p) {
        for (int m = 0; m <= cutoff; ++m) {
            int col = basis_index(p, m, cutoff);
            if (p > 0) ap.emplace_back(basis_index(p - 1, m, cutoff), col, std::sqrt(double(p)));
            if (m > 0) am.emplace_back(basis_index(p, m - 1, cutoff), col, std::sqrt(double(m)));
            np.emplace_back(col, col, double(p));
            nm.emplace_back(col, col, double(m));
        }
    }
    auto build = [dim](const std::vector<Triplet>& t) {
        SpMat m(dim, dim);
        m.setFromTriplets(t.begin(), t.end());
        return m;
    };
    SpMat a_plus = build(ap), a_minus = build(am), n_plus = build(np), n_minus = build(nm);
    SpMat a_plus_dag = a_plus.adjoint(), a_minus_dag = a_minus.adjoint();
    SpMat id(dim, dim);
    id.setIdentity();

    OperatorSet out;
    auto put = [&](const std::string& key, SpMat m) { out[key] = wrap(std::move(m), cutoff, band); };
    put("a_plus", a_plus);
    put("a_minus", a_minus);
    put("a_plus_dag", a_plus_dag);
    put("a_minus_dag", a_minus_dag);
    put("N_plus", n_plus);
    put("N_minus", n_minus);
    put("Lz", n_minus - n_plus);
    put("J_plus", a_plus_dag * a_minus);
    put("J_minus", a_minus_dag * a_plus);
    put("J3", 0.5 * (n_plus - n_minus));
    put("K_plus", a_plus_dag * a_minus_dag);
    put("K_minus", a_plus * a_minus);
    put("K0", 0.5 * (n_plus + n_minus + id));
    put("Id", id);
    return out;
}

OperatorSet build_operator_matrices(const ParameterProfile& profile, const AuxiliarySolution& aux, double t,
                                    int cutoff, std::optional<double> frame_time) {
    OperatorSet ops = fock_operators(cutoff);
    const std::vector<int>& band = ops.at("Id").edge_band;
    double tf = frame_time.value_or(t);
    Frame ref = frame_at(profile, aux, tf);
    Frame now = (tf == t) ? ref : frame_at(profile, aux, t);

    const SpMat& ap = ops.at("a_plus").entries;
    const SpMat& amd = ops.at("a_minus_dag").entries;
    const SpMat& id = ops.at("Id").entries;

    double sk = std::sqrt(ref.kappa);
    SpMat diff = amd - ap;
    SpMat sum = amd + ap;
    SpMat xp = (I_UNIT * ref.rho / sk) * diff;  // x + iy
    SpMat pp = (I_UNIT * ref.M * ref.rho_dot / sk) * diff - cd(sk / ref.rho) * sum;  // p_x + i p_y
    SpMat xm = xp.adjoint(), pm = pp.adjoint();
    SpMat x = 0.5 * (xp + xm);
    SpMat y = cd(0.0, -0.5) * (xp - xm);
    SpMat px = 0.5 * (pp + pm);
    SpMat py = cd(0.0, -0.5) * (pp - pm);

    SpMat r2 = x * x + y * y;
    SpMat qx = now.rho * px - (now.M * now.rho_dot) * x;
    SpMat qy = now.rho * py - (now.M * now.rho_dot) * y;
    SpMat inv = 0.5 * ((now.kappa * now.kappa / (now.rho * now.rho)) * r2 + qx * qx + qy * qy);

    SpMat ham = (1.0 / (2.0 * now.M)) * SpMat(px * px + py * py) + (0.5 * now.M * now.Omega * now.Omega) * r2 -
                (0.5 * now.omega_c) * ops.at("Lz").entries - field_term(now) * id;

    auto put = [&](const std::string& key, SpMat m) { ops[key] = wrap(std::move(m), cutoff, band); };
    put("x", x);
    put("y", y);
    put("px", px);
    put("py", py);
    put("I_composed", inv);
    if (tf == t)
        put("I", now.kappa * SpMat(ops.at("N_plus").entries + ops.at("N_minus").entries + id));
    else
        put("I", inv);
    put("H", ham);
    return ops;
}

Invariant3DTrace invariant3d_diagnostic(const HelicityQuanta& q, double p, const ParameterProfile& profile,
                                        const AuxiliarySolution& aux, const std::vector<double>& grid) {
    Invariant3DTrace out;
    out.grid = grid;
    double base = invariant_eigenvalue(q, profile.kappa());
    double lo = 0.0, hi = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double rho = aux_at(aux, profile, grid[i]).rho;
        double a = 0.5 * rho * rho * p * p + base;
        out.alpha.push_back(a);
        lo = i == 0 ? a : std::min(lo, a);
        hi = i == 0 ? a : std::max(hi, a);
    }
    out.variation = hi - lo;
    return out;
}

} // namespace landau
