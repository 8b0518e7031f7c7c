#include "landau/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <unordered_map>

#include "landau/errors.hpp"
#include "landau/parallel.hpp"
#include "landau/quadrature.hpp"
#include "landau/specfun.hpp"

namespace landau {

namespace {

constexpr double INF = std::numeric_limits<double>::infinity();
constexpr cplx I_UNIT{0.0, 1.0};

HelicityQuanta quanta_of(int n, int ell) {
    return ell >= 0 ? HelicityQuanta{n + ell, n} : HelicityQuanta{n, n - ell};
}

struct RadialGrid {
    std::vector<double> u, w;  // nodes and weights in u = kappa r^2 / rho^2 on [0, U]
};

RadialGrid radial_grid(int nodes, double u_max) {
    QuadratureRule gl = gauss_legendre(nodes);
    RadialGrid g;
    for (int i = 0; i < nodes; ++i) {
        g.u.push_back(0.5 * u_max * (gl.nodes[i] + 1.0));
        g.w.push_back(0.5 * u_max * gl.weights[i]);
    }
    return g;
}

Eigen::MatrixXcd gram(const std::vector<HelicityQuanta>& states, const Frame& f, int nodes, double u_max,
                      int angular) {
    RadialGrid rg = radial_grid(nodes, u_max);
    const double dtheta = 2.0 * std::numbers::pi / angular;
    // r dr dtheta = rho^2 / (2 kappa) du dtheta
    const double jac = f.rho * f.rho / (2.0 * f.kappa);
    int count = int(states.size());
    int points = nodes * angular;
    Eigen::MatrixXcd values(points, count);
    Eigen::VectorXd weights(points);
    parallel_for(std::size_t(count), [&](std::size_t s) {
        for (int i = 0; i < nodes; ++i) {
            double r = f.rho * std::sqrt(rg.u[i] / f.kappa);
            for (int j = 0; j < angular; ++j)
                values(i * angular + j, Eigen::Index(s)) = wavefunction_polar(states[s], f, r, j * dtheta);
        }
    });
    for (int i = 0; i < nodes; ++i)
        for (int j = 0; j < angular; ++j) weights(i * angular + j) = rg.w[i] * dtheta * jac;
    return values.adjoint() * weights.asDiagonal() * values;
}

// radial factor R(r) and dR/dr of the eigenfunction, angular phase excluded
std::pair<cplx, cplx> radial_with_derivative(const HelicityQuanta& q, const Frame& f, double r) {
    int n = q.n();
    int L = std::abs(q.ell());
    double s = std::sqrt(f.kappa) / f.rho;
    double u = s * s * r * r;
    double amp = std::sqrt(f.kappa / std::numbers::pi) / f.rho *
                 std::exp(0.5 * (std::lgamma(n + 1.0) - std::lgamma(n + L + 1.0))) * std::pow(s, L);
    if (n % 2 == 1) amp = -amp;
    cplx c(-f.kappa / (f.rho * f.rho), f.M * f.rho_dot / f.rho);
    cplx env = std::exp(0.5 * c * r * r);
    double lag = laguerre(n, L, u);
    double dlag = n == 0 ? 0.0 : -laguerre(n - 1, L + 1, u);
    double rl = std::pow(r, L);
    double drl = L == 0 ? 0.0 : L * std::pow(r, L - 1);
    cplx value = amp * rl * lag * env;
    cplx deriv = amp * env * (drl * lag + rl * dlag * 2.0 * s * s * r + rl * lag * c * r);
    return {value, deriv};
}

double lambda_of(const Frame& f) { return evolution_params(f).lambda; }

const double D1[7] = {-1.0 / 60, 3.0 / 20, -3.0 / 4, 0.0, 3.0 / 4, -3.0 / 20, 1.0 / 60};
const double D2[7] = {1.0 / 90, -3.0 / 20, 3.0 / 2, -49.0 / 18, 3.0 / 2, -3.0 / 20, 1.0 / 90};

// phase increment from t to t + dt with an 8-point Gauss-Legendre rule
double phase_increment(const HelicityQuanta& q, const ParameterProfile& profile, const AuxiliarySolution& aux,
                       double t, double dt, PhaseConvention c) {
    if (c == PhaseConvention::zero) return 0.0;
    static const QuadratureRule gl = gauss_legendre(8);
    double acc = 0.0;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
        double s = t + 0.5 * dt * (gl.nodes[i] + 1.0);
        acc += gl.weights[i] * phase_rate(q, frame_at(profile, aux, s), c);
    }
    return 0.5 * dt * acc;
}

cplx psi_at(const HelicityQuanta& q, const Frame& f, double x, double y) {
    return wavefunction_polar(q, f, std::hypot(x, y), std::atan2(y, x));
}

double vector_interior_max(const Eigen::VectorXcd& v, int cutoff) {
    double best = 0.0;
    for (int idx : interior_indices(cutoff)) best = std::max(best, std::abs(v(idx)));
    return best;
}

} // namespace

CheckReport make_report(std::string name, double residual, double tol,
                        std::vector<std::pair<std::string, double>> details) {
    CheckReport r;
    r.name = std::move(name);
    r.max_residual = residual;
    r.tolerance = tol;
    r.passed = residual <= tol;
    r.details = std::move(details);
    return r;
}

CheckReport orthonormality_check(const ParameterProfile& profile, const AuxiliarySolution& aux, double t,
                                 int n_max, double tol, int radial_nodes) {
    if (n_max < 0 || n_max > 6) fail(Errc::PreconditionViolation, "orthonormality_check needs 0 <= n_max <= 6");
    if (radial_nodes < 2) fail(Errc::PreconditionViolation, "radial_nodes must be >= 2");
    Frame f = frame_at(profile, aux, t);
    std::vector<HelicityQuanta> states;
    for (int p = 0; p <= n_max; ++p)
        for (int m = 0; m <= n_max; ++m) states.push_back({p, m});
    const double u_max = 60.0 + 10.0 * n_max;
    const int angular = 8 * n_max + 8;
    Eigen::MatrixXcd g1 = gram(states, f, radial_nodes, u_max, angular);
    Eigen::MatrixXcd g2 = gram(states, f, 2 * radial_nodes, u_max, angular);
    int count = int(states.size());
    double residual = (g1 - Eigen::MatrixXcd::Identity(count, count)).cwiseAbs().maxCoeff();
    double gap = (g1 - g2).cwiseAbs().maxCoeff();
    bool nonconvergent = gap > tol;
    CheckReport r = make_report("orthonormality", nonconvergent ? std::max(residual, gap) : residual, tol,
                                {{"t", t},
                                 {"n_max", n_max},
                                 {"radial_nodes", radial_nodes},
                                 {"angular_nodes", angular},
                                 {"u_max", u_max},
                                 {"gram_residual", residual},
                                 {"refinement_gap", gap},
                                 {"nonconvergent", nonconvergent ? 1.0 : 0.0}});
    if (nonconvergent) r.passed = false;
    return r;
}

double uncertainty_quadrature(int n, int ell, const Frame& f, int radial_nodes) {
    HelicityQuanta q = quanta_of(n, ell);
    int k = q.n_minus - q.n_plus;
    RadialGrid rg = radial_grid(radial_nodes, 80.0 + 4.0 * (2 * n + std::abs(ell)));
    const int angular = 64;
    const double dtheta = 2.0 * std::numbers::pi / angular;
    const double jac = f.rho * f.rho / (2.0 * f.kappa);
    double mx = 0.0, mx2 = 0.0, mp2 = 0.0;
    cplx mp = 0.0;
    for (std::size_t i = 0; i < rg.u.size(); ++i) {
        double r = f.rho * std::sqrt(rg.u[i] / f.kappa);
        auto [R, dR] = radial_with_derivative(q, f, r);
        for (int j = 0; j < angular; ++j) {
            double th = j * dtheta;
            cplx ang = std::polar(1.0, k * th);
            cplx phi = R * ang;
            // d/dx = cos(theta) d/dr - sin(theta)/r d/dtheta
            cplx dx = std::cos(th) * dR * ang - std::sin(th) / r * (I_UNIT * double(k)) * phi;
            double w = rg.w[i] * dtheta * jac;
            double dens = std::norm(phi);
            double x = r * std::cos(th);
            mx += w * x * dens;
            mx2 += w * x * x * dens;
            mp += w * (-I_UNIT) * std::conj(phi) * dx;
            mp2 += w * std::norm(dx);
        }
    }
    double dxv = std::sqrt(std::max(0.0, mx2 - mx * mx));
    double dpv = std::sqrt(std::max(0.0, mp2 - std::norm(mp)));
    return dxv * dpv;
}

double schrodinger_residual(const HelicityQuanta& q, const ParameterProfile& profile, const AuxiliarySolution& aux,
                            const std::vector<SpacetimePoint>& points, PhaseConvention convention) {
    if (aux.grid.size() < 2) fail(Errc::GridTooShort, "auxiliary grid needs two samples");
    const double span = aux.grid.back() - aux.grid.front();
    const double ht = 1e-5 * span;
    double worst = 0.0, scale = 0.0;
    for (const SpacetimePoint& pt : points) {
        if (!(pt.t + ht > pt.t) || !(pt.t - ht < pt.t))
            fail(Errc::StepUnderflow, "time step vanishes against t = " + std::to_string(pt.t));
        Frame f = frame_at(profile, aux, pt.t);
        // e^{i gamma(t)} is a unit-modulus common factor; only increments across the stencil matter
        cplx dt = 0.0;
        const int offsets[4] = {-2, -1, 1, 2};
        const double weights[4] = {1.0, -8.0, 8.0, -1.0};
        for (int j = 0; j < 4; ++j) {
            double s = pt.t + offsets[j] * ht;
            double dg = phase_increment(q, profile, aux, pt.t, offsets[j] * ht, convention);
            dt += weights[j] * std::polar(1.0, dg) * psi_at(q, frame_at(profile, aux, s), pt.x, pt.y);
        }
        dt /= 12.0 * ht;
        // the step resolves both the envelope width rho/sqrt(kappa) and the chirp M rho_dot r / rho
        const double width = f.rho / std::sqrt(f.kappa);
        const double reach = std::hypot(pt.x, pt.y) + width;
        const double hx = 0.05 / (1.0 / width + std::abs(f.M * f.rho_dot / f.rho) * reach);
        cplx psi = psi_at(q, f, pt.x, pt.y);
        cplx dx = 0.0, dy = 0.0, dxx = 0.0, dyy = 0.0;
        for (int j = 0; j < 7; ++j) {
            double o = (j - 3) * hx;
            cplx px = j == 3 ? psi : psi_at(q, f, pt.x + o, pt.y);
            cplx py = j == 3 ? psi : psi_at(q, f, pt.x, pt.y + o);
            dx += D1[j] * px;
            dy += D1[j] * py;
            dxx += D2[j] * px;
            dyy += D2[j] * py;
        }
        dx /= hx;
        dy /= hx;
        dxx /= hx * hx;
        dyy /= hx * hx;
        double r2 = pt.x * pt.x + pt.y * pt.y;
        cplx h_psi = -(dxx + dyy) / (2.0 * f.M) + 0.5 * f.M * f.Omega * f.Omega * r2 * psi +
                     I_UNIT * (0.5 * f.omega_c) * (pt.x * dy - pt.y * dx) - lambda_of(f) * psi;
        worst = std::max(worst, std::abs(I_UNIT * dt - h_psi));
        scale = std::max(scale, std::abs(psi));
    }
    if (scale == 0.0) fail(Errc::PreconditionViolation, "wavefunction vanishes at every sample point");
    return worst / scale;
}

std::vector<CheckReport> schrodinger_residual_check(const HelicityQuanta& q, const ParameterProfile& profile,
                                                    const AuxiliarySolution& aux,
                                                    const std::vector<SpacetimePoint>& points, double tol) {
    std::vector<CheckReport> out;
    const double span = aux.grid.back() - aux.grid.front();
    for (PhaseConvention c :
         {PhaseConvention::integrated, PhaseConvention::paper_closed_form, PhaseConvention::zero}) {
        double res = schrodinger_residual(q, profile, aux, points, c);
        out.push_back(make_report(std::string("schrodinger_") + convention_name(c), res, tol,
                                  {{"n_plus", q.n_plus},
                                   {"n_minus", q.n_minus},
                                   {"time_step", 1e-5 * span},
                                   {"points", double(points.size())}}));
    }
    return out;
}

CheckReport lr_invariant_check(const ParameterProfile& profile, const AuxiliarySolution& aux, double t, int cutoff,
                               double tol) {
    if (cutoff < 10) fail(Errc::CutoffTooSmall, "lr_invariant_check needs cutoff >= 10");
    const double h = 1e-5 * (aux.grid.back() - aux.grid.front());
    OperatorSet ops = build_operator_matrices(profile, aux, t, cutoff);
    const SpMat& I = ops.at("I").entries;
    const SpMat& H = ops.at("H").entries;
    // fourth-order central difference, I at neighbouring times expressed in the frame of t
    auto shifted = [&](double dt) { return build_operator_matrices(profile, aux, t + dt, cutoff, t).at("I").entries; };
    SpMat dI = (shifted(-2 * h) - shifted(2 * h) + 8.0 * (shifted(h) - shifted(-h))) * cplx(1.0 / (12.0 * h));
    SpMat lhs = dI + cplx(0.0, -1.0) * SpMat(I * H - H * I);
    double norm_i = interior_max_abs(I, cutoff);
    double res = interior_max_abs(lhs, cutoff) / norm_i;
    const SpMat& Lz = ops.at("Lz").entries;
    SpMat comm = I * Lz - Lz * I;
    double comm_full = 0.0;
    for (int k = 0; k < comm.outerSize(); ++k)
        for (SpMat::InnerIterator it(comm, k); it; ++it) comm_full = std::max(comm_full, std::abs(it.value()));
    return make_report("lewis_riesenfeld", res, tol,
                       {{"t", t},
                        {"cutoff", cutoff},
                        {"time_step", h},
                        {"norm_I", norm_i},
                        {"commutator_I_Lz", comm_full},
                        {"hermiticity_H", hermiticity_defect(H, cutoff)},
                        {"hermiticity_I", hermiticity_defect(I, cutoff)}});
}

CheckReport algebra_check(int cutoff, double tol) {
    if (cutoff < 6) fail(Errc::CutoffTooSmall, "algebra_check needs cutoff >= 6");
    OperatorSet ops = fock_operators(cutoff);
    auto M = [&](const char* key) -> const SpMat& { return ops.at(key).entries; };
    auto comm = [](const SpMat& a, const SpMat& b) { return SpMat(a * b - b * a); };
    const SpMat& id = M("Id");
    std::vector<std::pair<std::string, double>> details;
    auto record = [&](const std::string& name, const SpMat& residual) {
        details.emplace_back(name, interior_max_abs(residual, cutoff));
    };
    record("[a+,a+^dag]-1", comm(M("a_plus"), M("a_plus_dag")) - id);
    record("[a-,a-^dag]-1", comm(M("a_minus"), M("a_minus_dag")) - id);
    record("[a+,a-^dag]", comm(M("a_plus"), M("a_minus_dag")));
    record("[a-,a+^dag]", comm(M("a_minus"), M("a_plus_dag")));
    record("[a+,a-]", comm(M("a_plus"), M("a_minus")));
    record("[Lz,a+]-a+", comm(M("Lz"), M("a_plus")) - M("a_plus"));
    record("[Lz,a-]+a-", comm(M("Lz"), M("a_minus")) + M("a_minus"));
    record("[J+,J-]-2J3", comm(M("J_plus"), M("J_minus")) - 2.0 * M("J3"));
    record("[J3,J+]-J+", comm(M("J3"), M("J_plus")) - M("J_plus"));
    record("[J3,J-]+J-", comm(M("J3"), M("J_minus")) + M("J_minus"));
    record("[K-,K+]-2K0", comm(M("K_minus"), M("K_plus")) - 2.0 * M("K0"));
    record("[K0,K+]-K+", comm(M("K0"), M("K_plus")) - M("K_plus"));
    record("[K0,K-]+K-", comm(M("K0"), M("K_minus")) + M("K_minus"));
    record("J3+Lz/2", M("J3") + 0.5 * M("Lz"));

    SpMat casimir = M("K0") * M("K0") - 0.5 * (M("K_plus") * M("K_minus") + M("K_minus") * M("K_plus"));
    std::vector<Eigen::Triplet<cplx>> diag;
    for (int p = 0; p <= cutoff; ++p)
        for (int m = 0; m <= cutoff; ++m) diag.emplace_back(basis_index(p, m, cutoff), basis_index(p, m, cutoff),
                                                            casimir_su11(p - m));
    SpMat target(id.rows(), id.cols());
    target.setFromTriplets(diag.begin(), diag.end());
    record("casimir-(l^2-1)/4", casimir - target);
    double jplus = std::abs(M("J_plus").coeff(basis_index(1, 0, cutoff), basis_index(0, 1, cutoff)) - 1.0);
    details.emplace_back("J+(0,1)->(1,0) amplitude-1", jplus);

    double worst = 0.0;
    for (auto& [name, v] : details) worst = std::max(worst, v);
    details.emplace_back("cutoff", cutoff);
    return make_report("algebra", worst, tol, std::move(details));
}

CheckReport moment_problem_check(const WeightSpec& spec, int m_max, double tol) {
    int top = std::min(m_max, spec.max_moment);
    std::vector<double> recovered;
    std::vector<std::pair<std::string, double>> details;
    double worst = 0.0;
    bool finite = std::isfinite(spec.support_hi);
    // the adaptive rules revisit most nodes from one moment to the next
    std::unordered_map<double, double> seen;
    auto weight = [&](double x) {
        auto [it, fresh] = seen.try_emplace(x, 0.0);
        if (fresh) it->second = spec.evaluator(x);
        return it->second;
    };
    for (int m = 0; m <= top; ++m) {
        auto integrand = [&](double x) { return std::pow(x, m) * weight(x); };
        double mu = finite ? integrate(integrand, spec.support_lo, spec.support_hi, 1e-11)
                           : integrate_positive_axis(integrand, 1e-11);
        if (spec.reg_sigma > 0.0) {
            // moments of g * N(0, s^2): mu_m = sum_i C(m, i) F_i E[Z^{m-i}]
            for (int i = 0; i < m; ++i) {
                int r = m - i;
                if (r % 2 == 1) continue;
                double gauss = std::pow(spec.reg_sigma, r);
                for (int k = r - 1; k > 0; k -= 2) gauss *= k;
                double binom = std::exp(std::lgamma(m + 1.0) - std::lgamma(i + 1.0) - std::lgamma(r + 1.0));
                mu -= binom * recovered[i] * gauss;
            }
        }
        recovered.push_back(mu);
        double target = spec.moment_target(m);
        double rel = std::abs(mu - target) / std::abs(target);
        details.emplace_back("m" + std::to_string(m) + "_relative_error", rel);
        worst = std::max(worst, rel);
    }
    details.emplace_back("moments_checked", top + 1);
    return make_report("moments_" + spec.family, worst, tol, std::move(details));
}

CheckReport eigenvector_check(int cutoff, cplx z_plus, cplx z_minus, cplx bg_z, double tol) {
    OperatorSet ops = fock_operators(cutoff);
    auto vec = [&](const StateVector& s) { return s.resized(cutoff).to_vector(); };
    std::vector<std::pair<std::string, double>> details;

    Eigen::VectorXcd can = vec(canonical_state(z_plus, z_minus, cutoff));
    details.emplace_back("a+ canonical",
                         vector_interior_max(ops.at("a_plus").entries * can - z_plus * can, cutoff));
    details.emplace_back("a- canonical",
                         vector_interior_max(ops.at("a_minus").entries * can - z_minus * can, cutoff));

    ModeFunction fp = [](int n) { return 1.0 + 0.1 * n; };
    ModeFunction fm = [](int n) { return 1.0 / std::sqrt(1.0 + 0.05 * n); };
    Eigen::VectorXcd nl = vec(nonlinear_state(z_plus, z_minus, fp, fm, cutoff));
    Eigen::VectorXcd fpv(nl.size()), fmv(nl.size());
    for (int p = 0; p <= cutoff; ++p)
        for (int m = 0; m <= cutoff; ++m) {
            fpv(basis_index(p, m, cutoff)) = fp(p);
            fmv(basis_index(p, m, cutoff)) = fm(m);
        }
    Eigen::VectorXcd ap = ops.at("a_plus").entries * Eigen::VectorXcd(fpv.cwiseProduct(nl));
    Eigen::VectorXcd am = ops.at("a_minus").entries * Eigen::VectorXcd(fmv.cwiseProduct(nl));
    details.emplace_back("A+ nonlinear", vector_interior_max(ap - z_plus * nl, cutoff));
    details.emplace_back("A- nonlinear", vector_interior_max(am - z_minus * nl, cutoff));

    for (int ell : {0, 1, 2}) {
        Eigen::VectorXcd bg = vec(su11_bg_state(SU11Mode::single(ell), bg_z, cutoff));
        details.emplace_back("K- bg ell=" + std::to_string(ell),
                             vector_interior_max(ops.at("K_minus").entries * bg - bg_z * bg, cutoff));
    }
    double worst = 0.0;
    for (auto& [name, v] : details) worst = std::max(worst, v);
    details.emplace_back("cutoff", cutoff);
    return make_report("coherent_eigenvectors", worst, tol, std::move(details));
}

CheckReport overlap_check(double tol) {
    std::vector<std::pair<std::string, double>> details;

    {
        cplx a1(0.7, -0.2), a2(-0.4, 0.5), b1(0.1, 0.9), b2(0.6, 0.3);
        StateVector s = canonical_state(a1, a2, 40), t = canonical_state(b1, b2, 40);
        double expect = std::exp(-0.5 * std::norm(a1 - b1) - 0.5 * std::norm(a2 - b2));
        details.emplace_back("canonical_modulus", std::abs(std::abs(overlap(s, t)) - expect));
    }
    {
        double j = 1.5;
        cplx z1(0.3, 0.4), z2(-0.8, 0.2);
        StateVector s = su2_state(j, z1, 3), t = su2_state(j, z2, 3);
        cplx expect = std::pow(1.0 + std::norm(z1), -j) * std::pow(1.0 + std::norm(z2), -j) *
                      std::pow(1.0 + std::conj(z1) * z2, 2.0 * j);
        details.emplace_back("su2", std::abs(overlap(s, t) - expect));
    }
    {
        int ell = 2;
        double z1 = 0.8, z2 = 1.3;
        StateVector s = su11_bg_state(SU11Mode::single(ell), z1, 60);
        StateVector t = su11_bg_state(SU11Mode::single(ell), z2, 60);
        double expect = bessel(BesselKind::I, ell, 2.0 * std::sqrt(z1 * z2)) /
                        std::sqrt(bessel(BesselKind::I, ell, 2.0 * z1) * bessel(BesselKind::I, ell, 2.0 * z2));
        details.emplace_back("bg_single_mode", std::abs(overlap(s, t) - expect));

        cplx c1(0.5, 0.6), c2(-0.9, 0.4);
        StateVector u = su11_bg_state(SU11Mode::single(ell), c1, 60);
        StateVector v = su11_bg_state(SU11Mode::single(ell), c2, 60);
        cplx series = bessel_i_reduced(ell, std::conj(c1) * c2) /
                      std::sqrt((bessel_i_reduced(ell, std::norm(c1)) * bessel_i_reduced(ell, std::norm(c2))).real());
        details.emplace_back("bg_single_mode_complex", std::abs(overlap(u, v) - series));
    }
    {
        int ell = 1;
        cplx e1(0.3, -0.4), e2(-0.2, 0.5);
        StateVector s = su11_perelomov_state(SU11Mode::single(ell), e1, 0);
        StateVector t = su11_perelomov_state(SU11Mode::single(ell), e2, 0);
        int n = std::max(s.cutoff, t.cutoff);
        cplx expect = std::pow((1.0 - std::norm(e1)) * (1.0 - std::norm(e2)), 0.5 * (ell + 1)) *
                      std::pow(1.0 - std::conj(e1) * e2, -double(ell + 1));
        details.emplace_back("perelomov_single_mode", std::abs(overlap(s.resized(n), t.resized(n)) - expect));
    }
    {
        double k = 1.0;
        int n = 1;
        auto closed = [&](double w) {
            double pref = std::exp(std::lgamma(n + 1.0) + std::lgamma(n + 2.0 * k) - 2.0 * std::lgamma(2.0 * k));
            return pref * hypergeometric({n + 1.0, n + 2.0 * k}, {1.0, 2.0 * k, 2.0 * k}, w);
        };
        for (auto [z1, z2] : {std::pair{0.5, 0.5}, std::pair{0.5, 0.3}}) {
            StateVector s = su11_pa_bg_state(k, z1, n, 60), t = su11_pa_bg_state(k, z2, n, 60);
            double expect = closed(z1 * z2) / std::sqrt(closed(z1 * z1) * closed(z2 * z2));
            details.emplace_back("pa_bg_2F3(" + std::to_string(z1).substr(0, 3) + "," +
                                     std::to_string(z2).substr(0, 3) + ")",
                                 std::abs(overlap(s, t) - expect));
        }
    }
    double worst = 0.0;
    for (auto& [name, v] : details) worst = std::max(worst, v);
    return make_report("coherent_overlaps", worst, tol, std::move(details));
}

std::vector<CheckReport> run_suite(const std::string& suite, const ParameterProfile& profile,
                                   const AuxiliarySolution& aux) {
    static const std::vector<std::string> known = {"all", "ortho", "schrodinger", "lr", "algebra", "moments",
                                                   "coherent"};
    if (std::find(known.begin(), known.end(), suite) == known.end())
        fail(Errc::PreconditionViolation, "unknown suite '" + suite + "'");
    auto want = [&](const char* name) { return suite == "all" || suite == name; };
    const double t0 = aux.grid.front(), span = aux.grid.back() - aux.grid.front();
    std::vector<CheckReport> out;

    if (want("ortho"))
        for (double frac : {0.2, 0.5, 0.8}) out.push_back(orthonormality_check(profile, aux, t0 + frac * span, 3, 1e-7));

    if (want("schrodinger")) {
        std::vector<SpacetimePoint> pts;
        for (double frac : {0.3, 0.6})
            for (auto [x, y] : {std::pair{0.3, 0.2}, std::pair{-0.5, 0.7}, std::pair{0.9, -0.4}})
                pts.push_back({t0 + frac * span, x, y});
        HelicityQuanta q{1, 0};
        auto reports = schrodinger_residual_check(q, profile, aux, pts, 1e-4);
        double adopted = reports[0].max_residual, rejected = reports[1].max_residual;
        reports[1].tolerance = INF;
        reports[1].passed = true;
        reports[2].tolerance = INF;
        reports[2].passed = true;
        for (auto& r : reports) out.push_back(r);
        // the integrated convention must beat the closed form by two decades where the two differ
        double ratio = rejected > 0.0 ? adopted / rejected : 0.0;
        out.push_back(make_report("schrodinger_adjudication", ratio, 1e-2,
                                  {{"integrated", adopted}, {"paper_closed_form", rejected}}));
    }

    if (want("lr")) out.push_back(lr_invariant_check(profile, aux, t0 + 0.5 * span, 40, 1e-6));

    if (want("algebra")) out.push_back(algebra_check(20, 1e-10));

    if (want("moments")) {
        out.push_back(moment_problem_check(weight_spec("canonical", {}), 6, 1e-10));
        for (auto [j, p] : {std::pair{1.0, 1}, std::pair{2.0, 2}})
            out.push_back(moment_problem_check(weight_spec("su2_pa", {{"j", j}, {"p", double(p)}}), 6, 1e-5));
        out.push_back(moment_problem_check(weight_spec("bg_pa", {{"k", 1.0}, {"n", 1.0}}), 6, 1e-4));
        out.push_back(moment_problem_check(weight_spec("perelomov_pa", {{"k", 1.0}, {"l", 1.0}}), 6, 1e-3));
    }

    if (want("coherent")) {
        out.push_back(eigenvector_check(40, {1.2, -0.3}, {-0.5, 0.9}, {1.1, 0.4}, 1e-8));
        out.push_back(overlap_check(1e-8));
    }
    return out;
}

} // namespace landau
