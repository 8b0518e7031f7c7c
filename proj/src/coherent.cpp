#include "landau/coherent.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <vector>

#include "landau/errors.hpp"
#include "landau/specfun.hpp"

namespace landau {

namespace {

constexpr int MAX_CUTOFF = 10000;
// coefficients are kept until |c| drops below 1e-17 of the peak, a relative weight of 1e-34
const double TAIL_LOG = std::log(1e-17);
constexpr double NEG_INF = -std::numeric_limits<double>::infinity();

// one mode's unnormalized coefficients as log-modulus and phase
struct Series {
    std::vector<double> logmag;
    std::vector<double> phase;

    int size() const { return int(logmag.size()); }
    double peak() const { return *std::max_element(logmag.begin(), logmag.end()); }
    // log sum |w|^2
    double log_norm2() const {
        double top = peak();
        if (!std::isfinite(top)) return NEG_INF;
        double s = 0.0;
        for (double l : logmag) s += std::exp(2.0 * (l - top));
        return 2.0 * top + std::log(s);
    }
    cplx coeff(int m, double log_scale) const {
        if (!std::isfinite(logmag[m])) return {0.0, 0.0};
        return std::polar(std::exp(logmag[m] + log_scale), phase[m]);
    }
};

using Term = std::function<std::pair<double, double>(int)>;

// grows until the amplitude falls below the tail threshold past the peak
Series grow(const Term& term, int min_terms, Errc overflow) {
    Series s;
    double top = NEG_INF;
    for (int m = 0;; ++m) {
        if (m > MAX_CUTOFF) fail(overflow, "coefficient series does not settle below cutoff 10000");
        auto [lm, ph] = term(m);
        s.logmag.push_back(lm);
        s.phase.push_back(ph);
        top = std::max(top, lm);
        if (m + 1 < min_terms) continue;
        bool falling = m == 0 || lm <= s.logmag[m - 1];
        if (!std::isfinite(lm) || (falling && lm - top < TAIL_LOG)) break;
    }
    return s;
}

double log_abs(cplx z) { return std::abs(z) == 0.0 ? NEG_INF : std::log(std::abs(z)); }

// m log|z| with the 0 * log 0 = 0 convention
double power_log(int m, double logz) { return m == 0 ? 0.0 : m * logz; }

StateVector blank(const std::string& family, int cutoff) {
    StateVector s;
    s.family = family;
    s.cutoff = cutoff;
    s.coeffs = Eigen::MatrixXcd::Zero(cutoff + 1, cutoff + 1);
    return s;
}

void finish(StateVector& s) { s.norm_deficit = 1.0 - s.norm2(); }

void put_complex(StateVector& s, const std::string& key, cplx z) {
    s.params[key + "_re"] = z.real();
    s.params[key + "_im"] = z.imag();
}

cplx get_complex(const StateVector& s, const std::string& key) {
    return {s.params.at(key + "_re"), s.params.at(key + "_im")};
}

// product state of two independent mode series
StateVector separable(const std::string& family, const Series& plus, const Series& minus, double log_scale_plus,
                      double log_scale_minus, int cutoff) {
    int n = std::max({cutoff, plus.size() - 1, minus.size() - 1});
    StateVector s = blank(family, n);
    for (int p = 0; p < plus.size(); ++p) {
        cplx cp = plus.coeff(p, log_scale_plus);
        if (cp == cplx(0.0, 0.0)) continue;
        for (int m = 0; m < minus.size(); ++m) s.coeffs(p, m) = cp * minus.coeff(m, log_scale_minus);
    }
    return s;
}

void check_lattice_k(double k) {
    double two_k = 2.0 * k;
    if (!(k >= 0.5) || std::abs(two_k - std::round(two_k)) > 1e-12)
        fail(Errc::PreconditionViolation, "Bargmann index must satisfy 2k - 1 in N");
}

int lattice_ell_of(double k) { return int(std::lround(2.0 * k - 1.0)); }

// places a one-dimensional su(1,1) ladder at index offset `shift` on the lattice
StateVector su11_embed(const std::string& family, int ell, int shift, const Series& ser, double log_scale,
                       int cutoff) {
    int L = std::abs(ell);
    int top = shift + ser.size() - 1 + L;
    StateVector s = blank(family, std::max(cutoff, top));
    for (int m = 0; m < ser.size(); ++m) {
        int idx = m + shift;
        cplx c = ser.coeff(m, log_scale);
        if (ell >= 0)
            s.coeffs(idx + L, idx) = c;
        else
            s.coeffs(idx, idx + L) = c;
    }
    return s;
}

double log_factorial(int n) { return std::lgamma(n + 1.0); }

} // namespace

StateVector StateVector::resized(int new_cutoff) const {
    if (new_cutoff < 0) fail(Errc::CutoffTooSmall, "cutoff must be >= 0");
    StateVector out = *this;
    out.cutoff = new_cutoff;
    out.coeffs = Eigen::MatrixXcd::Zero(new_cutoff + 1, new_cutoff + 1);
    int keep = std::min(cutoff, new_cutoff) + 1;
    out.coeffs.topLeftCorner(keep, keep) = coeffs.topLeftCorner(keep, keep);
    out.norm_deficit = norm_deficit + (norm2() - out.norm2());
    return out;
}

Eigen::VectorXcd StateVector::to_vector() const {
    Eigen::VectorXcd v(coeffs.size());
    for (int p = 0; p <= cutoff; ++p)
        for (int m = 0; m <= cutoff; ++m) v(basis_index(p, m, cutoff)) = coeffs(p, m);
    return v;
}

SU11Mode SU11Mode::two(double k) {
    check_lattice_k(k);
    return {true, k, lattice_ell_of(k)};
}

SU11Mode SU11Mode::single(int ell) { return {false, 0.5 * (std::abs(ell) + 1), ell}; }

double SU11Mode::bargmann() const { return k; }
int SU11Mode::lattice_ell() const { return ell; }

StateVector canonical_state(cplx z_plus, cplx z_minus, int cutoff) {
    auto mode = [](cplx z) {
        double lz = log_abs(z), az = std::arg(z);
        return grow([=](int n) { return std::pair{power_log(n, lz) - 0.5 * log_factorial(n), n * az}; }, 1,
                    Errc::CutoffOverflow);
    };
    Series sp = mode(z_plus), sm = mode(z_minus);
    StateVector s = separable("canonical", sp, sm, -0.5 * std::norm(z_plus), -0.5 * std::norm(z_minus), cutoff);
    put_complex(s, "z_plus", z_plus);
    put_complex(s, "z_minus", z_minus);
    s.params["phase"] = 0.0;
    finish(s);
    return s;
}

cplx overlap(const StateVector& a, const StateVector& b) {
    if (a.cutoff != b.cutoff)
        fail(Errc::CutoffMismatch,
             "overlap needs equal cutoffs (" + std::to_string(a.cutoff) + " vs " + std::to_string(b.cutoff) + ")");
    return (a.coeffs.conjugate().cwiseProduct(b.coeffs)).sum();
}

Eigen::MatrixXd distribution(const StateVector& s) { return s.coeffs.cwiseAbs2(); }

EvolutionParams evolution_params(const Frame& f) {
    double T1 = (f.M * f.rho_dot * f.rho_dot + f.kappa * f.kappa / (f.M * f.rho * f.rho) +
                 f.M * f.Omega * f.Omega * f.rho * f.rho) /
                (2.0 * f.kappa);
    double qe = f.q * f.E;
    double lambda = qe == 0.0 ? 0.0 : qe * qe / (2.0 * f.M * f.omega);
    return {T1, 0.5 * f.omega_c, lambda};
}

EvolutionParams evolution_params(const ParameterProfile& profile, const AuxiliarySolution& aux, double t) {
    return evolution_params(frame_at(profile, aux, t));
}

StateVector evolve_canonical(const StateVector& s, const EvolutionParams& params, double tau) {
    if (s.family != "canonical") fail(Errc::WrongFamily, "evolve_canonical needs a canonical state, got " + s.family);
    cplx zp = get_complex(s, "z_plus") * std::polar(1.0, -(params.T1 + params.T2) * tau);
    cplx zm = get_complex(s, "z_minus") * std::polar(1.0, -(params.T1 - params.T2) * tau);
    StateVector out = canonical_state(zp, zm, s.cutoff);
    if (out.cutoff != s.cutoff) out = out.resized(std::max(out.cutoff, s.cutoff));
    double phase = s.params.at("phase") - (params.T1 - params.lambda) * tau;
    out.coeffs *= std::polar(1.0, phase);
    out.params["phase"] = phase;
    return out;
}

StateVector nonlinear_state(cplx alpha_plus, cplx alpha_minus, const ModeFunction& f_plus,
                            const ModeFunction& f_minus, int cutoff) {
    auto mode = [](cplx alpha, const ModeFunction& f) {
        double la = log_abs(alpha), aa = std::arg(alpha);
        double log_fact_f = 0.0;
        int negatives = 0;
        return grow(
            [&, la, aa](int n) {
                if (n > 0) {
                    double fn = f(n);
                    if (fn == 0.0 || !std::isfinite(fn)) fail(Errc::ZeroF, "f(" + std::to_string(n) + ") = 0");
                    log_fact_f += std::log(std::abs(fn));
                    negatives += fn < 0.0;
                }
                return std::pair{power_log(n, la) - 0.5 * log_factorial(n) - log_fact_f,
                                 n * aa + std::numbers::pi * negatives};
            },
            1, Errc::NormalizationDiverges);
    };
    Series sp = mode(alpha_plus, f_plus), sm = mode(alpha_minus, f_minus);
    StateVector s = separable("nonlinear", sp, sm, -0.5 * sp.log_norm2(), -0.5 * sm.log_norm2(), cutoff);
    put_complex(s, "alpha_plus", alpha_plus);
    put_complex(s, "alpha_minus", alpha_minus);
    finish(s);
    return s;
}

StateVector photon_added_state(cplx alpha_plus, cplx alpha_minus, int m_plus, int m_minus, int cutoff) {
    if (m_plus < 0 || m_minus < 0) fail(Errc::PreconditionViolation, "added quanta must be >= 0");
    auto mode = [](cplx alpha, int added) {
        double la = log_abs(alpha), aa = std::arg(alpha);
        return grow(
            [=](int n) {
                if (n < added) return std::pair{NEG_INF, 0.0};
                int k = n - added;
                return std::pair{power_log(k, la) + 0.5 * log_factorial(n) - log_factorial(k), k * aa};
            },
            added + 1, Errc::CutoffOverflow);
    };
    Series sp = mode(alpha_plus, m_plus), sm = mode(alpha_minus, m_minus);
    StateVector s = separable("photon_added", sp, sm, -0.5 * sp.log_norm2(), -0.5 * sm.log_norm2(), cutoff);
    put_complex(s, "alpha_plus", alpha_plus);
    put_complex(s, "alpha_minus", alpha_minus);
    s.params["m_plus"] = m_plus;
    s.params["m_minus"] = m_minus;
    finish(s);
    return s;
}

double pa_nonlinear_function(int m_plus, int m_minus, int n_plus, int n_minus) {
    return (1.0 - double(m_plus) / (n_plus + 1)) * (1.0 - double(m_minus) / (n_minus + 1));
}

namespace {

int two_j_of(double j) {
    double tj = 2.0 * j;
    if (!(tj >= 0.0) || std::abs(tj - std::round(tj)) > 1e-12)
        fail(Errc::PreconditionViolation, "j must be a non-negative half-integer");
    return int(std::lround(tj));
}

} // namespace

double su2_pa_normalization(double j, int p, double zeta_abs2) {
    int tj = two_j_of(j);
    if (p < 0 || p > tj) fail(Errc::PTooLarge, "p must lie in [0, 2j]");
    return std::exp(std::lgamma(1.0 + tj) + std::lgamma(1.0 + p) - std::lgamma(1.0 + tj - p)) *
           hypergeometric({1.0 + p, double(p - tj)}, {1.0}, -zeta_abs2);
}

StateVector su2_state(double j, cplx zeta, int cutoff) {
    int tj = two_j_of(j);
    if (cutoff < tj) fail(Errc::CutoffTooSmall, "su2_state needs cutoff >= 2j");
    StateVector s = blank("su2", cutoff);
    double lz = log_abs(zeta), az = std::arg(zeta);
    double lnorm = -j * std::log1p(std::norm(zeta));
    for (int m = 0; m <= tj; ++m) {
        double lm = 0.5 * (log_factorial(tj) - log_factorial(m) - log_factorial(tj - m)) + power_log(m, lz) + lnorm;
        if (std::isfinite(lm)) s.coeffs(m, tj - m) = std::polar(std::exp(lm), m * az);
    }
    s.params["j"] = j;
    put_complex(s, "zeta", zeta);
    finish(s);
    return s;
}

StateVector su2_pa_state(double j, cplx zeta, int p, int cutoff) {
    int tj = two_j_of(j);
    if (p < 0 || p > tj) fail(Errc::PTooLarge, "su2_pa_state needs 0 <= p <= 2j");
    if (cutoff < tj) fail(Errc::CutoffTooSmall, "su2_pa_state needs cutoff >= 2j");
    StateVector s = blank("su2_pa", cutoff);
    double lz = log_abs(zeta), az = std::arg(zeta);
    double lnorm = -0.5 * std::log(su2_pa_normalization(j, p, std::norm(zeta)));
    for (int m = 0; m <= tj - p; ++m) {
        double lm = 0.5 * (log_factorial(tj) + log_factorial(m + p) - 2.0 * log_factorial(m) -
                           log_factorial(tj - m - p)) +
                    power_log(m, lz) + lnorm;
        if (std::isfinite(lm)) s.coeffs(m + p, tj - m - p) = std::polar(std::exp(lm), m * az);
    }
    s.params["j"] = j;
    s.params["p"] = p;
    put_complex(s, "zeta", zeta);
    finish(s);
    return s;
}

StateVector su11_bg_state(const SU11Mode& mode, cplx z, int cutoff) {
    int ell = mode.lattice_ell();
    int L = std::abs(ell);
    double lz = log_abs(z), az = std::arg(z);
    Series ser = grow(
        [=](int m) {
            return std::pair{power_log(m, lz) - 0.5 * (log_factorial(m) + std::lgamma(m + L + 1.0)), m * az};
        },
        1, Errc::CutoffOverflow);
    double x = 2.0 * std::abs(z);
    double log_scale;
    if (x == 0.0)
        log_scale = 0.5 * std::lgamma(L + 1.0);
    else if (x < 600.0)
        log_scale = 0.5 * (L * lz - std::log(bessel(BesselKind::I, L, x)));
    else
        log_scale = -0.5 * ser.log_norm2();
    StateVector s = su11_embed("su11_bg", ell, 0, ser, log_scale, cutoff);
    s.params["k"] = mode.bargmann();
    s.params["ell"] = ell;
    s.params["two_mode"] = mode.two_mode;
    put_complex(s, "z", z);
    finish(s);
    return s;
}

StateVector su11_perelomov_state(const SU11Mode& mode, cplx eta, int cutoff) {
    if (!(std::abs(eta) < 1.0)) fail(Errc::EtaOutOfDisk, "Perelomov states need |eta| < 1");
    int ell = mode.lattice_ell();
    double two_k = std::abs(ell) + 1.0;
    double le = log_abs(eta), ae = std::arg(eta);
    Series ser = grow(
        [=](int m) {
            return std::pair{0.5 * (std::lgamma(two_k + m) - log_factorial(m) - std::lgamma(two_k)) + power_log(m, le),
                             m * ae};
        },
        1, Errc::CutoffOverflow);
    double log_scale = 0.5 * two_k * std::log1p(-std::norm(eta));
    StateVector s = su11_embed("su11_perelomov", ell, 0, ser, log_scale, cutoff);
    s.params["k"] = mode.bargmann();
    s.params["ell"] = ell;
    s.params["two_mode"] = mode.two_mode;
    // exponent printed for the single-mode prefactor; the stored state is normalized with half of it
    if (!mode.two_mode) s.params["paper_prefactor_exponent"] = two_k;
    put_complex(s, "eta", eta);
    finish(s);
    return s;
}

double pa_perelomov_weight(double k, int l, int m) {
    return std::exp(2.0 * log_factorial(m) + std::lgamma(2.0 * k) - std::lgamma(m + l + 1.0) -
                    std::lgamma(m + 2.0 * k + l));
}

double pa_bg_weight(double k, int n, int m) {
    return std::exp(2.0 * log_factorial(m) + 2.0 * std::lgamma(m + 2.0 * k) - std::lgamma(m + n + 1.0) -
                    std::lgamma(m + n + 2.0 * k));
}

StateVector su11_pa_perelomov_state(double k, cplx eta, int l, int cutoff) {
    if (!(std::abs(eta) < 1.0)) fail(Errc::EtaOutOfDisk, "Perelomov states need |eta| < 1");
    if (l < 0) fail(Errc::PreconditionViolation, "added quanta must be >= 0");
    check_lattice_k(k);
    double le = log_abs(eta), ae = std::arg(eta);
    Series ser = grow(
        [=](int m) {
            double log_f = 2.0 * log_factorial(m) + std::lgamma(2.0 * k) - std::lgamma(m + l + 1.0) -
                           std::lgamma(m + 2.0 * k + l);
            return std::pair{power_log(m, le) - 0.5 * log_f, m * ae};
        },
        1, Errc::CutoffOverflow);
    StateVector s = su11_embed("su11_pa_perelomov", lattice_ell_of(k), l, ser, -0.5 * ser.log_norm2(), cutoff);
    s.params["k"] = k;
    s.params["l"] = l;
    put_complex(s, "eta", eta);
    finish(s);
    return s;
}

StateVector su11_pa_bg_state(double k, cplx z, int n_add, int cutoff) {
    if (n_add < 0) fail(Errc::PreconditionViolation, "added quanta must be >= 0");
    check_lattice_k(k);
    double lz = log_abs(z), az = std::arg(z);
    Series ser = grow(
        [=](int m) {
            double log_rho = 2.0 * log_factorial(m) + 2.0 * std::lgamma(m + 2.0 * k) -
                             std::lgamma(m + n_add + 1.0) - std::lgamma(m + n_add + 2.0 * k);
            return std::pair{power_log(m, lz) - 0.5 * log_rho, m * az};
        },
        1, Errc::CutoffOverflow);
    StateVector s = su11_embed("su11_pa_bg", lattice_ell_of(k), n_add, ser, -0.5 * ser.log_norm2(), cutoff);
    s.params["k"] = k;
    s.params["n_add"] = n_add;
    put_complex(s, "z", z);
    finish(s);
    return s;
}

cplx single_mode_wavefunction(SingleModeFamily family, int ell, cplx param, const Frame& f, double u,
                              double theta) {
    if (u < 0.0) fail(Errc::PreconditionViolation, "u must be >= 0");
    int L = std::abs(ell);
    cplx beta(1.0, -f.M * f.rho * f.rho_dot / f.kappa);
    cplx common = std::sqrt(f.kappa / std::numbers::pi) / f.rho * (L == 0 ? 1.0 : std::pow(u, 0.5 * L)) *
                  std::exp(-0.5 * beta * u - cplx(0.0, ell * theta));
    if (family == SingleModeFamily::bg) {
        double az = std::abs(param);
        double norm = az == 0.0 ? std::sqrt(std::tgamma(L + 1.0))
                                : std::sqrt(std::pow(az, L) / bessel(BesselKind::I, L, 2.0 * az));
        return common * norm * std::exp(-param) * bessel_i_reduced(L, u * param);
    }
    if (!(std::abs(param) < 1.0)) fail(Errc::EtaOutOfDisk, "Perelomov states need |eta| < 1");
    double pref = std::pow(1.0 - std::norm(param), 0.5 * (L + 1)) / std::sqrt(std::tgamma(L + 1.0));
    cplx one_plus = 1.0 + param;
    return common * pref * std::exp(u * param / one_plus) / std::pow(one_plus, double(L + 1));
}

cplx single_mode_wavefunction(SingleModeFamily family, int ell, cplx param, const ParameterProfile& profile,
                              const AuxiliarySolution& aux, double t, double u, double theta) {
    return single_mode_wavefunction(family, ell, param, frame_at(profile, aux, t), u, theta);
}

double nonlinear_moment_target(int m, const ModeFunction& f) {
    double log_ff = 0.0;
    for (int k = 1; k <= m; ++k) {
        double fk = f(k);
        if (fk == 0.0) fail(Errc::ZeroF, "f(" + std::to_string(k) + ") = 0");
        log_ff += std::log(std::abs(fk));
    }
    return std::exp(log_factorial(m) + 2.0 * log_ff);
}

namespace {

// characteristic function sum_m F(m) (iy)^m / m! of the moment sequence F, smoothed by a Gaussian
std::shared_ptr<std::vector<cplx>> smoothed_characteristic(const std::function<long double(int)>& log_moment,
                                                          double y_max, double dy, double sigma) {
    auto out = std::make_shared<std::vector<cplx>>();
    int count = int(std::lround(y_max / dy));
    for (int j = 0; j <= count; ++j) {
        long double y = j * (long double)dy;
        std::complex<long double> acc = 0.0L;
        std::complex<long double> ipow = 1.0L;
        const std::complex<long double> iu(0.0L, 1.0L);
        for (int m = 0; m < 2000; ++m) {
            long double log_mag = (m == 0 ? 0.0L : m * std::log(y)) - std::lgamma((long double)m + 1.0L) +
                                  log_moment(m);
            long double mag = (y == 0.0L && m > 0) ? 0.0L : std::exp(log_mag);
            acc += ipow * mag;
            ipow *= iu;
            if (m > y + 10 && mag < 1e-30L) break;
        }
        double damp = std::exp(-0.5 * sigma * sigma * double(y * y));
        out->push_back(cplx(double(acc.real()), double(acc.imag())) * damp);
    }
    return out;
}

} // namespace

WeightSpec weight_spec(const std::string& family, const ParamTable& params) {
    WeightSpec w;
    w.family = family;
    if (family == "canonical" || family == "nonlinear") {
        w.evaluator = [](double x) { return std::exp(-x); };
        w.moment_target = [](int m) { return std::exp(log_factorial(m)); };
        return w;
    }
    if (family == "su2_pa") {
        int tj = two_j_of(params.get("j"));
        int p = int(params.get_or("p", 0.0));
        if (p < 0 || p > tj) fail(Errc::UnsupportedFamily, "su2_pa weight needs 0 <= p <= 2j");
        MeijerGSpec g{2, 1, 2, 2, {double(p - tj - 1), double(p)}, {0.0, 0.0}};
        double scale = std::exp(-log_factorial(tj));
        w.evaluator = [g, scale](double x) { return scale * meijer_g(g, x); };
        w.moment_target = [tj, p](int m) {
            return std::exp(2.0 * log_factorial(m) + log_factorial(tj - m - p) - log_factorial(tj) -
                            log_factorial(m + p));
        };
        w.max_moment = tj - p;
        return w;
    }
    if (family == "bg_pa") {
        double k = params.get("k");
        int n = int(params.get_or("n", 0.0));
        if (!(k > 0.0) || n < 0) fail(Errc::UnsupportedFamily, "bg_pa weight needs k > 0, n >= 0");
        double b = 2.0 * k - 1.0;
        // x^n G(x | 0, b; -n, -n, b-n, b-n) with the power absorbed into the parameters
        MeijerGSpec g{4, 0, 2, 4, {double(n), b + n}, {0.0, 0.0, b, b}};
        w.evaluator = [g](double x) { return meijer_g(g, x); };
        w.moment_target = [k, n](int m) { return pa_bg_weight(k, n, m); };
        return w;
    }
    if (family == "perelomov_pa") {
        double k = params.get("k");
        int l = int(params.get_or("l", 0.0));
        if (!(k > 0.0) || l < 0) fail(Errc::UnsupportedFamily, "perelomov_pa weight needs k > 0, l >= 0");
        const double sigma = 0.25, y_max = 30.0, dy = 0.05;
        auto log_moment = [k, l](int m) {
            long double mm = m;
            return 2.0L * std::lgamma(mm + 1.0L) + std::lgamma(2.0L * k) - std::lgamma(mm + l + 1.0L) -
                   std::lgamma(mm + 2.0L * k + l);
        };
        auto chi = smoothed_characteristic(log_moment, y_max, dy, sigma);
        w.evaluator = [chi, dy](double x) {
            double acc = 0.5 * (*chi)[0].real();
            for (std::size_t j = 1; j < chi->size(); ++j)
                acc += ((*chi)[j] * std::polar(1.0, -x * dy * double(j))).real();
            return acc * dy / std::numbers::pi;
        };
        w.moment_target = [k, l](int m) { return pa_perelomov_weight(k, l, m); };
        w.reg_sigma = sigma;
        w.support_lo = -2.5;
        w.support_hi = 3.5;
        return w;
    }
    fail(Errc::UnsupportedFamily, "no weight function for family '" + family + "'");
}

} // namespace landau
