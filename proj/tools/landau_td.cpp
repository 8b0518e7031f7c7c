#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "landau/auxode.hpp"
#include "landau/coherent.hpp"
#include "landau/errors.hpp"
#include "landau/io.hpp"
#include "landau/spectrum.hpp"
#include "landau/verify.hpp"

using namespace landau;
using io::json;

namespace {

enum Exit { OK = 0, VALIDATION = 1, NUMERICAL = 2, CHECK_FAILED = 3 };

struct Common {
    std::string profile_path;
    std::string out;
    std::string format;
    std::optional<double> t0, t1;
    int points = 401;
};

struct Loaded {
    io::ProfileDocument doc;
    std::unique_ptr<ParameterProfile> profile;
};

Loaded load(const Common& c) {
    if (c.profile_path.empty()) fail(Errc::MissingParameter, "--profile is required");
    Loaded l{io::read_profile(c.profile_path), nullptr};
    if (c.t0) l.doc.params.set("t0", *c.t0);
    if (c.t1) l.doc.params.set("t1", *c.t1);
    l.profile = std::make_unique<ParameterProfile>(make_profile(l.doc.kind, l.doc.params));
    return l;
}

std::vector<double> window(const ParameterProfile& p, int points) {
    if (points < 2) fail(Errc::GridTooShort, "--points must be >= 2");
    return uniform_grid(p.t0(), p.t1(), points);
}

AuxiliarySolution numeric_aux(const ParameterProfile& p, int points) {
    return solve_ep_numeric(p, window(p, points));
}

void emit(const Common& c, const std::string& fallback_format, const std::vector<std::string>& header,
          const std::vector<std::vector<double>>& rows, const json& as_json) {
    std::string format = c.format.empty() ? fallback_format : c.format;
    std::ostringstream buf;
    if (format == "csv") {
        if (header.empty()) fail(Errc::PreconditionViolation, "this command has no CSV form");
        io::write_csv(buf, header, rows);
    } else {
        buf << as_json.dump(2) << '\n';
    }
    if (c.out.empty() || c.out == "-") {
        std::cout << buf.str();
        return;
    }
    std::ofstream f(c.out);
    if (!f) fail(Errc::PreconditionViolation, "cannot write '" + c.out + "'");
    f << buf.str();
}

json rows_json(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows) {
    json arr = json::array();
    for (const auto& row : rows) {
        json obj;
        for (std::size_t k = 0; k < header.size(); ++k) obj[header[k]] = row[k];
        arr.push_back(obj);
    }
    return arr;
}

void add_common(CLI::App* sub, Common& c, bool profile_required) {
    auto* opt = sub->add_option("--profile", c.profile_path, "profile JSON document");
    if (profile_required) opt->required();
    sub->add_option("--out", c.out, "output path (default stdout)");
    sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--t0", c.t0, "override the profile window start");
    sub->add_option("--t1", c.t1, "override the profile window end");
    sub->add_option("--points", c.points, "time grid samples");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Time-dependent Landau problem: auxiliary solutions, spectra, wavefunctions, coherent states and "
                 "verification.\nComplex arguments are literals such as 0.3+0.1i, -2i or 1.5.\n"
                 "LANDAU_TD_THREADS caps worker threads."};
    app.require_subcommand(0, 1);
    bool print_schema = false;
    app.add_flag("--profile-schema", print_schema, "print the profile JSON schema and exit");

    Common c;

    auto* aux = app.add_subcommand("aux", "solve the Ermakov-Pinney equation; CSV t,rho,rho_dot,residual");
    add_common(aux, c, true);
    std::string closed_form;
    std::optional<double> rho0, rho_dot0;
    aux->add_option("--closed-form", closed_form, "pinney_constant | bessel_exponential | yermakov_dissipative");
    aux->add_option("--rho0", rho0, "initial rho (default adiabatic)");
    aux->add_option("--rho-dot0", rho_dot0, "initial rho' (default 0)");

    auto* classical = app.add_subcommand("classical", "classical orbit z = x1 + i x2; CSV t,x1,x2,v1,v2");
    add_common(classical, c, true);
    std::string z0 = "1", zdot0 = "0";
    classical->add_option("--z0", z0, "initial position, complex literal");
    classical->add_option("--zdot0", zdot0, "initial velocity, complex literal");

    auto* spectrum = app.add_subcommand("spectrum", "invariant spectrum n_plus,n_minus,E,l,H or a phase trace");
    add_common(spectrum, c, true);
    std::optional<double> at_time;
    int n_max = 3, n_plus = 0, n_minus = 0;
    bool phase = false;
    spectrum->add_option("--t", at_time, "evaluation time (default t0)");
    spectrum->add_option("--nmax", n_max, "largest n_plus and n_minus");
    spectrum->add_flag("--phase", phase, "emit t,gamma_integrated,gamma_paper_closed_form for --n-plus/--n-minus");
    spectrum->add_option("--n-plus", n_plus);
    spectrum->add_option("--n-minus", n_minus);

    auto* wave = app.add_subcommand("wavefunction", "eigenfunction samples r,theta,re,im");
    add_common(wave, c, true);
    int nr = 64, ntheta = 32;
    std::optional<double> r_max;
    wave->add_option("--t", at_time, "evaluation time (default t0)");
    wave->add_option("--n-plus", n_plus);
    wave->add_option("--n-minus", n_minus);
    wave->add_option("--nr", nr, "radial samples");
    wave->add_option("--ntheta", ntheta, "angular samples");
    wave->add_option("--r-max", r_max, "outer radius (default 4 rho sqrt((n_plus + n_minus + 1)/kappa))");

    auto* coherent = app.add_subcommand("coherent", "coherent-state coefficients (JSON) or distribution (CSV)");
    add_common(coherent, c, false);
    std::string family = "canonical";
    std::string zp = "0", zm = "0", zeta = "0", z = "0", eta = "0";
    double j = 0.5, k = 0.5, deform_plus = 0.0, deform_minus = 0.0;
    int p = 0, l = 0, n_add = 0, ell = 0, m_plus = 0, m_minus = 0, cutoff = 20;
    bool single = false;
    coherent->add_option("--family", family,
                         "canonical | nonlinear | photon_added | su2 | su2_pa | su11_bg | su11_perelomov | "
                         "su11_pa_perelomov | su11_pa_bg")
        ->check(CLI::IsMember({"canonical", "nonlinear", "photon_added", "su2", "su2_pa", "su11_bg", "su11_perelomov",
                               "su11_pa_perelomov", "su11_pa_bg"}));
    coherent->add_option("--z-plus", zp);
    coherent->add_option("--z-minus", zm);
    coherent->add_option("--m-plus", m_plus, "added quanta, photon_added");
    coherent->add_option("--m-minus", m_minus, "added quanta, photon_added");
    coherent->add_option("--deform-plus", deform_plus, "nonlinear f_+(n) = 1 + g n");
    coherent->add_option("--deform-minus", deform_minus, "nonlinear f_-(n) = 1 + g n");
    coherent->add_option("--j", j);
    coherent->add_option("--zeta", zeta);
    coherent->add_option("--p", p, "added quanta, su2_pa");
    coherent->add_option("--k", k, "Bargmann index of the two-mode realization");
    coherent->add_flag("--single", single, "single-mode realization with --ell");
    coherent->add_option("--ell", ell);
    coherent->add_option("--z", z);
    coherent->add_option("--eta", eta);
    coherent->add_option("--l", l, "added quanta, su11_pa_perelomov");
    coherent->add_option("--n-add", n_add, "added quanta, su11_pa_bg");
    coherent->add_option("--cutoff", cutoff);

    auto* verify = app.add_subcommand("verify", "run verification checks; JSON report array");
    add_common(verify, c, true);
    std::string suite = "all";
    verify->add_option("--suite", suite, "all | ortho | schrodinger | lr | algebra | moments | coherent");
    double tolerance_scale = 1.0;
    verify->add_option("--tolerance-scale", tolerance_scale, "multiplies every finite tolerance (default 1)")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? OK : VALIDATION;
    }

    try {
        if (print_schema) {
            std::cout << io::profile_schema().dump(2) << '\n';
            return OK;
        }
        if (app.get_subcommands().empty()) {
            std::cerr << app.help();
            return VALIDATION;
        }

        if (aux->parsed()) {
            Loaded ld = load(c);
            const ParameterProfile& prof = *ld.profile;
            std::vector<double> grid = window(prof, c.points);
            AuxiliarySolution sol;
            if (!closed_form.empty()) {
                sol = sample_closed_form(parse_closed_form_kind(closed_form), ld.doc.params, grid);
            } else {
                AuxState init = adiabatic_initial(prof, grid.front());
                sol = solve_ep_numeric(prof, rho0.value_or(init.rho), rho_dot0.value_or(init.rho_dot), grid);
            }
            std::vector<double> res = ep_residual_samples(sol, prof);
            std::vector<std::string> header{"t", "rho", "rho_dot", "residual"};
            std::vector<std::vector<double>> rows;
            for (std::size_t i = 0; i < grid.size(); ++i) rows.push_back({grid[i], sol.rho[i], sol.rho_dot[i], res[i]});
            emit(c, "csv", header, rows,
                 {{"provenance", provenance_name(sol.provenance)},
                  {"max_residual", sol.max_residual},
                  {"samples", rows_json(header, rows)}});
        } else if (classical->parsed()) {
            Loaded ld = load(c);
            ClassicalTrajectory tr =
                classical_trajectory(*ld.profile, io::parse_complex(z0), io::parse_complex(zdot0), window(*ld.profile, c.points));
            std::vector<std::string> header{"t", "x1", "x2", "v1", "v2"};
            std::vector<std::vector<double>> rows;
            for (std::size_t i = 0; i < tr.grid.size(); ++i)
                rows.push_back({tr.grid[i], tr.z[i].real(), tr.z[i].imag(), tr.z_dot[i].real(), tr.z_dot[i].imag()});
            emit(c, "csv", header, rows,
                 {{"closed_form", tr.closed_form},
                  {"eom_residual", tr.grid.size() >= 5 ? classical_eom_residual(tr, *ld.profile) : NAN},
                  {"samples", rows_json(header, rows)}});
        } else if (spectrum->parsed()) {
            Loaded ld = load(c);
            const ParameterProfile& prof = *ld.profile;
            AuxiliarySolution sol = numeric_aux(prof, std::max(c.points, 2001));
            std::vector<std::string> header;
            std::vector<std::vector<double>> rows;
            if (phase) {
                PhaseTrace tr = phase_gamma({n_plus, n_minus}, prof, sol, window(prof, c.points));
                header = {"t", "gamma_integrated", "gamma_paper_closed_form"};
                for (std::size_t i = 0; i < tr.grid.size(); ++i) rows.push_back({tr.grid[i], tr.gamma[i], tr.gamma_paper[i]});
            } else {
                if (n_max < 0) fail(Errc::PreconditionViolation, "--nmax must be >= 0");
                double t = at_time.value_or(prof.t0());
                Frame f = frame_at(prof, sol, t);
                header = {"n_plus", "n_minus", "E", "l", "H"};
                for (int a = 0; a <= n_max; ++a)
                    for (int b = 0; b <= n_max; ++b) {
                        HelicityQuanta q{a, b};
                        rows.push_back({double(a), double(b), invariant_eigenvalue(q, prof.kappa()),
                                        double(lz_eigenvalue(q)), hamiltonian_expectation(q, f)});
                    }
            }
            emit(c, "csv", header, rows, rows_json(header, rows));
        } else if (wave->parsed()) {
            Loaded ld = load(c);
            const ParameterProfile& prof = *ld.profile;
            if (nr < 1 || ntheta < 1) fail(Errc::PreconditionViolation, "--nr and --ntheta must be >= 1");
            AuxiliarySolution sol = numeric_aux(prof, std::max(c.points, 2001));
            Frame f = frame_at(prof, sol, at_time.value_or(prof.t0()));
            HelicityQuanta q{n_plus, n_minus};
            double rm = r_max.value_or(4.0 * f.rho * std::sqrt((q.n_plus + q.n_minus + 1.0) / f.kappa));
            std::vector<std::string> header{"r", "theta", "re", "im"};
            std::vector<std::vector<double>> rows;
            for (int a = 0; a < nr; ++a) {
                double r = nr == 1 ? 0.0 : rm * a / (nr - 1);
                for (int b = 0; b < ntheta; ++b) {
                    double th = 2.0 * std::numbers::pi * b / ntheta;
                    std::complex<double> v = wavefunction_polar(q, f, r, th);
                    rows.push_back({r, th, v.real(), v.imag()});
                }
            }
            emit(c, "csv", header, rows, rows_json(header, rows));
        } else if (coherent->parsed()) {
            StateVector s;
            SU11Mode mode = single ? SU11Mode::single(ell) : SU11Mode::two(k);
            if (family == "canonical") {
                s = canonical_state(io::parse_complex(zp), io::parse_complex(zm), cutoff);
            } else if (family == "nonlinear") {
                ModeFunction fp = [g = deform_plus](int n) { return 1.0 + g * n; };
                ModeFunction fm = [g = deform_minus](int n) { return 1.0 + g * n; };
                s = nonlinear_state(io::parse_complex(zp), io::parse_complex(zm), fp, fm, cutoff);
            } else if (family == "photon_added") {
                s = photon_added_state(io::parse_complex(zp), io::parse_complex(zm), m_plus, m_minus, cutoff);
            } else if (family == "su2") {
                s = su2_state(j, io::parse_complex(zeta), std::max(cutoff, int(std::lround(2 * j))));
            } else if (family == "su2_pa") {
                s = su2_pa_state(j, io::parse_complex(zeta), p, std::max(cutoff, int(std::lround(2 * j))));
            } else if (family == "su11_bg") {
                s = su11_bg_state(mode, io::parse_complex(z), cutoff);
            } else if (family == "su11_perelomov") {
                s = su11_perelomov_state(mode, io::parse_complex(eta), cutoff);
            } else if (family == "su11_pa_perelomov") {
                s = su11_pa_perelomov_state(k, io::parse_complex(eta), l, cutoff);
            } else {
                s = su11_pa_bg_state(k, io::parse_complex(z), n_add, cutoff);
            }
            std::vector<std::string> header{"n_plus", "n_minus", "probability"};
            std::vector<std::vector<double>> rows;
            Eigen::MatrixXd dist = distribution(s);
            for (int a = 0; a <= s.cutoff; ++a)
                for (int b = 0; b <= s.cutoff; ++b)
                    if (dist(a, b) > 0.0) rows.push_back({double(a), double(b), dist(a, b)});
            emit(c, "json", header, rows, io::to_json(s));
        } else if (verify->parsed()) {
            Loaded ld = load(c);
            AuxiliarySolution sol = numeric_aux(*ld.profile, std::max(c.points, 2001));
            std::vector<CheckReport> reports = run_suite(suite, *ld.profile, sol);
            json arr = json::array();
            bool all_passed = true;
            for (CheckReport& r : reports) {
                if (std::isfinite(r.tolerance)) r = make_report(r.name, r.max_residual, r.tolerance * tolerance_scale, r.details);
                arr.push_back(io::to_json(r));
                all_passed = all_passed && r.passed;
                if (!r.passed) std::cerr << "check failed: " << r.name << " residual " << io::fmt(r.max_residual) << '\n';
            }
            Common jc = c;
            jc.format = "json";
            emit(jc, "json", {}, {}, arr);
            return all_passed ? OK : CHECK_FAILED;
        }
        return OK;
    } catch (const Error& e) {
        std::cerr << "landau-td: " << e.what() << '\n';
        return is_numerical(e.code()) ? NUMERICAL : VALIDATION;
    } catch (const std::exception& e) {
        std::cerr << "landau-td: " << e.what() << '\n';
        return VALIDATION;
    }
}
