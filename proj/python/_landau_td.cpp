#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "landau/io.hpp"
#include "landau/specfun.hpp"
#include "landau/verify.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace landau;

namespace {

ParamTable table_from(const py::dict& d) {
    ParamTable t;
    for (auto [k, v] : d) {
        auto key = py::cast<std::string>(k);
        if (py::isinstance<py::float_>(v) || py::isinstance<py::int_>(v))
            t.set(key, py::cast<double>(v));
        else
            t.set(key, py::cast<std::vector<double>>(v));
    }
    return t;
}

py::dict report_dict(const CheckReport& r) {
    py::dict details;
    for (const auto& [k, v] : r.details) details[py::str(k)] = v;
    return py::dict("name"_a = r.name, "max_residual"_a = r.max_residual, "tolerance"_a = r.tolerance,
                    "passed"_a = r.passed, "details"_a = details);
}

PhaseConvention convention_from(const std::string& s) {
    if (s == "integrated") return PhaseConvention::integrated;
    if (s == "paper_closed_form") return PhaseConvention::paper_closed_form;
    if (s == "zero") return PhaseConvention::zero;
    fail(Errc::PreconditionViolation, "convention must be integrated, paper_closed_form or zero");
}

SU11Mode mode_from(std::optional<double> k, std::optional<int> ell) {
    if (k && ell) fail(Errc::PreconditionViolation, "give k (two-mode) or ell (single-mode), not both");
    return ell ? SU11Mode::single(*ell) : SU11Mode::two(k.value_or(0.5));
}

} // namespace

PYBIND11_MODULE(_landau_td, m) {
    m.doc() = "Time-dependent Landau problem: auxiliary equation, invariant spectrum, coherent states, checks";

    PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error;
    error.call_once_and_store_result([&]() { return py::object(py::exception<Error>(m, "LandauError")); });
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = error.get_stored()(e.what());
            exc.attr("code") = py::str(errc_name(e.code()));
            exc.attr("numerical") = is_numerical(e.code());
            PyErr_SetObject(error.get_stored().ptr(), exc.ptr());
        }
    });

    py::class_<ParameterProfile>(m, "Profile")
        .def_property_readonly("kind", [](const ParameterProfile& p) { return kind_name(p.kind()); })
        .def_property_readonly("q", &ParameterProfile::q)
        .def_property_readonly("B", &ParameterProfile::B)
        .def_property_readonly("kappa", &ParameterProfile::kappa)
        .def_property_readonly("t0", &ParameterProfile::t0)
        .def_property_readonly("t1", &ParameterProfile::t1)
        .def("M", &ParameterProfile::M, "t"_a)
        .def("Mdot", &ParameterProfile::Mdot, "t"_a)
        .def("omega", &ParameterProfile::omega, "t"_a)
        .def("E", &ParameterProfile::E, "t"_a)
        .def("Omega", [](const ParameterProfile& p, double t) { return eval_derived(p, t).Omega; }, "t"_a)
        .def("omega_c", [](const ParameterProfile& p, double t) { return eval_derived(p, t).omega_c; }, "t"_a);

    m.def("make_profile", [](const std::string& kind, const py::dict& params) { return make_profile(kind, table_from(params)); },
          "kind"_a, "params"_a);
    m.def("read_profile", [](const std::string& path) {
        auto doc = io::read_profile(path);
        return make_profile(doc.kind, doc.params);
    }, "path"_a);

    py::class_<AuxiliarySolution>(m, "AuxSolution")
        .def_readonly("grid", &AuxiliarySolution::grid)
        .def_readonly("rho", &AuxiliarySolution::rho)
        .def_readonly("rho_dot", &AuxiliarySolution::rho_dot)
        .def_readonly("max_residual", &AuxiliarySolution::max_residual)
        .def_property_readonly("provenance", [](const AuxiliarySolution& a) { return provenance_name(a.provenance); });

    m.def("uniform_grid", &uniform_grid, "t0"_a, "t1"_a, "points"_a);
    m.def("solve_aux", [](const ParameterProfile& p, const std::vector<double>& grid, std::optional<double> rho0,
                          std::optional<double> rho_dot0) {
        if (!rho0) return solve_ep_numeric(p, grid);
        return solve_ep_numeric(p, *rho0, rho_dot0.value_or(0.0), grid);
    }, "profile"_a, "grid"_a, "rho0"_a = py::none(), "rho_dot0"_a = py::none());
    m.def("closed_form_aux", [](const std::string& kind, const py::dict& params, const std::vector<double>& grid) {
        return sample_closed_form(parse_closed_form_kind(kind), table_from(params), grid);
    }, "kind"_a, "params"_a, "grid"_a);
    m.def("closed_form_profile", [](const std::string& kind, const py::dict& params) {
        return closed_form_profile(parse_closed_form_kind(kind), table_from(params));
    }, "kind"_a, "params"_a);
    m.def("ep_residual", [](const AuxiliarySolution& a, const ParameterProfile& p) { return ep_residual(a, p); },
          "aux"_a, "profile"_a);
    m.def("aux_at", [](const AuxiliarySolution& a, const ParameterProfile& p, double t) {
        AuxState s = aux_at(a, p, t);
        return py::make_tuple(s.rho, s.rho_dot);
    }, "aux"_a, "profile"_a, "t"_a);

    py::class_<Frame>(m, "Frame")
        .def_readonly("t", &Frame::t)
        .def_readonly("kappa", &Frame::kappa)
        .def_readonly("M", &Frame::M)
        .def_readonly("omega", &Frame::omega)
        .def_readonly("omega_c", &Frame::omega_c)
        .def_readonly("Omega", &Frame::Omega)
        .def_readonly("rho", &Frame::rho)
        .def_readonly("rho_dot", &Frame::rho_dot);
    m.def("frame_at", &frame_at, "profile"_a, "aux"_a, "t"_a);

    m.def("invariant_eigenvalue", [](int np, int nm, double kappa) { return invariant_eigenvalue({np, nm}, kappa); },
          "n_plus"_a, "n_minus"_a, "kappa"_a);
    m.def("hamiltonian_expectation", [](int np, int nm, const Frame& f) { return hamiltonian_expectation({np, nm}, f); },
          "n_plus"_a, "n_minus"_a, "frame"_a);
    m.def("phase", [](int np, int nm, const ParameterProfile& p, const AuxiliarySolution& a,
                      const std::vector<double>& grid) {
        PhaseTrace tr = phase_gamma({np, nm}, p, a, grid);
        return py::dict("grid"_a = tr.grid, "gamma"_a = tr.gamma, "gamma_paper_closed_form"_a = tr.gamma_paper);
    }, "n_plus"_a, "n_minus"_a, "profile"_a, "aux"_a, "grid"_a);
    m.def("wavefunction", [](int np, int nm, const Frame& f, py::array_t<double> r, double theta) {
        return py::vectorize([&](double x) { return wavefunction_polar({np, nm}, f, x, theta); })(r);
    }, "n_plus"_a, "n_minus"_a, "frame"_a, "r"_a, "theta"_a);
    m.def("uncertainty_product", py::overload_cast<int, int, const Frame&>(&uncertainty_product), "n"_a, "ell"_a,
          "frame"_a);
    m.def("invariant3d_variation", [](int np, int nm, double p, const ParameterProfile& prof,
                                      const AuxiliarySolution& a, const std::vector<double>& grid) {
        return invariant3d_diagnostic({np, nm}, p, prof, a, grid).variation;
    }, "n_plus"_a, "n_minus"_a, "p"_a, "profile"_a, "aux"_a, "grid"_a);

    py::class_<StateVector>(m, "State")
        .def_readonly("cutoff", &StateVector::cutoff)
        .def_readonly("family", &StateVector::family)
        .def_readonly("params", &StateVector::params)
        .def_readonly("norm_deficit", &StateVector::norm_deficit)
        .def_readonly("coeffs", &StateVector::coeffs)
        .def("resized", &StateVector::resized, "cutoff"_a)
        .def("distribution", &distribution);
    m.def("overlap", &overlap, "a"_a, "b"_a);
    m.def("distribution", &distribution, "state"_a);
    m.def("canonical_state", &canonical_state, "z_plus"_a, "z_minus"_a, "cutoff"_a);
    m.def("nonlinear_state", &nonlinear_state, "alpha_plus"_a, "alpha_minus"_a, "f_plus"_a, "f_minus"_a,
          "cutoff"_a);
    m.def("photon_added_state", &photon_added_state, "alpha_plus"_a, "alpha_minus"_a, "m_plus"_a, "m_minus"_a,
          "cutoff"_a);
    m.def("su2_state", &su2_state, "j"_a, "zeta"_a, "cutoff"_a);
    m.def("su2_pa_state", &su2_pa_state, "j"_a, "zeta"_a, "p"_a, "cutoff"_a);
    m.def("bg_state", [](cplx z, int cutoff, std::optional<double> k, std::optional<int> ell) {
        return su11_bg_state(mode_from(k, ell), z, cutoff);
    }, "z"_a, "cutoff"_a, "k"_a = py::none(), "ell"_a = py::none());
    m.def("perelomov_state", [](cplx eta, int cutoff, std::optional<double> k, std::optional<int> ell) {
        return su11_perelomov_state(mode_from(k, ell), eta, cutoff);
    }, "eta"_a, "cutoff"_a, "k"_a = py::none(), "ell"_a = py::none());
    m.def("pa_perelomov_state", &su11_pa_perelomov_state, "k"_a, "eta"_a, "l"_a, "cutoff"_a);
    m.def("pa_bg_state", &su11_pa_bg_state, "k"_a, "z"_a, "n_add"_a, "cutoff"_a);
    m.def("single_mode_wavefunction", [](const std::string& family, int ell, cplx param, const Frame& f, double u,
                                         double theta) {
        if (family != "bg" && family != "perelomov") fail(Errc::UnsupportedFamily, "family must be bg or perelomov");
        return single_mode_wavefunction(family == "bg" ? SingleModeFamily::bg : SingleModeFamily::perelomov, ell,
                                        param, f, u, theta);
    }, "family"_a, "ell"_a, "param"_a, "frame"_a, "u"_a, "theta"_a);

    m.def("schrodinger_residual", [](int np, int nm, const ParameterProfile& p, const AuxiliarySolution& a,
                                     const std::vector<std::array<double, 3>>& points, const std::string& convention) {
        std::vector<SpacetimePoint> pts;
        for (const auto& q : points) pts.push_back({q[0], q[1], q[2]});
        return schrodinger_residual({np, nm}, p, a, pts, convention_from(convention));
    }, "n_plus"_a, "n_minus"_a, "profile"_a, "aux"_a, "points"_a, "convention"_a = "integrated");
    m.def("run_suite", [](const std::string& suite, const ParameterProfile& p, const AuxiliarySolution& a) {
        py::list out;
        for (const auto& r : run_suite(suite, p, a)) out.append(report_dict(r));
        return out;
    }, "suite"_a, "profile"_a, "aux"_a);

    m.def("laguerre", py::vectorize(&laguerre), "n"_a, "alpha"_a, "x"_a);
    m.def("meijer_g", [](int mm, int n, const std::vector<double>& a, const std::vector<double>& b, double x) {
        MeijerGSpec spec{mm, n, int(a.size()), int(b.size()), a, b};
        return meijer_g(spec, x);
    }, "m"_a, "n"_a, "a"_a, "b"_a, "x"_a);
}
