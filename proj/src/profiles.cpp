#include "landau/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "landau/errors.hpp"

namespace landau {

ParamTable::ParamTable(std::initializer_list<std::pair<const std::string, double>> init)
{
    for (const auto& [k, v] : init) values_[k] = {v};
}

double ParamTable::get(const std::string& key) const
{
    auto it = values_.find(key);
    if (it == values_.end() || it->second.empty()) fail(Errc::MissingParameter, "key '" + key + "'");
    return it->second.front();
}

double ParamTable::get_or(const std::string& key, double fallback) const
{
    auto it = values_.find(key);
    return (it == values_.end() || it->second.empty()) ? fallback : it->second.front();
}

const std::vector<double>& ParamTable::array(const std::string& key) const
{
    auto it = values_.find(key);
    if (it == values_.end()) fail(Errc::MissingParameter, "array '" + key + "'");
    return it->second;
}

const char* kind_name(ProfileKind kind)
{
    switch (kind) {
    case ProfileKind::constant: return "constant";
    case ProfileKind::exponential: return "exponential";
    case ProfileKind::sinusoidal: return "sinusoidal";
    case ProfileKind::tabulated: return "tabulated";
    }
    return "?";
}

ParameterProfile::ParameterProfile(ProfileKind kind, double q, double B, double kappa, double t0, double t1,
                                   ScalarFn mass, ScalarFn mass_rate, ScalarFn omega, FieldFn efield)
    : kind_(kind), q_(q), B_(B), kappa_(kappa), t0_(t0), t1_(t1), mass_fn_(std::move(mass)),
      mass_rate_fn_(std::move(mass_rate)), omega_fn_(std::move(omega)), efield_fn_(std::move(efield))
{
}

bool ParameterProfile::in_domain(double t) const
{
    const double slack = 1e-12 * std::max(1.0, std::abs(span()));
    return t >= t0_ - slack && t <= t1_ + slack;
}

void ParameterProfile::require(double t) const
{
    if (!in_domain(t))
        fail(Errc::OutOfDomain, "t=" + std::to_string(t) + " outside [" + std::to_string(t0_) + ", " +
                                    std::to_string(t1_) + "]");
}

double ParameterProfile::M(double t) const { require(t); return mass_fn_(t); }
double ParameterProfile::Mdot(double t) const { require(t); return mass_rate_fn_(t); }
double ParameterProfile::omega(double t) const { require(t); return omega_fn_(t); }
std::array<double, 2> ParameterProfile::E(double t) const { require(t); return efield_fn_(t); }

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)), d_(x_.size(), 0.0)
{
    const std::size_t n = x_.size();
    if (n < 2 || y_.size() != n) fail(Errc::PreconditionViolation, "tabulated arrays need equal length >= 2");
    for (std::size_t i = 1; i < n; ++i)
        if (!(x_[i] > x_[i - 1])) fail(Errc::PreconditionViolation, "tabulated grid must be strictly increasing");

    std::vector<double> delta(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) delta[i] = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);
    d_[0] = delta[0];
    d_[n - 1] = delta[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i)
        d_[i] = (delta[i - 1] * delta[i] <= 0.0) ? 0.0 : 0.5 * (delta[i - 1] + delta[i]);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (delta[i] == 0.0) {
            d_[i] = d_[i + 1] = 0.0;
            continue;
        }
        const double a = d_[i] / delta[i], b = d_[i + 1] / delta[i];
        const double s = a * a + b * b;
        if (s > 9.0) {
            const double tau = 3.0 / std::sqrt(s);
            d_[i] = tau * a * delta[i];
            d_[i + 1] = tau * b * delta[i];
        }
    }
}

double MonotoneCubic::operator()(double t) const
{
    auto it = std::upper_bound(x_.begin(), x_.end(), t);
    std::size_t i = (it == x_.begin()) ? 0 : static_cast<std::size_t>(it - x_.begin()) - 1;
    i = std::min(i, x_.size() - 2);
    const double h = x_[i + 1] - x_[i];
    const double s = (t - x_[i]) / h;
    const double h00 = (1 + 2 * s) * (1 - s) * (1 - s), h10 = s * (1 - s) * (1 - s);
    const double h01 = s * s * (3 - 2 * s), h11 = s * s * (s - 1);
    return h00 * y_[i] + h10 * h * d_[i] + h01 * y_[i + 1] + h11 * h * d_[i + 1];
}

namespace {

ParameterProfile::FieldFn constant_field(double e1, double e2)
{
    return [e1, e2](double) { return std::array<double, 2>{e1, e2}; };
}

void check_positive(const ParameterProfile& p)
{
    if (!(p.kappa() > 0.0)) fail(Errc::PreconditionViolation, "kappa must be positive");
    if (!(p.t1() > p.t0())) fail(Errc::PreconditionViolation, "empty time domain");
    constexpr int samples = 256;
    for (int i = 0; i <= samples; ++i) {
        const double t = p.t0() + p.span() * i / samples;
        const double m = p.M(t), w = p.omega(t);
        if (!(m > 0.0) || !(w > 0.0) || !std::isfinite(m) || !std::isfinite(w))
            fail(Errc::NonPositiveMassOrFrequency, "M=" + std::to_string(m) + " omega=" + std::to_string(w) +
                                                       " at t=" + std::to_string(t));
    }
}

} // namespace

ParameterProfile make_profile(const std::string& kind, const ParamTable& params)
{
    const double q = params.get_or("q", 0.0);
    const double B = params.get_or("B", 0.0);
    const double kappa = params.get_or("kappa", 1.0);
    double t0 = params.get_or("t0", 0.0);
    double t1 = params.get_or("t1", 10.0);

    auto build = [&]() -> ParameterProfile {
        if (kind == "constant") {
            const double M = params.get("M"), w = params.get("omega");
            return ParameterProfile(
                ProfileKind::constant, q, B, kappa, t0, t1, [M](double) { return M; }, [](double) { return 0.0; },
                [w](double) { return w; }, constant_field(params.get_or("E1", 0.0), params.get_or("E2", 0.0)));
        }
        if (kind == "exponential" || kind == "exponential-mass" || kind == "exponential-frequency") {
            if (!params.has("alpha") && !params.has("beta")) fail(Errc::MissingParameter, "key 'alpha' or 'beta'");
            const double a = params.get_or("alpha", 0.0), b = params.get_or("beta", 0.0);
            const double M0 = params.get_or("M0", 1.0), w0 = params.get_or("omega0", 1.0);
            return ParameterProfile(
                ProfileKind::exponential, q, B, kappa, t0, t1, [=](double t) { return M0 * std::exp(-a * t); },
                [=](double t) { return -a * M0 * std::exp(-a * t); }, [=](double t) { return w0 * std::exp(b * t); },
                constant_field(params.get_or("E1", 0.0), params.get_or("E2", 0.0)));
        }
        if (kind == "sinusoidal") {
            const double M0 = params.get("M0"), w0 = params.get("omega0");
            const double eM = params.get_or("eps_M", 0.0), nM = params.get_or("nu_M", 1.0);
            const double ew = params.get_or("eps_omega", 0.0), nw = params.get_or("nu_omega", 1.0);
            const double E1 = params.get_or("E1", 0.0), E2 = params.get_or("E2", 0.0);
            const double eE = params.get_or("eps_E", 0.0), nE = params.get_or("nu_E", 1.0);
            return ParameterProfile(
                ProfileKind::sinusoidal, q, B, kappa, t0, t1,
                [=](double t) { return M0 * (1.0 + eM * std::sin(nM * t)); },
                [=](double t) { return M0 * eM * nM * std::cos(nM * t); },
                [=](double t) { return w0 * (1.0 + ew * std::sin(nw * t)); },
                [=](double t) {
                    const double f = 1.0 + eE * std::sin(nE * t);
                    return std::array<double, 2>{E1 * f, E2 * f};
                });
        }
        if (kind == "tabulated") {
            const auto& ts = params.array("t");
            auto mass = std::make_shared<MonotoneCubic>(ts, params.array("M"));
            auto omega = std::make_shared<MonotoneCubic>(ts, params.array("omega"));
            auto field = [&](const char* key) {
                return std::make_shared<MonotoneCubic>(
                    ts, params.has(key) ? params.array(key) : std::vector<double>(ts.size(), 0.0));
            };
            auto e1 = field("E1"), e2 = field("E2");
            if (!params.has("t0")) t0 = ts.front();
            if (!params.has("t1")) t1 = ts.back();
            if (t0 < ts.front() || t1 > ts.back()) fail(Errc::OutOfDomain, "domain exceeds tabulated grid");
            const double lo = ts.front(), hi = ts.back();
            const double h = 1e-6 * (hi - lo);
            return ParameterProfile(
                ProfileKind::tabulated, q, B, kappa, t0, t1, [mass](double t) { return (*mass)(t); },
                [mass, lo, hi, h](double t) {
                    const double a = std::max(lo, t - h), b = std::min(hi, t + h);
                    return ((*mass)(b) - (*mass)(a)) / (b - a);
                },
                [omega](double t) { return (*omega)(t); },
                [e1, e2](double t) { return std::array<double, 2>{(*e1)(t), (*e2)(t)}; });
        }
        fail(Errc::UnsupportedKind, "profile kind '" + kind + "'");
    };

    ParameterProfile profile = build();
    check_positive(profile);
    return profile;
}

DerivedFrequencies eval_derived(const ParameterProfile& profile, double t)
{
    const double M = profile.M(t);
    const double w = profile.omega(t);
    const auto E = profile.E(t);
    const double wc = profile.q() * profile.B() / M;
    return {wc, std::sqrt(w * w + 0.25 * wc * wc), std::hypot(E[0], E[1])};
}

} // namespace landau
