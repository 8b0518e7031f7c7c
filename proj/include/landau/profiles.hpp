#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace landau {

// Scalars are stored as length-1 arrays; tabulated profiles use longer arrays.
class ParamTable {
public:
    ParamTable() = default;
    ParamTable(std::initializer_list<std::pair<const std::string, double>> init);

    void set(const std::string& key, double value) { values_[key] = {value}; }
    void set(const std::string& key, std::vector<double> values) { values_[key] = std::move(values); }
    bool has(const std::string& key) const { return values_.count(key) != 0; }
    double get(const std::string& key) const;
    double get_or(const std::string& key, double fallback) const;
    const std::vector<double>& array(const std::string& key) const;
    const std::map<std::string, std::vector<double>>& entries() const { return values_; }

private:
    std::map<std::string, std::vector<double>> values_;
};

enum class ProfileKind { constant, exponential, sinusoidal, tabulated };

const char* kind_name(ProfileKind kind);

struct DerivedFrequencies {
    double omega_c;
    double Omega;
    double E_mag;
};

class ParameterProfile {
public:
    using ScalarFn = std::function<double(double)>;
    using FieldFn = std::function<std::array<double, 2>(double)>;

    ParameterProfile(ProfileKind kind, double q, double B, double kappa, double t0, double t1,
                     ScalarFn mass, ScalarFn mass_rate, ScalarFn omega, FieldFn efield);

    ProfileKind kind() const { return kind_; }
    double q() const { return q_; }
    double B() const { return B_; }
    double kappa() const { return kappa_; }
    double t0() const { return t0_; }
    double t1() const { return t1_; }
    double span() const { return t1_ - t0_; }
    bool in_domain(double t) const;

    double M(double t) const;
    double Mdot(double t) const;
    double omega(double t) const;
    std::array<double, 2> E(double t) const;

    // every parameter is time independent
    bool is_static() const { return kind_ == ProfileKind::constant; }

private:
    void require(double t) const;

    ProfileKind kind_;
    double q_, B_, kappa_, t0_, t1_;
    ScalarFn mass_fn_, mass_rate_fn_, omega_fn_;
    FieldFn efield_fn_;
};

// Kinds: constant {M, omega, E1, E2}; exponential / exponential-mass
// {alpha, M0, omega0, beta, E1, E2} with M = M0 e^{-alpha t}, omega = omega0 e^{beta t};
// sinusoidal {M0, omega0, eps_M, nu_M, eps_omega, nu_omega, E1, E2, eps_E, nu_E};
// tabulated {t, M, omega, E1, E2} as arrays. Common keys: q, B, kappa, t0, t1.
ParameterProfile make_profile(const std::string& kind, const ParamTable& params);

DerivedFrequencies eval_derived(const ParameterProfile& profile, double t);

// Fritsch-Carlson monotone cubic interpolant
class MonotoneCubic {
public:
    MonotoneCubic(std::vector<double> x, std::vector<double> y);
    double operator()(double t) const;

private:
    std::vector<double> x_, y_, d_;
};

} // namespace landau
