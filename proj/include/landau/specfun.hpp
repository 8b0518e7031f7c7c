#pragma once

#include <complex>
#include <vector>

namespace landau {

double laguerre(int n, double alpha, double x);
double hermite(int n, double x);

enum class BesselKind { J, Y, I, K };
double bessel(BesselKind kind, double nu, double x);

double gamma_fn(double x);
// principal value on the positive real axis; imaginary part only modulo 2 pi elsewhere
std::complex<double> log_gamma(std::complex<double> z);

// pFq by partial sums; terminating when an upper parameter is a non-positive integer
double hypergeometric(const std::vector<double>& a, const std::vector<double>& b, double z);

// sum_k w^k / (k! Gamma(k+nu+1)) = I_nu(2 sqrt w) w^{-nu/2}; entire in w
std::complex<double> bessel_i_reduced(double nu, std::complex<double> w);

struct MeijerGSpec {
    int m = 0, n = 0, p = 0, q = 0;
    std::vector<double> a, b;
};

// Mellin transform of the G-function: prod Gamma(b_j+s) prod Gamma(1-a_j-s) / prod Gamma(a_j+s), log form
std::complex<double> meijer_log_mellin(const MeijerGSpec& spec, std::complex<double> s);

// Accepts only G^{2,1}_{2,2} and G^{4,0}_{2,4}.
double meijer_g(const MeijerGSpec& spec, double x);

} // namespace landau
