#pragma once

#include <complex>
#include <vector>

#include "dpa/ermakov.hpp"

namespace dpa {

using cplx = std::complex<double>;

// Physicists' Hermite polynomial by upward recurrence.
double hermite(int n, double x);

// Normalized Hermite function H_n(y) e^{-y^2/2} / sqrt(2^n n! sqrt(pi)), computed by
// the normalized recurrence so that no factorial or power is ever formed.
double hermite_function(int n, double y);

// Fills out[0..nmax] with the normalized Hermite functions at y.
void hermite_functions(int nmax, double y, double* out);

// Stationary oscillator eigenfunction Psi_m(x) for frequency omega.
double stationary_wavefunction(int m, double x, double omega);

// psi_n(x) for the Ermakov state s; sqrt(beta) is taken as sqrt(|beta|).
cplx squeezed_wavefunction(const ErmakovState& s, int n, double x);
cplx squeezed_wavefunction(const InitialData& init, double t, const ModelParams& params, double x);

struct WavefunctionGrid {
    double x_min = 0.0, x_max = 0.0;
    int num_points = 0;
    std::vector<cplx> values;
    double t = 0.0;
    int n = 0;

    double dx() const { return (x_max - x_min) / (num_points - 1); }
    double x(int i) const { return x_min + i * dx(); }
};

WavefunctionGrid sample_squeezed(const InitialData& init, double t, const ModelParams& params,
                                 double x_min, double x_max, int num_points);

// Displacement kernel in the Fock basis.
cplx matrix_T(int m, int n, double A, double B, double Gamma);

// Pure squeeze kernel for the Gaussian exp(i alpha x^2) with width beta. branch
// selects the sign in the 2F1 argument 1 +- 2i beta sqrt(w) / sqrt(...); +1 matches
// the overlap integrals.
cplx matrix_M(int m, int n, double alpha, double beta, double omega, int branch = +1);

// Time-dependent displacement kernel. DomainError when |xi|^2 and B_t disagree.
cplx matrix_R(int m, int n, cplx xi, double B_t, double D, double omega);

// Time-dependent squeeze kernel. DomainError when A_t < 2 omega.
cplx matrix_N(int m, int n, cplx eta, cplx zeta, double A_t, double omega);

struct AmplitudeOptions {
    int nmax = 0;            // 0: start from the adaptive default
    bool adaptive = true;    // grow nmax until the tail mass is below tail_target
    double tail_target = 1e-10;
    int nmax_limit = 512;
};

// Column n of the transition amplitudes c_mn = e^{i w (m + 1/2) t} <Psi_m, psi_n(t)>.
struct AmplitudeMatrix {
    std::vector<cplx> entries;  // m = 0..nmax, from the squeeze-then-displace order
    std::vector<cplx> entries_reversed;  // displace-then-squeeze order
    int n = 0;
    int nmax = 0;
    double tail_mass = 0.0;
    double order_discrepancy = 0.0;
    int inner_dim_squeeze = 0;
    int inner_dim_displace = 0;
};

AmplitudeMatrix amplitudes(const InitialData& init, double t, const ModelParams& params,
                           const AmplitudeOptions& opts = {});

int default_nmax(int n, double lambda_t);

std::vector<double> photon_distribution(const AmplitudeMatrix& amps);

struct PhotonMoments {
    double mean, variance;
};

PhotonMoments photon_moments(const std::vector<double>& distribution);

}  // namespace dpa
