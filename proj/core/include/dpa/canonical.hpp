#pragma once

#include <complex>
#include <vector>

#include "dpa/ermakov.hpp"

namespace dpa {

// Oscillator Hamiltonian (p^2 + w^2 q^2)/2 written in the ladder operators a(t), a^+(t)
// of the evolving state:
//   c_aa a^2 + c_adad a^+^2 + c_sym (a a^+ + a^+ a) + c_a a + c_ad a^+ + c_const.
struct ExpansionCoeffs {
    std::complex<double> c_aa, c_adad;
    double c_sym;
    std::complex<double> c_a, c_ad;
    double c_const;
};

ExpansionCoeffs hamiltonian_expansion(const ErmakovState& s, double omega);

// <n| H |n> and <n| H^2 |n> - <n| H |n>^2 for the expansion.
double expansion_mean(const ExpansionCoeffs& c, int n);
double expansion_variance(const ExpansionCoeffs& c, int n);

struct SqueezeParams {
    double theta, tau, phi;
    std::complex<double> xi_d;
    double cosh_tau, sinh_tau;  // from the two independent closed forms
};

SqueezeParams squeeze_parameters(const ErmakovState& s, double omega);

// Residuals of the two complex equations that define theta, tau and phi.
struct SqueezeIdentityResiduals {
    double cosh_equation, sinh_equation;
};

SqueezeIdentityResiduals squeeze_identities(const ErmakovState& s, double omega,
                                            const SqueezeParams& sp);

// Shifts theta by 2 pi and phi by pi so that a time-ordered sequence is continuous.
void unwrap_squeeze_path(std::vector<SqueezeParams>& path);

struct MinimumUncertaintyTimes {
    std::vector<double> roots;     // sign changes of alpha (and exact zeros)
    std::vector<double> touching;  // |alpha| < 1e-12 without a sign change
};

MinimumUncertaintyTimes minimum_uncertainty_times(const InitialData& init, const ModelParams& params,
                                                  double t_begin, double t_end,
                                                  int grid_points = 10000);

}  // namespace dpa
