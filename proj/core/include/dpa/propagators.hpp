#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "dpa/fock.hpp"

namespace dpa {

// Harmonic oscillator kernel. The square-root prefactor follows the branch that is
// continuous from t -> 0+, picking up e^{-i pi/2} at each zero of sin wt.
cplx greens_oscillator(double x, double y, double t, double omega);

// Kernel of i chi_t + (lambda / 2w)(chi_xx + w^2 x^2 chi) = 0.
cplx greens_lambda(double x, double y, double t, double omega, double lambda);

// Full propagator e^{i(a x^2 + b x y + c y^2)} / sqrt(2 pi i mu0) with the continuous branch.
cplx greens_full(double x, double y, double t, const ModelParams& params);

// prefactor * exp(i(a x^2 + b x y + c y^2))
struct QuadraticKernel {
    cplx prefactor;
    double a, b, c;
};

QuadraticKernel full_kernel(double t, const ModelParams& params);
QuadraticKernel oscillator_kernel(double t, double omega);

// int K(x, y) f(y) dy for f sampled on a uniform grid and assumed band limited.
// Uses direct quadrature when the integrand is resolved on the input grid and a
// Fourier-space chirp convolution otherwise.
std::vector<cplx> apply_kernel(const QuadraticKernel& k, const WavefunctionGrid& f,
                               const std::vector<double>& xs, std::string* method = nullptr);

struct PropagateOptions {
    double x_min = 0.0, x_max = 0.0;  // output range; empty means the input range
    int num_points = 0;               // 0 means the input count
};

struct PropagationResult {
    WavefunctionGrid grid;
    std::string method;
    // PhiHalfPi only: transport of the initial data followed by the oscillator step.
    std::optional<WavefunctionGrid> transport;
    double transport_discrepancy = 0.0;
};

// Throws DomainError when the input norm differs from 1 by more than 1e-6 and
// SingularTimeError at zeros of mu0.
PropagationResult propagate_full(const WavefunctionGrid& initial, double t, const ModelParams& params,
                                 const PropagateOptions& opts = {});

WavefunctionGrid propagate(const WavefunctionGrid& initial, double t, const ModelParams& params,
                           const PropagateOptions& opts = {});

}  // namespace dpa
