#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "dpa/ermakov.hpp"

namespace dpa::oracle {

using cplx = std::complex<double>;

// Uniform grid for composite Simpson quadrature; num_points must be odd and >= 3.
struct GridSpec {
    double lower = -10.0, upper = 10.0;
    int num_points = 4097;

    double h() const { return (upper - lower) / (num_points - 1); }
    double x(int i) const { return lower + i * h(); }
};

void validate(const GridSpec& g);

// x in [-12/sqrt(w) max(1, 1/|beta0|, e^{lambda t}), ...] shifted to cover the initial mean.
GridSpec default_grid(const InitialData& init, double t, const ModelParams& params,
                      int num_points = 4097);

std::vector<double> sample(const GridSpec& g, const std::function<double(double)>& f);
std::vector<cplx> sample(const GridSpec& g, const std::function<cplx(double)>& f);

double simpson(const std::vector<double>& f, double h);
cplx simpson(const std::vector<cplx>& f, double h);

// Simpson in both directions of a row-major nx-by-ny array.
double simpson_2d(const std::vector<double>& f, int nx, int ny, double hx, double hy);

struct QuadratureResult {
    cplx value;
    double edge_magnitude;  // max |integrand factor| at the two ends
    bool truncation_warning;  // edge_magnitude above 1e-12
};

// Composite Simpson <f, g> = int conj(f) g dx.
QuadratureResult overlap(const std::vector<cplx>& f, const std::vector<cplx>& g, const GridSpec& grid);
QuadratureResult overlap(const std::function<cplx(double)>& f, const std::function<cplx(double)>& g,
                         const GridSpec& grid);

// P(t) y'' + Q(t) y' + R(t) y = 0.
struct LinearOde2 {
    std::function<double(double)> P, Q, R;
};

struct OdeState {
    double y, dy;
};

// Classical RK4; DivergenceError on a non-finite state.
OdeState rk4_integrate(const LinearOde2& ode, double y0, double dy0, double t0, double t1, int steps);

// i d/dt psi - H psi relative to max |psi| on the grid. Spatial derivatives of psi are
// analytic; the time derivative is a central difference with step dt.
double tdse_residual(const std::function<ErmakovState(double)>& state_at, int n, double t,
                     const ModelParams& params, const GridSpec& grid, double dt = 1e-4);
double tdse_residual(const InitialData& init, double t, const ModelParams& params,
                     const GridSpec& grid, GammaBranch branch = GammaBranch::Continuous);

// Wavefunction of an Ermakov state, evaluated without the fock module.
cplx ermakov_wavefunction(const ErmakovState& s, int n, double x);

// (1/pi) int conj(psi(x+y)) psi(x-y) e^{2ipy} dy over y in [-y_max, y_max].
double wigner_transform(const std::function<cplx(double)>& psi, double x, double p, double y_max,
                        int num_points = 2049);

// The same transform for psi sampled on grid; x must be a grid node.
double wigner_transform(const std::vector<cplx>& psi, const GridSpec& grid, double x, double p);

// (1/sqrt(2 pi)) int psi(x) e^{-ipx} dx.
cplx momentum_amplitude(const std::vector<cplx>& psi, const GridSpec& grid, double p);

// int exp(i(A z^2 + B z + C)) dz = sqrt(pi i / A) exp(i(C - B^2/(4A))), principal root.
cplx complex_gaussian_integral(cplx A, cplx B, cplx C);

}  // namespace dpa::oracle
