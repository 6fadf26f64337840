#include "dpa/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dpa/model.hpp"

namespace dpa::oracle {

namespace {

constexpr double kPi = std::numbers::pi;

double simpson_weight(int i, int n) {
    if (i == 0 || i == n - 1) return 1.0;
    return i % 2 == 1 ? 4.0 : 2.0;
}

// Normalized Hermite functions h_0..h_n at y, by their own three-term recurrence.
std::vector<double> hermite_table(int n, double y) {
    std::vector<double> h(n + 2, 0.0);
    h[0] = std::exp(-0.5 * y * y) / std::pow(kPi, 0.25);
    if (n >= 1) h[1] = std::sqrt(2.0) * y * h[0];
    for (int k = 1; k < n; ++k) h[k + 1] = std::sqrt(2.0 / (k + 1)) * y * h[k] - std::sqrt(double(k) / (k + 1)) * h[k - 1];
    return h;
}

}  // namespace

void validate(const GridSpec& g) {
    if (g.num_points < 3 || g.num_points % 2 == 0)
        throw DomainError("grid needs an odd number of points, at least 3");
    if (!(g.upper > g.lower)) throw DomainError("grid bounds are not increasing");
}

GridSpec default_grid(const InitialData& in, double t, const ModelParams& p, int num_points) {
    const double w = p.omega;
    const double grow = std::exp(std::abs(p.lambda * t));
    const double half = 12.0 / std::sqrt(w) * std::max({1.0, 1.0 / std::abs(in.beta0), grow});
    const double q0 = std::abs(in.eps0 / in.beta0);
    const double p0 = std::abs(in.delta0 - 2.0 * in.alpha0 * in.eps0 / in.beta0);
    const double shift = (q0 + p0 / w) * grow;
    GridSpec g{-(half + shift), half + shift, num_points};
    validate(g);
    return g;
}

std::vector<double> sample(const GridSpec& g, const std::function<double(double)>& f) {
    std::vector<double> v(g.num_points);
    for (int i = 0; i < g.num_points; ++i) v[i] = f(g.x(i));
    return v;
}

std::vector<cplx> sample(const GridSpec& g, const std::function<cplx(double)>& f) {
    std::vector<cplx> v(g.num_points);
    for (int i = 0; i < g.num_points; ++i) v[i] = f(g.x(i));
    return v;
}

double simpson(const std::vector<double>& f, double h) {
    const int n = int(f.size());
    if (n < 3 || n % 2 == 0) throw DomainError("simpson needs an odd number of samples");
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += simpson_weight(i, n) * f[i];
    return s * h / 3.0;
}

cplx simpson(const std::vector<cplx>& f, double h) {
    const int n = int(f.size());
    if (n < 3 || n % 2 == 0) throw DomainError("simpson needs an odd number of samples");
    cplx s(0.0, 0.0);
    for (int i = 0; i < n; ++i) s += simpson_weight(i, n) * f[i];
    return s * (h / 3.0);
}

double simpson_2d(const std::vector<double>& f, int nx, int ny, double hx, double hy) {
    if (nx < 3 || ny < 3 || nx % 2 == 0 || ny % 2 == 0)
        throw DomainError("simpson_2d needs odd sample counts");
    double s = 0.0;
    for (int i = 0; i < nx; ++i) {
        double row = 0.0;
        for (int j = 0; j < ny; ++j) row += simpson_weight(j, ny) * f[std::size_t(i) * ny + j];
        s += simpson_weight(i, nx) * row;
    }
    return s * hx * hy / 9.0;
}

QuadratureResult overlap(const std::vector<cplx>& f, const std::vector<cplx>& g, const GridSpec& grid) {
    validate(grid);
    if (int(f.size()) != grid.num_points || int(g.size()) != grid.num_points)
        throw DomainError("overlap: sample count does not match the grid");
    std::vector<cplx> prod(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) prod[i] = std::conj(f[i]) * g[i];
    const std::size_t last = f.size() - 1;
    const double edge = std::max({std::abs(f[0]), std::abs(f[last]), std::abs(g[0]), std::abs(g[last])});
    return {simpson(prod, grid.h()), edge, edge > 1e-12};
}

QuadratureResult overlap(const std::function<cplx(double)>& f, const std::function<cplx(double)>& g,
                         const GridSpec& grid) {
    return overlap(sample(grid, f), sample(grid, g), grid);
}

OdeState rk4_integrate(const LinearOde2& ode, double y0, double dy0, double t0, double t1, int steps) {
    if (steps < 1) throw DomainError("rk4_integrate: steps must be positive");
    const double h = (t1 - t0) / steps;
    auto accel = [&](double t, double y, double v) { return -(ode.Q(t) * v + ode.R(t) * y) / ode.P(t); };
    double y = y0, v = dy0;
    for (int i = 0; i < steps; ++i) {
        const double t = t0 + i * h;
        const double k1y = v, k1v = accel(t, y, v);
        const double k2y = v + 0.5 * h * k1v, k2v = accel(t + 0.5 * h, y + 0.5 * h * k1y, v + 0.5 * h * k1v);
        const double k3y = v + 0.5 * h * k2v, k3v = accel(t + 0.5 * h, y + 0.5 * h * k2y, v + 0.5 * h * k2v);
        const double k4y = v + h * k3v, k4v = accel(t + h, y + h * k3y, v + h * k3v);
        y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
        v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        if (!std::isfinite(y) || !std::isfinite(v))
            throw DivergenceError("rk4_integrate: non-finite state at t = " + std::to_string(t + h));
    }
    return {y, v};
}

cplx ermakov_wavefunction(const ErmakovState& s, int n, double x) {
    const double y = s.beta * x + s.eps;
    const double theta = s.alpha * x * x + s.delta * x + s.kappa + (2.0 * n + 1.0) * s.gamma;
    return std::polar(std::sqrt(std::abs(s.beta)) * hermite_table(n, y)[n], theta);
}

double tdse_residual(const std::function<ErmakovState(double)>& state_at, int n, double t,
                     const ModelParams& params, const GridSpec& grid, double dt) {
    validate(grid);
    const ErmakovState s = state_at(t);
    const ErmakovState sp = state_at(t + dt);
    const ErmakovState sm = state_at(t - dt);
    const HamiltonianCoeffs hc = hamiltonian_coeffs(t, params);
    const cplx I(0.0, 1.0);
    const double rb = std::sqrt(std::abs(s.beta));

    double worst = 0.0, peak = 0.0;
    for (int i = 0; i < grid.num_points; ++i) {
        const double x = grid.x(i);
        const double y = s.beta * x + s.eps;
        const std::vector<double> h = hermite_table(n, y);
        const double hn = h[n];
        const double dh = (n > 0 ? std::sqrt(2.0 * n) * h[n - 1] : 0.0) - y * hn;
        const double ddh = (y * y - 2.0 * n - 1.0) * hn;
        const double th = s.alpha * x * x + s.delta * x + s.kappa + (2.0 * n + 1.0) * s.gamma;
        const double dth = 2.0 * s.alpha * x + s.delta;
        const double ddth = 2.0 * s.alpha;
        const cplx e = std::polar(rb, th);
        const cplx psi = e * hn;
        const cplx dpsi = e * (I * dth * hn + s.beta * dh);
        const cplx ddpsi = e * ((I * ddth - dth * dth) * hn + 2.0 * I * dth * s.beta * dh + s.beta * s.beta * ddh);
        const cplx dt_psi = (ermakov_wavefunction(sp, n, x) - ermakov_wavefunction(sm, n, x)) / (2.0 * dt);
        const cplx Hpsi = -hc.a * ddpsi + hc.b * x * x * psi - I * hc.d * (2.0 * x * dpsi + psi);
        worst = std::max(worst, std::abs(I * dt_psi - Hpsi));
        peak = std::max(peak, std::abs(psi));
    }
    return worst / peak;
}

double tdse_residual(const InitialData& init, double t, const ModelParams& params, const GridSpec& grid,
                     GammaBranch branch) {
    return tdse_residual([&](double tt) { return evolve_closed_form(init, tt, params, branch); }, init.n, t,
                         params, grid);
}

double wigner_transform(const std::function<cplx(double)>& psi, double x, double p, double y_max,
                        int num_points) {
    const GridSpec g{-y_max, y_max, num_points};
    validate(g);
    std::vector<cplx> f(num_points);
    for (int k = 0; k < num_points; ++k) {
        const double y = g.x(k);
        f[k] = std::conj(psi(x + y)) * psi(x - y) * std::polar(1.0, 2.0 * p * y);
    }
    return simpson(f, g.h()).real() / kPi;
}

double wigner_transform(const std::vector<cplx>& psi, const GridSpec& grid, double x, double p) {
    validate(grid);
    const double pos = (x - grid.lower) / grid.h();
    const int i = int(std::lround(pos));
    if (std::abs(pos - i) > 1e-9 || i < 1 || i > grid.num_points - 2)
        throw DomainError("wigner_transform: x must be an interior grid node");
    const int K = std::min(i, grid.num_points - 1 - i);
    std::vector<cplx> f(2 * K + 1);
    for (int k = -K; k <= K; ++k)
        f[k + K] = std::conj(psi[i + k]) * psi[i - k] * std::polar(1.0, 2.0 * p * k * grid.h());
    return simpson(f, grid.h()).real() / kPi;
}

cplx momentum_amplitude(const std::vector<cplx>& psi, const GridSpec& grid, double p) {
    validate(grid);
    std::vector<cplx> f(grid.num_points);
    for (int i = 0; i < grid.num_points; ++i) f[i] = psi[i] * std::polar(1.0, -p * grid.x(i));
    return simpson(f, grid.h()) / std::sqrt(2.0 * kPi);
}

cplx complex_gaussian_integral(cplx A, cplx B, cplx C) {
    if (std::abs(A) == 0.0) throw DomainError("complex_gaussian_integral: A = 0");
    const cplx I(0.0, 1.0);
    return std::sqrt(kPi * I / A) * std::exp(I * (C - B * B / (4.0 * A)));
}

}  // namespace dpa::oracle
