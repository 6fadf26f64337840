#include "dpa/phase_space.hpp"

#include <cmath>
#include <numbers>

#include "dpa/parallel.hpp"
#include "dpa/statistics.hpp"

namespace dpa {

RotatedCoords rotate(double x, double p, double t, double w) {
    const double c = std::cos(w * t), s = std::sin(w * t);
    return {w * x * c - p * s, w * x * s + p * c};
}

RotatedCoords unrotate(double X, double P, double t, double w) {
    const double c = std::cos(w * t), s = std::sin(w * t);
    return {(X * c + P * s) / w, -X * s + P * c};
}

SqueezedCoords squeeze_coords(double X, double P, double t, const ModelParams& params) {
    const double ep = std::exp(params.lambda * t), em = std::exp(-params.lambda * t);
    if (params.variant == Variant::PhiZero)
        return {0.5 * ((X - P) * ep + (X + P) * em), 0.5 * ((P - X) * ep + (X + P) * em)};
    return {X * em, P * ep};
}

RotatedCoords unsqueeze_coords(double U, double V, double t, const ModelParams& params) {
    const double ep = std::exp(params.lambda * t), em = std::exp(-params.lambda * t);
    if (params.variant == Variant::PhiZero) {
        const double sum = (U + V) * ep, dif = (U - V) * em;
        return {0.5 * (sum + dif), 0.5 * (sum - dif)};
    }
    return {U * ep, V * em};
}

PhaseSpacePoint phase_space_point(double x, double p, double t, const ModelParams& params) {
    const RotatedCoords r = rotate(x, p, t, params.omega);
    const SqueezedCoords s = squeeze_coords(r.X, r.P, t, params);
    return {x, p, r.X, r.P, s.U, s.V, t};
}

double quadratic_form(const InitialData& in, double U, double V, double w) {
    const double a = (in.beta0 * U + w * in.eps0) / w;
    const double b = (2.0 * in.alpha0 * U - w * (V - in.delta0)) / (in.beta0 * w);
    return a * a + b * b;
}

double wigner_vacuum(const InitialData& in, double t, const ModelParams& params, double x, double p) {
    validate(in);
    if (in.n != 0) throw DomainError("wigner_vacuum: only the n = 0 state is supported");
    const PhaseSpacePoint pt = phase_space_point(x, p, t, params);
    return std::exp(-quadratic_form(in, pt.U, pt.V, params.omega)) / std::numbers::pi;
}

WignerGrid wigner_grid(const InitialData& in, double t, const ModelParams& params, double x_min,
                       double x_max, int nx, double p_min, double p_max, int np) {
    validate(in);
    if (in.n != 0) throw DomainError("wigner_grid: only the n = 0 state is supported");
    if (nx < 2 || np < 2 || !(x_max > x_min) || !(p_max > p_min))
        throw DomainError("wigner_grid: bad grid");
    WignerGrid g;
    g.x_min = x_min;
    g.x_max = x_max;
    g.p_min = p_min;
    g.p_max = p_max;
    g.nx = nx;
    g.np = np;
    g.t = t;
    g.values.resize(std::size_t(nx) * np);
    parallel_for(nx, [&](std::size_t i) {
        for (int j = 0; j < np; ++j)
            g.values[i * np + j] = wigner_vacuum(in, t, params, g.x(int(i)), g.p(j));
    });
    return g;
}

WignerGrid wigner_grid_auto(const InitialData& in, double t, const ModelParams& params, int points) {
    const QuadratureMeans m = mean_qp(in, t, params);
    const PositionMomentumVariances v = qp_variances_closed(in, t, params, 0);
    const double sq = std::sqrt(v.sigma_q), sp = std::sqrt(v.sigma_p);
    return wigner_grid(in, t, params, m.mean_q - 8.0 * sq, m.mean_q + 8.0 * sq, points,
                       m.mean_p - 8.0 * sp, m.mean_p + 8.0 * sp, points);
}

Contour contour_q(double level, double t, const InitialData& in, const ModelParams& params,
                  int num_points) {
    validate(in);
    if (!(level > 0.0)) throw DomainError("contour_q: level must be positive");
    if (num_points < 3) throw DomainError("contour_q: need at least 3 points");
    const double w = params.omega;
    const double r = std::sqrt(level);
    Contour c;
    c.t = t;
    c.level = level;
    c.points.reserve(num_points);
    for (int k = 0; k < num_points; ++k) {
        const double th = 2.0 * std::numbers::pi * k / num_points;
        const double a = r * std::cos(th), b = r * std::sin(th);
        const double U = (w * a - w * in.eps0) / in.beta0;
        const double V = in.delta0 + 2.0 * in.alpha0 * U / w - in.beta0 * b;
        const RotatedCoords XP = unsqueeze_coords(U, V, t, params);
        const RotatedCoords xp = unrotate(XP.X, XP.P, t, w);
        c.points.emplace_back(xp.X, xp.P);
    }
    return c;
}

double polygon_area(const std::vector<std::pair<double, double>>& pts) {
    double s = 0.0;
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = pts[i];
        const auto& b = pts[(i + 1) % n];
        s += a.first * b.second - b.first * a.second;
    }
    return 0.5 * std::abs(s);
}

}  // namespace dpa
