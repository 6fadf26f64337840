#include "dpa/statistics.hpp"

#include <cmath>
#include <limits>

#include "dpa/characteristic.hpp"

namespace dpa {

QuadratureVariances quadrature_variances(const ErmakovState& s, int n) {
    const double h = n + 0.5;
    const double b2 = s.beta * s.beta;
    return {h * (4.0 * s.alpha * s.alpha + b2 * b2) / b2, h / b2, h * 2.0 * s.alpha / b2};
}

double mean_photon_number(const SlowInvariants& inv, int n, double w) {
    return (n + 0.5) * inv.A / (2.0 * w) + inv.B / (2.0 * w) - 0.5;
}

double mean_photon_number(const ErmakovState& s, int n, double w) {
    const double b2 = s.beta * s.beta;
    const double p = s.delta - 2.0 * s.alpha * s.eps / s.beta;
    return (n + 0.5) * (4.0 * s.alpha * s.alpha + b2 * b2 + w * w) / (2.0 * w * b2) - 0.5 +
           (p * p + w * w * s.eps * s.eps / b2) / (2.0 * w);
}

double photon_number_variance(const SlowInvariants& inv, int n, double w) {
    const double h = n + 0.5;
    const double w2 = w * w;
    return (inv.A * inv.A - 4.0 * w2) / (8.0 * w2) * (h * h + 0.75) +
           (inv.A * inv.B - w2 * inv.C) / w2 * h;
}

double g2(double mean_n, double var_n) {
    if (mean_n == 0.0) throw DomainError("g2 is undefined for zero mean photon number");
    return 1.0 + (var_n - mean_n) / (mean_n * mean_n);
}

QuadratureMeans mean_qp(const InitialData& in, double t, const ModelParams& p) {
    validate(in);
    const double w = p.omega, l = p.lambda;
    const double q0 = -in.eps0 / in.beta0;
    const double p0 = in.delta0 - 2.0 * in.alpha0 * in.eps0 / in.beta0;
    const double c = std::cos(w * t), s = std::sin(w * t);
    if (p.variant == Variant::PhiZero) {
        const double ch = std::cosh(l * t), sh = std::sinh(l * t);
        return {q0 * (ch * c + sh * s) + p0 * (sh * c + ch * s) / w,
                (p0 * c - w * q0 * s) * ch + (w * q0 * c - p0 * s) * sh};
    }
    const double ep = std::exp(l * t), em = std::exp(-l * t);
    return {q0 * ep * c + p0 * em * s / w, p0 * em * c - w * q0 * ep * s};
}

PositionMomentumVariances qp_variances_closed(const InitialData& in, double t,
                                              const ModelParams& p, int n) {
    validate(in);
    const double w = p.omega, l = p.lambda, w2 = w * w;
    const double a0 = in.alpha0, b2 = in.beta0 * in.beta0;
    const double S = 4.0 * a0 * a0 + b2 * b2;
    const double c2 = std::cos(2.0 * w * t), s2 = std::sin(2.0 * w * t);
    double sq = 0.0, sp = 0.0;
    if (p.variant == Variant::PhiZero) {
        const double ch2 = std::cosh(2.0 * l * t), sh2 = std::sinh(2.0 * l * t);
        sq = ((S + w2 + 4.0 * a0 * w * s2) * ch2 + (4.0 * a0 * w + (S + w2) * s2) * sh2 -
              (S - w2) * c2) / (4.0 * b2 * w2);
        sp = ((S + w2 - 4.0 * a0 * w * s2) * ch2 + (4.0 * a0 * w - (S + w2) * s2) * sh2 +
              (S - w2) * c2) / (4.0 * b2);
    } else {
        const double ep = std::exp(2.0 * l * t), em = std::exp(-2.0 * l * t);
        sq = (S * em + w2 * ep) / (4.0 * b2 * w2) + a0 / (b2 * w) * s2 -
             (S * em - w2 * ep) / (4.0 * b2 * w2) * c2;
        sp = (S * em + w2 * ep) / (4.0 * b2) - a0 * w / b2 * s2 + (S * em - w2 * ep) / (4.0 * b2) * c2;
    }
    const double scale = 2.0 * n + 1.0;
    return {scale * sq, scale * sp};
}

StatisticsReport statistics_report(const InitialData& in, double t, const ModelParams& p) {
    const ErmakovState s = evolve_closed_form(in, t, p);
    const SlowInvariants inv = slow_invariants(in, t, p);
    const QuadratureVariances v = quadrature_variances(s, in.n);
    const QuadratureMeans m = mean_qp(in, t, p);
    StatisticsReport r{};
    r.sigma_p = v.sigma_p;
    r.sigma_q = v.sigma_q;
    r.sigma_pq = v.sigma_pq;
    r.mean_n = mean_photon_number(inv, in.n, p.omega);
    r.var_n = photon_number_variance(inv, in.n, p.omega);
    r.g2 = r.mean_n == 0.0 ? std::numeric_limits<double>::quiet_NaN() : g2(r.mean_n, r.var_n);
    r.mean_q = m.mean_q;
    r.mean_p = m.mean_p;
    return r;
}

}  // namespace dpa
