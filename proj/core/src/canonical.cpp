#include "dpa/canonical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace dpa {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

double alpha_at(const InitialData& in, double t, const ModelParams& p) {
    return evolve_closed_form(in, t, p).alpha;
}

}  // namespace

ExpansionCoeffs hamiltonian_expansion(const ErmakovState& s, double w) {
    const double a = s.alpha, b = s.beta, b2 = b * b;
    const double pp = s.delta - 2.0 * a * s.eps / b;
    const double re_aa = (4.0 * a * a - b2 * b2 + w * w) / (4.0 * b2);
    const double re_lin = a / b * pp - s.eps * w * w / (2.0 * b2);
    ExpansionCoeffs c{};
    c.c_aa = cplx(re_aa, -a);
    c.c_adad = std::conj(c.c_aa);
    c.c_sym = (4.0 * a * a + b2 * b2 + w * w) / (4.0 * b2);
    c.c_a = std::sqrt(2.0) * cplx(re_lin, -0.5 * b * pp);
    c.c_ad = std::conj(c.c_a);
    c.c_const = 0.5 * pp * pp + s.eps * s.eps * w * w / (2.0 * b2);
    return c;
}

double expansion_mean(const ExpansionCoeffs& c, int n) { return (2.0 * n + 1.0) * c.c_sym + c.c_const; }

double expansion_variance(const ExpansionCoeffs& c, int n) {
    const double h = n + 0.5;
    return 2.0 * std::norm(c.c_aa) * (h * h + 0.75) + std::norm(c.c_a) * (2.0 * n + 1.0);
}

SqueezeParams squeeze_parameters(const ErmakovState& s, double w) {
    const double a = s.alpha, b = s.beta, b2 = b * b;
    const double rw = std::sqrt(w);
    const cplx lead = cplx(b, -2.0 * a / b) / rw;
    const cplx u = lead + rw / b;
    const cplx v = lead - rw / b;
    const double extra = 4.0 * a * a / (w * b2);
    const double sum = b / rw + rw / b, dif = b / rw - rw / b;

    SqueezeParams sp{};
    sp.cosh_tau = 0.5 * std::sqrt(sum * sum + extra);
    sp.sinh_tau = 0.5 * std::sqrt(dif * dif + extra);
    sp.tau = std::asinh(sp.sinh_tau);
    sp.theta = -std::arg(u);
    sp.phi = std::abs(v) < 1e-14 * std::abs(u) ? 0.0 : 0.5 * (sp.theta - std::arg(v));
    sp.xi_d = cplx(s.eps, -s.delta / b) / std::sqrt(2.0);
    return sp;
}

SqueezeIdentityResiduals squeeze_identities(const ErmakovState& s, double w, const SqueezeParams& sp) {
    const double b = s.beta, rw = std::sqrt(w);
    const cplx lead = cplx(b, -2.0 * s.alpha / b) / rw;
    const cplx I(0.0, 1.0);
    return {std::abs(lead + rw / b - 2.0 * std::exp(-I * sp.theta) * sp.cosh_tau),
            std::abs(lead - rw / b - 2.0 * std::exp(I * (sp.theta - 2.0 * sp.phi)) * sp.sinh_tau)};
}

void unwrap_squeeze_path(std::vector<SqueezeParams>& path) {
    for (std::size_t i = 1; i < path.size(); ++i) {
        const double dtheta = path[i].theta - path[i - 1].theta;
        path[i].theta -= 2.0 * kPi * std::round(dtheta / (2.0 * kPi));
        const double dphi = path[i].phi - path[i - 1].phi;
        path[i].phi -= kPi * std::round(dphi / kPi);
    }
}

MinimumUncertaintyTimes minimum_uncertainty_times(const InitialData& in, const ModelParams& p,
                                                  double t0, double t1, int grid_points) {
    validate(in);
    if (!(t1 > t0)) throw DomainError("minimum_uncertainty_times: empty time range");
    if (grid_points < 2) throw DomainError("minimum_uncertainty_times: need at least 2 grid points");
    const int N = grid_points;
    std::vector<double> ts(N + 1), as(N + 1);
    for (int i = 0; i <= N; ++i) {
        ts[i] = t0 + (t1 - t0) * i / N;
        as[i] = alpha_at(in, ts[i], p);
    }
    const double scale = std::max(1.0, std::abs(in.alpha0));
    const double zero_tol = 1e-14 * scale;

    MinimumUncertaintyTimes out;
    for (int i = 0; i <= N; ++i) {
        if (std::abs(as[i]) <= zero_tol) {
            out.roots.push_back(ts[i]);
            continue;
        }
        if (i < N && std::abs(as[i + 1]) > zero_tol && (as[i] < 0.0) != (as[i + 1] < 0.0)) {
            double lo = ts[i], hi = ts[i + 1], flo = as[i];
            for (int it = 0; it < 200 && hi - lo > 1e-14 * std::max(1.0, std::abs(hi)); ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm = alpha_at(in, mid, p);
                if (fm == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if ((fm < 0.0) == (flo < 0.0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            out.roots.push_back(0.5 * (lo + hi));
        }
        // Local minimum of |alpha| between two same-sign neighbours.
        if (i > 0 && i < N && std::abs(as[i]) <= std::abs(as[i - 1]) && std::abs(as[i]) <= std::abs(as[i + 1]) &&
            (as[i - 1] < 0.0) == (as[i] < 0.0) && (as[i + 1] < 0.0) == (as[i] < 0.0)) {
            const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
            double lo = ts[i - 1], hi = ts[i + 1];
            for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
                const double m1 = hi - gr * (hi - lo), m2 = lo + gr * (hi - lo);
                if (std::abs(alpha_at(in, m1, p)) < std::abs(alpha_at(in, m2, p)))
                    hi = m2;
                else
                    lo = m1;
            }
            const double tm = 0.5 * (lo + hi);
            if (std::abs(alpha_at(in, tm, p)) < 1e-12 * scale) out.touching.push_back(tm);
        }
    }
    std::sort(out.roots.begin(), out.roots.end());
    out.roots.erase(std::unique(out.roots.begin(), out.roots.end(),
                                [](double a, double b) { return std::abs(a - b) < 1e-12; }),
                    out.roots.end());
    return out;
}

}  // namespace dpa
