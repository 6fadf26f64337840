#include "dpa/fock.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "dpa/hypergeometric.hpp"
#include "dpa/parallel.hpp"

namespace dpa {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;
constexpr double kSmallSq = 1e-32;
constexpr int kInnerCap = 4096;

double lfact(int n) { return std::lgamma(n + 1.0); }

cplx pairwise_sum(const cplx* v, std::size_t n) {
    if (n <= 8) {
        cplx s(0.0, 0.0);
        for (std::size_t i = 0; i < n; ++i) s += v[i];
        return s;
    }
    const std::size_t h = n / 2;
    return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

double pairwise_sum(const double* v, std::size_t n) {
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += v[i];
        return s;
    }
    const std::size_t h = n / 2;
    return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

}  // namespace

double hermite(int n, double x) {
    if (n < 0) throw DomainError("hermite: negative order");
    double h0 = 1.0;
    if (n == 0) return h0;
    double h1 = 2.0 * x;
    for (int k = 1; k < n; ++k) {
        const double h2 = 2.0 * x * h1 - 2.0 * k * h0;
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

void hermite_functions(int nmax, double y, double* out) {
    // The recurrence runs on e^{y^2/2}-scaled values with periodic rescaling, so
    // large |y| and large orders neither underflow nor overflow prematurely.
    double log_scale = 0.0;
    double prev = 0.0, cur = std::pow(kPi, -0.25);
    std::vector<double> raw(nmax + 1);
    std::vector<double> scale(nmax + 1);
    raw[0] = cur;
    scale[0] = 0.0;
    for (int k = 0; k < nmax; ++k) {
        const double next = std::sqrt(2.0 / (k + 1)) * y * cur - std::sqrt(double(k) / (k + 1)) * prev;
        prev = cur;
        cur = next;
        if (std::abs(cur) > 1e150) {
            cur *= 1e-150;
            prev *= 1e-150;
            log_scale += 150.0 * std::log(10.0);
        }
        raw[k + 1] = cur;
        scale[k + 1] = log_scale;
    }
    const double g = -0.5 * y * y;
    for (int k = 0; k <= nmax; ++k) {
        out[k] = raw[k] == 0.0 ? 0.0 : std::copysign(std::exp(std::log(std::abs(raw[k])) + scale[k] + g), raw[k]);
    }
}

double hermite_function(int n, double y) {
    if (n < 0) throw DomainError("hermite_function: negative order");
    std::vector<double> h(n + 1);
    hermite_functions(n, y, h.data());
    return h[n];
}

double stationary_wavefunction(int m, double x, double w) {
    if (m < 0) throw DomainError("stationary_wavefunction: negative order");
    if (!(w > 0.0)) throw DomainError("stationary_wavefunction: omega must be positive");
    return std::pow(w, 0.25) * hermite_function(m, x * std::sqrt(w));
}

cplx squeezed_wavefunction(const ErmakovState& s, int n, double x) {
    const double y = s.beta * x + s.eps;
    const double phase = s.alpha * x * x + s.delta * x + s.kappa + (2.0 * n + 1.0) * s.gamma;
    return std::polar(std::sqrt(std::abs(s.beta)) * hermite_function(n, y), phase);
}

cplx squeezed_wavefunction(const InitialData& init, double t, const ModelParams& params, double x) {
    return squeezed_wavefunction(evolve_closed_form(init, t, params), init.n, x);
}

WavefunctionGrid sample_squeezed(const InitialData& init, double t, const ModelParams& params,
                                 double x_min, double x_max, int num_points) {
    if (num_points < 2 || !(x_max > x_min)) throw DomainError("sample_squeezed: bad grid");
    const ErmakovState s = evolve_closed_form(init, t, params);
    WavefunctionGrid g;
    g.x_min = x_min;
    g.x_max = x_max;
    g.num_points = num_points;
    g.t = t;
    g.n = init.n;
    g.values.resize(num_points);
    for (int i = 0; i < num_points; ++i) g.values[i] = squeezed_wavefunction(s, init.n, g.x(i));
    return g;
}

cplx matrix_T(int m, int n, double A, double B, double Gamma) {
    const double nu = 0.5 * (A * A + B * B);
    if (nu < 1e-14) return m == n ? std::polar(1.0, Gamma) : cplx(0.0, 0.0);
    const double lp = -0.5 * nu - 0.5 * (lfact(m) + lfact(n)) + 0.5 * (m + n) * std::log(nu);
    const double ph = (m - n) * kHalfPi + Gamma - 0.5 * A * B + m * std::atan2(A, B) +
                      n * std::atan2(A, -B);
    return scaled_series({double(-n), double(-m), std::nullopt, cplx(-1.0 / nu, 0.0), std::min(m, n)},
                         lp, ph);
}

cplx matrix_M(int m, int n, double alpha, double beta, double w, int branch) {
    if ((m + n) % 2 != 0) return {0.0, 0.0};
    const double b2 = beta * beta;
    if (std::abs(w - b2) + std::abs(alpha) < 1e-12) return m == n ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
    const cplx p(0.5 * (w - b2), alpha);
    const cplx r(0.5 * (w + b2), -alpha);
    const double root = std::sqrt(4.0 * alpha * alpha + (b2 - w) * (b2 - w));
    const cplx z(0.5, (branch >= 0 ? 1.0 : -1.0) * beta * std::sqrt(w) / root);
    const int s = m + n;
    const double lp = 0.5 * (s * std::log(2.0) + std::log(w) - lfact(m) - lfact(n) - std::log(kPi)) +
                      std::lgamma(0.5 * (s + 1)) + (s == 0 ? 0.0 : 0.5 * s * std::log(std::abs(p))) -
                      0.5 * (s + 1) * std::log(std::abs(r));
    const double ph = n * kHalfPi + 0.5 * (m - n) * std::arg(p) - 0.5 * (s + 1) * std::arg(r);
    return scaled_series({double(-m), double(-n), 0.5 * (1 - s), z, std::min(m, n)}, lp, ph);
}

cplx matrix_R(int m, int n, cplx xi, double B_t, double D, double w) {
    const double xi2 = std::norm(xi);
    if (std::abs(xi2 - B_t) > 1e-9 * std::max(1.0, B_t))
        throw DomainError("matrix_R: |xi|^2 = " + std::to_string(xi2) + " does not match B = " +
                          std::to_string(B_t));
    if (B_t < 1e-14) return m == n ? std::polar(1.0, D) : cplx(0.0, 0.0);
    const double lp = -0.5 * (lfact(m) + lfact(n) + (m + n) * std::log(2.0 * w)) +
                      0.5 * (m + n) * std::log(xi2) - B_t / (4.0 * w);
    const double ph = (m + n) * kHalfPi + (m - n) * std::arg(xi) + D;
    return scaled_series({double(-n), double(-m), std::nullopt, cplx(-2.0 * w / B_t, 0.0), std::min(m, n)},
                         lp, ph);
}

cplx matrix_N(int m, int n, cplx eta, cplx zeta, double A_t, double w) {
    const double excess = A_t - 2.0 * w;
    if (excess < -1e-12 * std::max(1.0, 2.0 * w))
        throw DomainError("matrix_N: A = " + std::to_string(A_t) + " is below 2 omega");
    if ((m + n) % 2 != 0) return {0.0, 0.0};
    if (excess < 1e-12) return m == n ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
    const int s = m + n;
    const double az = std::abs(zeta);
    if (az == 0.0 && s > 0) return {0.0, 0.0};
    const cplx z(0.5, std::sqrt(w / excess));
    const double lp = 0.5 * ((s + 1) * std::log(2.0) + std::log(w) - lfact(m) - lfact(n) - std::log(kPi)) +
                      std::lgamma(0.5 * (s + 1)) + (s == 0 ? 0.0 : 0.5 * s * std::log(az)) -
                      0.5 * (s + 1) * std::log(std::abs(eta));
    const double ph = n * kHalfPi + 0.5 * (m - n) * std::arg(zeta) - 0.5 * (s + 1) * std::arg(eta);
    return scaled_series({double(-m), double(-n), 0.5 * (1 - s), z, std::min(m, n)}, lp, ph);
}

int default_nmax(int n, double lambda_t) {
    const double sh = std::sinh(lambda_t);
    return std::max(32, 4 * n + 8 * static_cast<int>(std::ceil(sh * sh)));
}

namespace {

struct Ingredients {
    InitialData init;  // with beta0 > 0
    double global_sign;
    SlowInvariants inv;
    SlowVectors vec;
    std::vector<cplx> s_col;  // displacement column S_kn
    std::vector<cplx> n_col;  // squeeze column N_kn
};

std::vector<cplx> displacement_column(const InitialData& in) {
    const double A = in.eps0, B = in.delta0 / in.beta0;
    const double nu = 0.5 * (A * A + B * B);
    const int n = in.n;
    const int hi = n + static_cast<int>(std::ceil(nu + 14.0 * std::sqrt(nu * (2.0 * n + 1.0)) + 40.0));
    if (hi > kInnerCap) throw ConvergenceError("displacement column exceeds the inner truncation cap");
    std::vector<cplx> col(hi + 1);
    parallel_for(col.size(), [&](std::size_t k) { col[k] = matrix_T(int(k), n, A, B, in.kappa0); });
    while (col.size() > std::size_t(n + 1) && std::norm(col.back()) < kSmallSq) col.pop_back();
    return col;
}

std::vector<cplx> squeeze_column(const Ingredients& g, double w) {
    const int n = g.init.n;
    const double ch2 = std::max(1.0, g.inv.A / (2.0 * w));
    const double sh2 = 0.5 * (ch2 - 1.0);
    const int bulk = n + 4 + static_cast<int>(std::ceil(2.0 * (2.0 * n + 1.0) * sh2));
    std::vector<cplx> col;
    int small_run = 0;
    for (int k = 0;; ++k) {
        if (k > kInnerCap) throw ConvergenceError("squeeze column exceeds the inner truncation cap");
        const cplx v = matrix_N(k, n, g.vec.eta, g.vec.zeta, g.inv.A, w);
        col.push_back(v);
        if ((k + n) % 2 != 0) continue;
        small_run = std::norm(v) < kSmallSq ? small_run + 1 : 0;
        if (k > bulk && small_run >= 2) break;
    }
    while (col.size() > std::size_t(n + 1) && std::norm(col.back()) < kSmallSq) col.pop_back();
    return col;
}

void fill(AmplitudeMatrix& out, const Ingredients& g, int nmax, double w, cplx prefactor) {
    const std::size_t rows = nmax + 1;
    out.nmax = nmax;
    out.entries.assign(rows, cplx(0.0, 0.0));
    out.entries_reversed.assign(rows, cplx(0.0, 0.0));
    parallel_for(rows, [&](std::size_t m) {
        std::vector<cplx> terms(g.s_col.size());
        for (std::size_t k = 0; k < g.s_col.size(); ++k) {
            terms[k] = g.s_col[k] == 0.0
                           ? cplx(0.0, 0.0)
                           : matrix_N(int(m), int(k), g.vec.eta, g.vec.zeta, g.inv.A, w) * g.s_col[k];
        }
        out.entries[m] = prefactor * pairwise_sum(terms.data(), terms.size());
        terms.assign(g.n_col.size(), cplx(0.0, 0.0));
        for (std::size_t k = 0; k < g.n_col.size(); ++k) {
            if (g.n_col[k] != 0.0)
                terms[k] = matrix_R(int(m), int(k), g.vec.xi, g.inv.B, g.inv.D, w) * g.n_col[k];
        }
        out.entries_reversed[m] = prefactor * pairwise_sum(terms.data(), terms.size());
    });
    std::vector<double> p(rows);
    double disc = 0.0;
    for (std::size_t m = 0; m < rows; ++m) {
        p[m] = std::norm(out.entries[m]);
        disc = std::max(disc, std::abs(out.entries[m] - out.entries_reversed[m]));
    }
    out.tail_mass = std::max(0.0, 1.0 - pairwise_sum(p.data(), p.size()));
    out.order_discrepancy = disc;
}

}  // namespace

AmplitudeMatrix amplitudes(const InitialData& init, double t, const ModelParams& params,
                           const AmplitudeOptions& opts) {
    validate(params);
    validate(init);
    if (opts.nmax != 0 && opts.nmax < init.n) throw DomainError("amplitudes: nmax must be at least n");
    const double w = params.omega;

    // beta0 < 0 describes the same state as (-beta0, -eps0) up to (-1)^n.
    Ingredients g;
    g.init = init;
    g.global_sign = 1.0;
    if (init.beta0 < 0.0) {
        g.init.beta0 = -init.beta0;
        g.init.eps0 = -init.eps0;
        if (init.n % 2 != 0) g.global_sign = -1.0;
    }
    g.inv = slow_invariants(g.init, t, params);
    g.vec = slow_vectors(g.init, t, params);
    g.s_col = displacement_column(g.init);
    g.n_col = squeeze_column(g, w);

    const cplx prefactor = g.global_sign * std::polar(std::sqrt(g.init.beta0 / std::sqrt(w)),
                                                      (2.0 * init.n + 1.0) * init.gamma0);
    AmplitudeMatrix out;
    out.n = init.n;
    out.inner_dim_squeeze = int(g.n_col.size());
    out.inner_dim_displace = int(g.s_col.size());

    int nmax = opts.nmax > 0 ? opts.nmax : std::max(init.n, default_nmax(init.n, params.lambda * t));
    if (!opts.adaptive) {
        fill(out, g, nmax, w, prefactor);
        return out;
    }
    nmax = std::min(nmax, opts.nmax_limit);
    for (;;) {
        fill(out, g, nmax, w, prefactor);
        if (out.tail_mass < opts.tail_target) return out;
        if (nmax >= opts.nmax_limit) {
            char msg[128];
            std::snprintf(msg, sizeof msg, "amplitude tail mass %.3e above target at nmax = %d",
                          out.tail_mass, nmax);
            throw ConvergenceError(msg);
        }
        nmax = std::min(2 * nmax, opts.nmax_limit);
    }
}

std::vector<double> photon_distribution(const AmplitudeMatrix& amps) {
    std::vector<double> p(amps.entries.size());
    for (std::size_t m = 0; m < p.size(); ++m) p[m] = std::norm(amps.entries[m]);
    return p;
}

PhotonMoments photon_moments(const std::vector<double>& dist) {
    std::vector<double> a(dist.size()), b(dist.size());
    for (std::size_t m = 0; m < dist.size(); ++m) {
        a[m] = m * dist[m];
        b[m] = double(m) * double(m) * dist[m];
    }
    const double mean = pairwise_sum(a.data(), a.size());
    const double second = pairwise_sum(b.data(), b.size());
    return {mean, second - mean * mean};
}

}  // namespace dpa
