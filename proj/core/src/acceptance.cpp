#include "dpa/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include "dpa/canonical.hpp"
#include "dpa/characteristic.hpp"
#include "dpa/fock.hpp"
#include "dpa/oracle.hpp"
#include "dpa/phase_space.hpp"
#include "dpa/propagators.hpp"
#include "dpa/statistics.hpp"

namespace dpa {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

const std::vector<std::pair<double, double>> kParamSets = {{1.0, 0.0}, {1.0, 0.1}, {1.0, 0.25}, {2.0, 0.5}};
const Variant kVariants[] = {Variant::PhiZero, Variant::PhiHalfPi};
const InitialData kGeneric{0.3, 1.2, 0.1, 0.5, -0.4, 0.2, 0};
const InitialData kNegativeBeta{-0.2, -0.8, 0.3, -0.3, 0.6, -0.1, 0};

ModelParams model(double w, double l, Variant v) { return make_model(w, l, v); }

InitialData with_n(InitialData in, int n) {
    in.n = n;
    return in;
}

// Running maximum that turns NaN into +inf.
struct Worst {
    double v = 0.0;
    void operator()(double x) {
        if (std::isnan(x))
            v = std::numeric_limits<double>::infinity();
        else
            v = std::max(v, x);
    }
};

std::string kv(const std::string& key, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s=%.3e ", key.c_str(), value);
    return buf;
}

CriterionResult make(int id, const char* name) {
    CriterionResult r;
    r.id = id;
    r.name = name;
    return r;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

CriterionResult ince(bool) {
    CriterionResult r = make(1, "Ince residuals of the characteristic functions");
    r.tolerance = 1e-9;
    Worst w;
    for (auto [om, la] : kParamSets)
        for (Variant v : kVariants) {
            const ModelParams p = model(om, la, v);
            for (int i = 0; i < 1000; ++i) {
                const InceResidual e = ince_residual(4.0 * kPi * i / 999.0, p);
                w(std::max(std::abs(e.r0), std::abs(e.r1)));
            }
        }
    r.measured = w.v;
    r.pass = w.v < r.tolerance;
    return r;
}

CriterionResult wronskians(bool) {
    CriterionResult r = make(2, "Wronskians against the closed forms");
    r.tolerance = 1e-12;
    Worst w;
    for (auto [om, la] : kParamSets)
        for (Variant v : kVariants) {
            const ModelParams p = model(om, la, v);
            for (int i = 0; i < 1000; ++i) {
                const double t = 4.0 * kPi * i / 999.0;
                const double ref = v == Variant::PhiZero ? -1.0 - la / om * std::cos(2.0 * om * t)
                                                         : 1.0 - la / om * std::sin(2.0 * om * t);
                w(std::abs(wronskian(t, p) - ref) / std::abs(ref));
            }
        }
    r.measured = w.v;
    r.pass = w.v < r.tolerance;
    return r;
}

CriterionResult rk4(bool) {
    CriterionResult r = make(3, "RK4 integration of the characteristic equation");
    r.tolerance = 1e-6;
    Worst w;
    const int segments = 10, steps = 10000;
    for (auto [om, la] : kParamSets)
        for (Variant v : kVariants) {
            const ModelParams p = model(om, la, v);
            oracle::LinearOde2 ode{[p](double t) { return ince_coeffs(t, p).P; },
                                   [p](double t) { return ince_coeffs(t, p).Q; },
                                   [p](double t) { return ince_coeffs(t, p).R; }};
            const MuPair m0 = mu_pair(0.0, p);
            oracle::OdeState s0{m0.mu0, m0.dmu0}, s1{m0.mu1, m0.dmu1};
            for (int k = 0; k < segments; ++k) {
                const double ta = 2.0 * kPi * k / segments, tb = 2.0 * kPi * (k + 1) / segments;
                s0 = oracle::rk4_integrate(ode, s0.y, s0.dy, ta, tb, steps);
                s1 = oracle::rk4_integrate(ode, s1.y, s1.dy, ta, tb, steps);
                const MuPair m = mu_pair(tb, p);
                w(std::max({std::abs(s0.y - m.mu0), std::abs(s0.dy - m.dmu0), std::abs(s1.y - m.mu1),
                            std::abs(s1.dy - m.dmu1)}));
            }
        }
    r.measured = w.v;
    r.pass = w.v < r.tolerance;
    return r;
}

// First time in (t0, t1) where the principal-branch phase jumps.
double principal_jump(const InitialData& in, const ModelParams& p, double t0, double t1) {
    auto gap = [&](double t) {
        return evolve_closed_form(in, t, p).gamma - evolve_closed_form(in, t, p, GammaBranch::Principal).gamma;
    };
    const int N = 2000;
    double prev = gap(t0);
    for (int i = 1; i <= N; ++i) {
        const double t = t0 + (t1 - t0) * i / N;
        const double g = gap(t);
        if (std::abs(g - prev) > 0.1) {
            double lo = t0 + (t1 - t0) * (i - 1) / N, hi = t;
            const double glo = prev;
            for (int it = 0; it < 80; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (std::abs(gap(mid) - glo) > 0.1)
                    hi = mid;
                else
                    lo = mid;
            }
            return 0.5 * (lo + hi);
        }
        prev = g;
    }
    return std::numeric_limits<double>::quiet_NaN();
}

CriterionResult tdse(bool quick) {
    CriterionResult r = make(4, "TDSE residual of the squeezed number states");
    r.tolerance = 1e-5;
    Worst w;
    const int points = quick ? 1025 : 4097;
    for (Variant v : kVariants) {
        const ModelParams p = model(1.0, 0.25, v);
        for (int n = 0; n <= 2; ++n)
            for (double t : {0.3, 0.9, 1.7}) {
                const InitialData in = with_n(kGeneric, n);
                w(oracle::tdse_residual(in, t, p, oracle::default_grid(in, t, p, points)));
            }
    }
    // Negative control: the principal arctan branch evaluated across one of its jumps.
    double control_min = std::numeric_limits<double>::infinity();
    for (Variant v : kVariants) {
        const ModelParams p = model(1.0, 0.25, v);
        const InitialData in = with_n(kGeneric, 1);
        const double tj = principal_jump(in, p, 0.05, 6.0);
        if (std::isnan(tj)) continue;
        const double res =
            oracle::tdse_residual(in, tj, p, oracle::default_grid(in, tj, p, 1025), GammaBranch::Principal);
        control_min = std::min(control_min, res);
    }
    r.measured = w.v;
    r.detail = kv("principal_branch_residual_min", control_min);
    r.pass = w.v < r.tolerance && control_min > 1e-2 && std::isfinite(control_min);
    return r;
}

CriterionResult composition(bool quick) {
    CriterionResult r = make(5, "Closed-form Ermakov solution against the generic composition");
    r.tolerance = 1e-9;
    Worst w, wc, wd;
    const int count = quick ? 50 : 200;
    for (auto [om, la] : {std::pair{1.0, 0.25}, std::pair{2.0, 0.5}})
        for (Variant v : kVariants) {
            const ModelParams p = model(om, la, v);
            for (const InitialData& in : {kGeneric, kNegativeBeta}) {
                const SlowInvariants inv0 = slow_invariants(in, 0.0, p);
                for (int i = 0; i < count; ++i) {
                    double t = (i + 0.5) * 4.0 * kPi / count;
                    for (int tries = 0; tries < 100; ++tries) {
                        const MuPair m = mu_pair(t, p);
                        if (std::abs(m.mu0) > 1e-2 * (1.0 + std::abs(m.mu1))) break;
                        t += 1e-2;
                    }
                    const ErmakovState a = evolve_closed_form(in, t, p);
                    const ErmakovState b = evolve_composed(in, t, p);
                    w(std::max({rel(b.alpha, a.alpha), rel(b.beta, a.beta), rel(b.gamma, a.gamma),
                                rel(b.delta, a.delta), rel(b.eps, a.eps), rel(b.kappa, a.kappa)}));
                    for (const ErmakovState& s : {a, b}) {
                        wc(rel(invariant_C(s), inv0.C));
                        wd(rel(invariant_D(s), inv0.D));
                    }
                }
            }
        }
    r.measured = w.v;
    r.detail = kv("C_drift", wc.v) + kv("D_drift", wd.v);
    r.pass = w.v < r.tolerance && wc.v < 1e-10 && wd.v < 1e-10;
    return r;
}

CriterionResult vacuum(bool) {
    CriterionResult r = make(6, "Vacuum photon-number anchors");
    r.tolerance = 1e-12;
    Worst closed, fock;
    double mean_half = 0.0, var_half = 0.0;
    for (auto [om, la] : {std::pair{1.0, 0.25}, std::pair{2.0, 0.5}})
        for (Variant v : kVariants) {
            const ModelParams p = model(om, la, v);
            const InitialData in = vacuum_init(om);
            for (double lt : {0.25, 0.5, 1.0}) {
                const double t = lt / la;
                const double sh = std::sinh(lt), sh2 = std::sinh(2.0 * lt);
                const StatisticsReport s = statistics_report(in, t, p);
                closed(rel(s.mean_n, sh * sh));
                closed(rel(s.var_n, 0.5 * sh2 * sh2));
                const PhotonMoments m = photon_moments(photon_distribution(amplitudes(in, t, p)));
                fock(std::abs(m.mean - sh * sh));
                fock(std::abs(m.variance - 0.5 * sh2 * sh2));
                if (lt == 0.5 && om == 1.0 && v == Variant::PhiZero) {
                    mean_half = s.mean_n;
                    var_half = s.var_n;
                }
            }
        }
    const double anchor = std::max(std::abs(mean_half - 0.2715403), std::abs(var_half - 0.6905489));
    r.measured = closed.v;
    r.detail = kv("fock_moments", fock.v) + kv("anchor_7_digits", anchor);
    r.pass = closed.v < r.tolerance && fock.v < 1e-6 && anchor < 5e-8;
    return r;
}

CriterionResult uncertainty(bool quick) {
    CriterionResult r = make(7, "Uncertainty determinant");
    r.tolerance = 1e-10;
    Worst w;
    const int count = quick ? 40 : 200;
    for (Variant v : kVariants) {
        const ModelParams p = model(1.0, 0.25, v);
        for (const InitialData& in : {kGeneric, kNegativeBeta, vacuum_init(1.0)})
            for (int i = 0; i < count; ++i) {
                const double t = 2.0 * kPi * i / (count - 1);
                const ErmakovState s = evolve_closed_form(in, t, p);
                for (int n = 0; n <= 5; ++n) {
                    const QuadratureVariances q = quadrature_variances(s, n);
                    const double target = (n + 0.5) * (n + 0.5);
                    w(std::abs(q.sigma_p * q.sigma_q - q.sigma_pq * q.sigma_pq - target) / target);
                }
            }
    }
    r.measured = w.v;
    r.pass = w.v < r.tolerance;
    return r;
}

// e^{i w (m + 1/2) t} <Psi_m, psi_n(t)> by Simpson quadrature, m = 0..nmax.
std::vector<cplx> overlap_amplitudes(const InitialData& in, double t, const ModelParams& p, int nmax) {
    const double w = p.omega;
    const oracle::GridSpec base = oracle::default_grid(in, t, p, 4097);
    const double L = std::max(base.upper, (std::sqrt(2.0 * nmax + 1.0) + 10.0) / std::sqrt(w));
    const ErmakovState s = evolve_closed_form(in, t, p);
    const double kmax = std::sqrt((2.0 * nmax + 1.0) * w) + 2.0 * std::abs(s.alpha) * L + std::abs(s.delta) +
                        std::abs(s.beta) * (std::sqrt(2.0 * in.n + 1.0) + 10.0);
    const double h = std::min(0.02, kPi / (6.0 * kmax));
    int points = int(std::ceil(2.0 * L / h)) + 1;
    if (points % 2 == 0) ++points;
    const oracle::GridSpec g{-L, L, points};
    std::vector<cplx> psi = oracle::sample(g, std::function<cplx(double)>([&](double x) {
        return oracle::ermakov_wavefunction(s, in.n, x);
    }));
    std::vector<std::vector<cplx>> basis(nmax + 1, std::vector<cplx>(points));
    std::vector<double> row(nmax + 1);
    for (int i = 0; i < points; ++i) {
        hermite_functions(nmax, g.x(i) * std::sqrt(w), row.data());
        for (int m = 0; m <= nmax; ++m) basis[m][i] = std::pow(w, 0.25) * row[m];
    }
    std::vector<cplx> c(nmax + 1);
    for (int m = 0; m <= nmax; ++m)
        c[m] = std::polar(1.0, w * (m + 0.5) * t) * oracle::overlap(basis[m], psi, g).value;
    return c;
}

CriterionResult amplitude_checks(bool quick) {
    CriterionResult r = make(8, "Transition amplitudes");
    r.tolerance = 1e-6;
    Worst tail, order, quad, parity;
    struct Case {
        InitialData init;
        double t;
        bool pure_squeeze;
    };
    std::vector<Case> cases;
    for (int n = 0; n <= 2; ++n) cases.push_back({with_n(kGeneric, n), 0.8, false});
    for (double lt : {0.25, 0.5, 1.0}) cases.push_back({vacuum_init(1.0), lt / 0.25, true});
    cases.push_back({InitialData{0.3, 1.2, 0.1, 0.0, 0.0, 0.2, 1}, 1.3, true});
    if (!quick) {
        cases.push_back({with_n(kNegativeBeta, 1), 2.1, false});
        cases.push_back({with_n(kGeneric, 3), 3.0, false});
    }
    for (Variant v : kVariants) {
        const ModelParams p = model(1.0, 0.25, v);
        for (const Case& c : cases) {
            const AmplitudeMatrix a = amplitudes(c.init, c.t, p);
            tail(a.tail_mass);
            order(a.order_discrepancy);
            const std::vector<cplx> q = overlap_amplitudes(c.init, c.t, p, a.nmax);
            for (int m = 0; m <= a.nmax; ++m) {
                quad(std::abs(q[m] - a.entries[m]));
                if (c.pure_squeeze && (m + c.init.n) % 2 != 0) {
                    parity(std::abs(a.entries[m]));
                    parity(std::abs(a.entries_reversed[m]));
                }
            }
        }
    }
    r.measured = quad.v;
    r.detail = kv("tail_mass", tail.v) + kv("order_discrepancy", order.v) + kv("parity", parity.v);
    r.pass = quad.v < r.tolerance && tail.v < 1e-10 && order.v < 1e-8 && parity.v < 1e-12;
    return r;
}

CriterionResult g2_check(bool quick) {
    CriterionResult r = make(9, "g2 of squeezed vacuum");
    r.tolerance = 1e-10;
    Worst w;
    const int count = quick ? 50 : 400;
    for (auto [om, la] : {std::pair{1.0, 0.25}, std::pair{2.0, 0.5}})
        for (Variant v : kVariants) {
            const ModelParams p = model(om, la, v);
            for (int i = 1; i <= count; ++i) {
                const double t = 4.0 * kPi * i / count;
                const StatisticsReport s = statistics_report(vacuum_init(om), t, p);
                const double ref = 3.0 + 1.0 / s.mean_n;
                w(std::abs(s.g2 - ref) / ref);
            }
        }
    r.measured = w.v;
    r.pass = w.v < r.tolerance;
    return r;
}

CriterionResult wigner(bool quick) {
    CriterionResult r = make(10, "Wigner function of the dynamical vacuum");
    r.tolerance = 1e-6;
    Worst point, integral, xmarg, pmarg;
    const int gp = quick ? 257 : 513;
    for (double om : {1.0, 1.7})
        for (Variant v : kVariants) {
            const ModelParams p = model(om, 0.25, v);
            for (const InitialData& in : {vacuum_init(om), kGeneric})
                for (double t : {0.0, 0.7, 2.3}) {
                    const ErmakovState s = evolve_closed_form(in, t, p);
                    auto psi = [&](double x) { return oracle::ermakov_wavefunction(s, 0, x); };
                    const QuadratureMeans mu = mean_qp(in, t, p);
                    const PositionMomentumVariances var = qp_variances_closed(in, t, p, 0);
                    const double sq = std::sqrt(var.sigma_q), sp = std::sqrt(var.sigma_p);
                    for (double fx : {-1.2, 0.0, 0.9})
                        for (double fp : {-1.0, 0.3, 1.1}) {
                            const double x = mu.mean_q + fx * sq, pp = mu.mean_p + fp * sp;
                            const double ymax = std::abs(x - mu.mean_q) + 14.0 * sq;
                            point(std::abs(wigner_vacuum(in, t, p, x, pp) - oracle::wigner_transform(psi, x, pp, ymax, 4097)));
                        }
                    const WignerGrid g = wigner_grid_auto(in, t, p, gp);
                    const double hx = (g.x_max - g.x_min) / (g.nx - 1), hp = (g.p_max - g.p_min) / (g.np - 1);
                    integral(std::abs(oracle::simpson_2d(g.values, g.nx, g.np, hx, hp) - 1.0));
                    const oracle::GridSpec og = oracle::default_grid(in, t, p, 4097);
                    const std::vector<cplx> samples = oracle::sample(og, std::function<cplx(double)>(psi));
                    for (int i = 0; i < g.nx; i += 8) {
                        std::vector<double> col(g.np);
                        for (int j = 0; j < g.np; ++j) col[j] = g.at(i, j);
                        xmarg(std::abs(oracle::simpson(col, hp) - std::norm(psi(g.x(i)))));
                    }
                    for (int j = 0; j < g.np; j += 8) {
                        std::vector<double> row(g.nx);
                        for (int i = 0; i < g.nx; ++i) row[i] = g.at(i, j);
                        pmarg(std::abs(oracle::simpson(row, hx) - std::norm(oracle::momentum_amplitude(samples, og, g.p(j)))));
                    }
                }
        }
    r.measured = point.v;
    r.detail = kv("grid_integral", integral.v) + kv("x_marginal", xmarg.v) + kv("p_marginal", pmarg.v);
    r.pass = point.v < r.tolerance && integral.v < 1e-4 && xmarg.v < 1e-5 && pmarg.v < 1e-5;
    return r;
}

CriterionResult figure1(bool) {
    CriterionResult r = make(11, "Phase-space contours and minimum-uncertainty times");
    r.tolerance = 1e-3;
    const ModelParams p = model(1.0, 0.25, Variant::PhiZero);
    const InitialData in = vacuum_init(1.0);
    Worst area;
    double a0 = 0.0;
    for (int k = 0; k < 8; ++k) {
        const double t = kPi * k / 7.0;
        const double a = polygon_area(contour_q(2.0, t, in, p, 256).points);
        if (k == 0) a0 = a;
        area(std::abs(a / a0 - 1.0));
    }
    const double N = 256.0;
    const double ellipse = std::abs(a0 / (0.5 * N * 2.0 * std::sin(2.0 * kPi / N)) - 1.0);
    const MinimumUncertaintyTimes mt = minimum_uncertainty_times(in, p, 0.0, 3.0, 10000);
    Worst root;
    for (double expect : {0.0, kPi / 4.0, 3.0 * kPi / 4.0}) {
        double best = std::numeric_limits<double>::infinity();
        for (double t : mt.roots) best = std::min(best, std::abs(t - expect));
        root(best);
    }
    Worst product;
    for (double t : mt.roots) {
        const QuadratureVariances q = quadrature_variances(evolve_closed_form(in, t, p), 0);
        product(std::abs(q.sigma_p * q.sigma_q - 0.25));
    }
    r.measured = root.v;
    r.detail = kv("roots_found", double(mt.roots.size())) + kv("area_drift", area.v) +
               kv("area_vs_2pi", ellipse) + kv("sigma_product", product.v);
    r.pass = root.v < r.tolerance && mt.roots.size() == 3 && area.v < 1e-6 && ellipse < 1e-12 &&
             product.v < 1e-9;
    return r;
}

CriterionResult greens(bool quick) {
    CriterionResult r = make(12, "Green's function factorizations and propagation");
    r.tolerance = 1e-6;
    std::mt19937_64 rng(20240531);
    std::uniform_real_distribution<double> ux(-3.0, 3.0), ut(0.1, 6.0);
    Worst scaling, compose, lambda0;
    const ModelParams ph = model(1.0, 0.25, Variant::PhiHalfPi);
    const ModelParams pz = model(1.0, 0.25, Variant::PhiZero);
    const double w = 1.0, l = 0.25;
    for (int i = 0; i < 50;) {
        const double x = ux(rng), y = ux(rng), t = ut(rng);
        if (std::abs(std::sin(w * t)) < 0.05) continue;
        if (std::abs(mu_pair(t, pz).mu0) < 0.05 || std::abs(mu_pair(t, ph).mu0) < 0.05) continue;
        ++i;
        const cplx g = greens_full(x, y, t, ph);
        scaling(std::abs(g - std::exp(0.5 * l * t) * greens_oscillator(x, y * std::exp(l * t), t, w)) / std::abs(g));
        const double cot = std::cos(w * t) / std::sin(w * t), coth = 1.0 / std::tanh(l * t);
        const cplx A = 0.5 * w * (cot + coth);
        const cplx B = -w * x / std::sin(w * t) - w * y / std::sinh(l * t);
        const cplx C = 0.5 * w * (x * x * cot + y * y * coth);
        const cplx comp = greens_oscillator(0.0, 0.0, t, w) * greens_lambda(0.0, 0.0, t, w, l) *
                          oracle::complex_gaussian_integral(A, B, C);
        const cplx gz = greens_full(x, y, t, pz);
        compose(std::abs(gz - comp) / std::abs(gz));
        const ModelParams free = model(1.0, 0.0, Variant::PhiZero);
        lambda0(std::abs(greens_full(x, y, t, free) - greens_oscillator(x, y, t, w)));
    }
    Worst prop, transport, norm;
    const std::vector<double> times = quick ? std::vector<double>{0.9} : std::vector<double>{0.3, 0.9, 1.7};
    for (Variant v : kVariants) {
        const ModelParams p = model(1.0, 0.25, v);
        for (const InitialData& in : {vacuum_init(1.0), kGeneric, with_n(kGeneric, 1)})
            for (double t : times) {
                const oracle::GridSpec g = oracle::default_grid(in, t, p, 2049);
                const WavefunctionGrid psi0 = sample_squeezed(in, 0.0, p, g.lower, g.upper, g.num_points);
                const PropagationResult res = propagate_full(psi0, t, p);
                const WavefunctionGrid ref = sample_squeezed(in, t, p, g.lower, g.upper, g.num_points);
                double nrm = 0.0;
                for (int k = 0; k < g.num_points; ++k) {
                    prop(std::abs(res.grid.values[k] - ref.values[k]));
                    nrm += std::norm(res.grid.values[k]);
                }
                norm(std::abs(nrm * g.h() - 1.0));
                if (res.transport) transport(res.transport_discrepancy);
            }
    }
    r.measured = prop.v;
    r.detail = kv("halfpi_scaling", scaling.v) + kv("zero_composition", compose.v) + kv("lambda0", lambda0.v) +
               kv("transport", transport.v) + kv("norm", norm.v);
    r.pass = prop.v < r.tolerance && scaling.v < 1e-12 && compose.v < 1e-10 && lambda0.v < 1e-12 &&
             transport.v < 1e-6 && norm.v < 1e-6;
    return r;
}

CriterionResult canonical_checks(bool quick) {
    CriterionResult r = make(13, "Hamiltonian expansion and squeeze parameters");
    r.tolerance = 1e-10;
    Worst mean, var, hyper, ident, shift;
    const int count = quick ? 20 : 100;
    for (Variant v : kVariants) {
        const ModelParams p = model(1.0, 0.25, v);
        for (const InitialData& in : {kGeneric, kNegativeBeta, vacuum_init(1.0)}) {
            const SlowInvariants inv0 = slow_invariants(in, 0.0, p);
            for (int i = 0; i < count; ++i) {
                const double t = 2.0 * kPi * i / (count - 1);
                const ErmakovState s = evolve_closed_form(in, t, p);
                const ExpansionCoeffs c = hamiltonian_expansion(s, p.omega);
                const SlowInvariants inv = slow_invariants(in, t, p);
                for (int n = 0; n <= 5; ++n) {
                    const double ref = p.omega * (mean_photon_number(s, n, p.omega) + 0.5);
                    mean(std::abs(expansion_mean(c, n) - ref) / ref);
                    const double vn = photon_number_variance(inv, n, p.omega);
                    var(std::abs(expansion_variance(c, n) / (p.omega * p.omega) - vn) / std::max(1.0, vn));
                }
                const SqueezeParams sp = squeeze_parameters(s, p.omega);
                hyper(std::abs(sp.cosh_tau * sp.cosh_tau - sp.sinh_tau * sp.sinh_tau - 1.0));
                const SqueezeIdentityResiduals id = squeeze_identities(s, p.omega, sp);
                ident(std::max(id.cosh_equation, id.sinh_equation) / std::max(1.0, 2.0 * sp.cosh_tau));
                shift(std::abs(2.0 * std::norm(sp.xi_d) - inv0.C) / std::max(1.0, inv0.C));
            }
        }
    }
    r.measured = mean.v;
    r.detail = kv("variance", var.v) + kv("cosh2_minus_sinh2", hyper.v) + kv("identities", ident.v) +
               kv("shift_modulus", shift.v);
    r.pass = mean.v < r.tolerance && var.v < 1e-9 && hyper.v < 1e-12 && ident.v < 1e-10 && shift.v < 1e-10;
    return r;
}

using Check = CriterionResult (*)(bool);
const Check kChecks[] = {ince, wronskians, rk4, tdse, composition, vacuum, uncertainty,
                         amplitude_checks, g2_check, wigner, figure1, greens, canonical_checks};

}  // namespace

CriterionResult run_criterion(int id, bool quick) {
    if (id < 1 || id > 13) throw DomainError("acceptance criterion id out of range");
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
        r = kChecks[id - 1](quick);
    } catch (const std::exception& e) {
        r.id = id;
        r.name = "criterion " + std::to_string(id);
        r.pass = false;
        r.measured = std::numeric_limits<double>::infinity();
        r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<CriterionResult> run_acceptance(bool quick) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= 13; ++id) out.push_back(run_criterion(id, quick));
    return out;
}

}  // namespace dpa
