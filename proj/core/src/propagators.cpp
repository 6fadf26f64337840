#include "dpa/propagators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dpa/characteristic.hpp"
#include "dpa/parallel.hpp"

namespace dpa {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI(0.0, 1.0);

// e^{-i pi/4} e^{-i pi k/2}: continuous branch of 1/sqrt(i) after k sign changes.
cplx maslov_phase(int k) { return std::polar(1.0, -0.25 * kPi - 0.5 * kPi * k); }

// F(k) = h sum_j f_j e^{-i k y_j}
cplx transform_at(const WavefunctionGrid& f, double k) {
    const double h = f.dx();
    cplx s(0.0, 0.0);
    for (int j = 0; j < f.num_points; ++j) s += f.values[j] * std::polar(1.0, -k * f.x(j));
    return s * h;
}

double effective_bandwidth(const WavefunctionGrid& f) {
    const double nyq = kPi / f.dx();
    const int M = 1025;
    std::vector<double> mag(M);
    parallel_for(M, [&](std::size_t i) { mag[i] = std::abs(transform_at(f, -nyq + 2.0 * nyq * i / (M - 1))); });
    const double peak = *std::max_element(mag.begin(), mag.end());
    double kb = 0.0;
    for (int i = 0; i < M; ++i)
        if (mag[i] > 1e-13 * peak) kb = std::max(kb, std::abs(-nyq + 2.0 * nyq * i / (M - 1)));
    return std::min(nyq, kb + 4.0 * nyq / (M - 1));
}

double effective_extent(const WavefunctionGrid& f) {
    double peak = 0.0;
    for (const cplx& v : f.values) peak = std::max(peak, std::abs(v));
    double y = 0.0;
    for (int j = 0; j < f.num_points; ++j)
        if (std::abs(f.values[j]) > 1e-15 * peak) y = std::max(y, std::abs(f.x(j)));
    return y;
}

std::vector<cplx> apply_direct(const QuadraticKernel& K, const WavefunctionGrid& f, const std::vector<double>& xs) {
    std::vector<cplx> out(xs.size());
    const double h = f.dx();
    std::vector<cplx> g(f.num_points);
    for (int j = 0; j < f.num_points; ++j) {
        const double y = f.x(j);
        g[j] = f.values[j] * std::polar(1.0, K.c * y * y);
    }
    parallel_for(xs.size(), [&](std::size_t i) {
        const double x = xs[i];
        cplx s(0.0, 0.0);
        for (int j = 0; j < f.num_points; ++j) s += g[j] * std::polar(1.0, K.b * x * f.x(j));
        out[i] = K.prefactor * std::polar(1.0, K.a * x * x) * s * h;
    });
    return out;
}

// psi(x) = P e^{i(a - b^2/4c) x^2} (1/2pi) int F(k) sqrt(pi i / c) e^{-i k^2/(4c)} e^{i k s} dk,
// s = -b x / (2c).
std::vector<cplx> apply_fourier(const QuadraticKernel& K, const WavefunctionGrid& f, const std::vector<double>& xs,
                                double k_band, double y_extent, double x_extent) {
    const double c = K.c;
    const double s_max = std::abs(K.b) * x_extent / (2.0 * std::abs(c));
    const double omega_k = y_extent + s_max + k_band / (2.0 * std::abs(c));
    const double dk = 0.8 * 2.0 * kPi / std::max(omega_k, 1e-12);
    const int half = std::max(8, int(std::ceil(k_band / dk)));
    const int M = 2 * half + 1;
    std::vector<double> ks(M);
    std::vector<cplx> G(M);
    const cplx root = std::sqrt(kPi * kI / c);
    parallel_for(M, [&](std::size_t m) {
        const double k = (int(m) - half) * dk;
        ks[m] = k;
        G[m] = transform_at(f, k) * root * std::polar(1.0, -k * k / (4.0 * c));
    });
    std::vector<cplx> out(xs.size());
    parallel_for(xs.size(), [&](std::size_t i) {
        const double x = xs[i];
        const double s = -K.b * x / (2.0 * c);
        cplx acc(0.0, 0.0);
        for (int m = 0; m < M; ++m) acc += G[m] * std::polar(1.0, ks[m] * s);
        out[i] = K.prefactor * std::polar(1.0, (K.a - K.b * K.b / (4.0 * c)) * x * x) * acc * (dk / (2.0 * kPi));
    });
    return out;
}

// f(x) = (1/2pi) int F(k) e^{ikx} dk for the band-limited interpolant.
std::vector<cplx> interpolate(const WavefunctionGrid& f, const std::vector<double>& xs, double k_band,
                              double y_extent, double x_extent) {
    const double dk = 0.8 * 2.0 * kPi / (y_extent + x_extent + 1e-12);
    const int half = std::max(8, int(std::ceil(k_band / dk)));
    const int M = 2 * half + 1;
    std::vector<cplx> F(M);
    parallel_for(M, [&](std::size_t m) { F[m] = transform_at(f, (int(m) - half) * dk); });
    std::vector<cplx> out(xs.size());
    parallel_for(xs.size(), [&](std::size_t i) {
        cplx acc(0.0, 0.0);
        for (int m = 0; m < M; ++m) acc += F[m] * std::polar(1.0, (int(m) - half) * dk * xs[i]);
        out[i] = acc * (dk / (2.0 * kPi));
    });
    return out;
}

double max_abs(const std::vector<double>& xs) {
    double m = 0.0;
    for (double x : xs) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace

cplx greens_oscillator(double x, double y, double t, double w) {
    const double s = std::sin(w * t), c = std::cos(w * t);
    if (std::abs(s) < 1e-12) throw SingularTimeError("oscillator kernel at a caustic, t = " + std::to_string(t));
    const int k = int(std::floor(w * t / kPi));
    const cplx pre = maslov_phase(k) * std::sqrt(w / (2.0 * kPi * std::abs(s)));
    return pre * std::polar(1.0, w * ((x * x + y * y) * c - 2.0 * x * y) / (2.0 * s));
}

cplx greens_lambda(double x, double y, double t, double w, double l) {
    const double sh = std::sinh(l * t), ch = std::cosh(l * t);
    if (std::abs(sh) < 1e-300) throw SingularTimeError("squeeze kernel is singular at sinh(lambda t) = 0");
    const cplx pre = maslov_phase(sh < 0.0 ? -1 : 0) * std::sqrt(w / (2.0 * kPi * std::abs(sh)));
    return pre * std::polar(1.0, w * ((x * x + y * y) * ch - 2.0 * x * y) / (2.0 * sh));
}

QuadraticKernel full_kernel(double t, const ModelParams& p) {
    const FundamentalTriple f = fundamental(t, p).closed;
    const MuPair m = mu_pair(t, p);
    const cplx pre = maslov_phase(caustic_count(t, p)) / std::sqrt(2.0 * kPi * std::abs(m.mu0));
    return {pre, f.alpha, f.beta, f.gamma};
}

QuadraticKernel oscillator_kernel(double t, double w) {
    const double s = std::sin(w * t), c = std::cos(w * t);
    if (std::abs(s) < 1e-12) throw SingularTimeError("oscillator kernel at a caustic, t = " + std::to_string(t));
    const cplx pre = maslov_phase(int(std::floor(w * t / kPi))) * std::sqrt(w / (2.0 * kPi * std::abs(s)));
    return {pre, 0.5 * w * c / s, -w / s, 0.5 * w * c / s};
}

cplx greens_full(double x, double y, double t, const ModelParams& p) {
    const QuadraticKernel k = full_kernel(t, p);
    return k.prefactor * std::polar(1.0, k.a * x * x + k.b * x * y + k.c * y * y);
}

std::vector<cplx> apply_kernel(const QuadraticKernel& K, const WavefunctionGrid& f, const std::vector<double>& xs,
                               std::string* method) {
    const double kb = effective_bandwidth(f);
    const double ye = effective_extent(f);
    const double xe = max_abs(xs);
    const double band = kb + 2.0 * std::abs(K.c) * ye + std::abs(K.b) * xe;
    if (K.c == 0.0 || band < 0.8 * 2.0 * kPi / f.dx()) {
        if (method) *method = "direct";
        return apply_direct(K, f, xs);
    }
    if (method) *method = "fourier";
    return apply_fourier(K, f, xs, kb, ye, xe);
}

PropagationResult propagate_full(const WavefunctionGrid& in, double t, const ModelParams& p,
                                 const PropagateOptions& opts) {
    validate(p);
    if (in.num_points < 3 || in.values.size() != std::size_t(in.num_points) || !(in.x_max > in.x_min))
        throw DomainError("propagate: malformed input grid");
    double norm = 0.0;
    for (const cplx& v : in.values) norm += std::norm(v);
    norm *= in.dx();
    if (std::abs(norm - 1.0) > 1e-6)
        throw DomainError("propagate: input wavefunction is not normalized (norm^2 = " + std::to_string(norm) + ")");

    WavefunctionGrid out;
    const bool custom_range = opts.x_max > opts.x_min;
    out.x_min = custom_range ? opts.x_min : in.x_min;
    out.x_max = custom_range ? opts.x_max : in.x_max;
    out.num_points = opts.num_points > 0 ? opts.num_points : in.num_points;
    out.t = in.t + t;
    out.n = in.n;
    std::vector<double> xs(out.num_points);
    for (int i = 0; i < out.num_points; ++i) xs[i] = out.x(i);

    PropagationResult r;
    if (t == 0.0) {
        r.method = "identity";
        out.values = interpolate(in, xs, effective_bandwidth(in), effective_extent(in), max_abs(xs));
        r.grid = out;
        return r;
    }
    out.values = apply_kernel(full_kernel(t, p), in, xs, &r.method);
    r.grid = out;

    if (p.variant == Variant::PhiHalfPi) {
        const double stretch = std::exp(p.lambda * t);
        WavefunctionGrid chi = in;
        chi.x_min = in.x_min * stretch;
        chi.x_max = in.x_max * stretch;
        const double amp = 1.0 / std::sqrt(stretch);
        for (cplx& v : chi.values) v *= amp;
        WavefunctionGrid tr = out;
        tr.values = apply_kernel(oscillator_kernel(t, p.omega), chi, xs);
        double d = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) d = std::max(d, std::abs(tr.values[i] - out.values[i]));
        r.transport = tr;
        r.transport_discrepancy = d;
    }
    return r;
}

WavefunctionGrid propagate(const WavefunctionGrid& in, double t, const ModelParams& p, const PropagateOptions& opts) {
    return propagate_full(in, t, p, opts).grid;
}

}  // namespace dpa
