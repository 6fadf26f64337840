#include "dpa/characteristic.hpp"

#include <cmath>
#include <numbers>

namespace dpa {

namespace {

template <typename T>
struct MuValues {
    T mu0, mu1, dmu0, dmu1, ddmu0, ddmu1;
};

template <typename T>
MuValues<T> mu_values(T t, const ModelParams& p) {
    using std::cos, std::sin, std::cosh, std::sinh, std::exp;
    const T w = p.omega, l = p.lambda;
    const T c = cos(w * t), s = sin(w * t);
    MuValues<T> m{};
    if (p.variant == Variant::PhiZero) {
        const T ch = cosh(l * t), sh = sinh(l * t);
        // f' = l g + w h, g' = l f + w k, h' = l k - w f, k' = l h - w g
        const T f = sh * c + ch * s;
        const T g = ch * c + sh * s;
        const T h = ch * c - sh * s;
        const T k = sh * c - ch * s;
        const T df = l * g + w * h;
        const T dg = l * f + w * k;
        const T dh = l * k - w * f;
        const T dk = l * h - w * g;
        m.mu0 = f / w;
        m.mu1 = g;
        m.dmu0 = df / w;
        m.dmu1 = dg;
        m.ddmu0 = (l * dg + w * dh) / w;
        m.ddmu1 = l * df + w * dk;
    } else {
        const T ep = exp(l * t), em = exp(-l * t);
        const T r = l / w;
        m.mu0 = em * s / w;
        m.dmu0 = em * (w * c - l * s) / w;
        m.ddmu0 = em * ((l * l - w * w) * s - 2 * l * w * c) / w;
        m.mu1 = ep * c - r * em * s;
        m.dmu1 = ep * (l * c - w * s) - r * em * (w * c - l * s);
        m.ddmu1 = ep * ((l * l - w * w) * c - 2 * l * w * s) - r * em * ((l * l - w * w) * s - 2 * l * w * c);
    }
    return m;
}

}  // namespace

MuPair mu_pair(double t, const ModelParams& p) {
    if (!std::isfinite(t)) throw DomainError("time must be finite");
    const MuValues<double> v = mu_values(t, p);
    return {v.mu0, v.mu1, v.dmu0, v.dmu1, v.ddmu0, v.ddmu1, t};
}

double wronskian_ordered(double t, const ModelParams& p) {
    if (!std::isfinite(t)) throw DomainError("time must be finite");
    // Extended precision: the products grow like e^{2 lambda t} while the result stays O(1).
    const MuValues<long double> m = mu_values<long double>(t, p);
    return static_cast<double>(m.mu0 * m.dmu1 - m.mu1 * m.dmu0);
}

double wronskian(double t, const ModelParams& p) {
    const double w = wronskian_ordered(t, p);
    return p.variant == Variant::PhiZero ? w : -w;
}

InceCoeffs ince_coeffs(double t, const ModelParams& p) {
    const double w = p.omega, l = p.lambda;
    const double c2 = std::cos(2.0 * w * t), s2 = std::sin(2.0 * w * t);
    const double base = w * (w * w - 3.0 * l * l);
    const double amp = l * (w * w + l * l);
    if (p.variant == Variant::PhiZero)
        return {w + l * c2, 2.0 * l * w * s2, base - amp * c2};
    return {w - l * s2, 2.0 * l * w * c2, base + amp * s2};
}

InceResidual ince_residual(double t, const ModelParams& p) {
    const MuPair m = mu_pair(t, p);
    const InceCoeffs e = ince_coeffs(t, p);
    return {e.P * m.ddmu0 + e.Q * m.dmu0 + e.R * m.mu0,
            e.P * m.ddmu1 + e.Q * m.dmu1 + e.R * m.mu1};
}

double characteristic_phase(double t, const ModelParams& p) {
    if (p.variant == Variant::PhiZero) return p.omega * t + std::atan(std::tanh(p.lambda * t));
    return p.omega * t;
}

int caustic_count(double t, const ModelParams& p) {
    return static_cast<int>(std::floor(characteristic_phase(t, p) / std::numbers::pi));
}

}  // namespace dpa
