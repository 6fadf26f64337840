#include "dpa/model.hpp"

#include <cmath>

namespace dpa {

ModelParams make_model(double omega, double lambda, Variant variant) {
    ModelParams p{omega, lambda, variant};
    validate(p);
    return p;
}

void validate(const ModelParams& p) {
    if (!std::isfinite(p.omega) || p.omega <= 0.0)
        throw DomainError("omega must be finite and positive");
    if (!std::isfinite(p.lambda) || p.lambda < 0.0)
        throw DomainError("lambda must be finite and non-negative");
    if (p.lambda >= p.omega)
        throw DomainError("lambda must be smaller than omega");
}

std::string to_string(Variant v) {
    return v == Variant::PhiZero ? "phi0" : "phi90";
}

Variant parse_variant(const std::string& s) {
    if (s == "phi0") return Variant::PhiZero;
    if (s == "phi90") return Variant::PhiHalfPi;
    throw std::invalid_argument("unknown model '" + s + "' (expected phi0 or phi90)");
}

InitialData vacuum_init(double omega, int n) {
    InitialData d;
    d.beta0 = std::sqrt(omega);
    d.n = n;
    return d;
}

void validate(const InitialData& d) {
    if (!std::isfinite(d.alpha0) || !std::isfinite(d.beta0) || !std::isfinite(d.gamma0) ||
        !std::isfinite(d.delta0) || !std::isfinite(d.eps0) || !std::isfinite(d.kappa0))
        throw DomainError("initial data must be finite");
    if (d.beta0 == 0.0) throw DomainError("beta(0) must be nonzero");
    if (d.n < 0) throw DomainError("Fock index must be non-negative");
}

HamiltonianCoeffs hamiltonian_coeffs(double t, const ModelParams& p) {
    if (!std::isfinite(t)) throw DomainError("time must be finite");
    const double w = p.omega, r = p.lambda / p.omega;
    const double c2 = std::cos(2.0 * w * t), s2 = std::sin(2.0 * w * t);
    if (p.variant == Variant::PhiZero)
        return {0.5 * (1.0 + r * c2), 0.5 * w * w * (1.0 - r * c2), 0.5 * p.lambda * s2};
    return {0.5 * (1.0 - r * s2), 0.5 * w * w * (1.0 + r * s2), 0.5 * p.lambda * c2};
}

HamiltonianCoeffs hamiltonian_coeffs_rate(double t, const ModelParams& p) {
    const double w = p.omega, l = p.lambda;
    const double c2 = std::cos(2.0 * w * t), s2 = std::sin(2.0 * w * t);
    if (p.variant == Variant::PhiZero)
        return {-l * s2, w * w * l * s2, l * w * c2};
    return {-l * c2, w * w * l * c2, -l * w * s2};
}

}  // namespace dpa
