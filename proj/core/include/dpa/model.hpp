#pragma once

#include <string>

#include "dpa/errors.hpp"

namespace dpa {

// PhiZero: pump phase 0; PhiHalfPi: pump phase pi/2.
enum class Variant { PhiZero, PhiHalfPi };

struct ModelParams {
    double omega = 1.0;
    double lambda = 0.0;
    Variant variant = Variant::PhiZero;
};

// Throws DomainError unless omega > 0 and 0 <= lambda < omega (both variants).
ModelParams make_model(double omega, double lambda, Variant variant);
void validate(const ModelParams& params);

std::string to_string(Variant v);
Variant parse_variant(const std::string& s);

struct InitialData {
    double alpha0 = 0.0;
    double beta0 = 1.0;
    double gamma0 = 0.0;
    double delta0 = 0.0;
    double eps0 = 0.0;
    double kappa0 = 0.0;
    int n = 0;
};

// alpha = 0, beta = sqrt(omega), everything else zero.
InitialData vacuum_init(double omega, int n = 0);
void validate(const InitialData& init);

// H = a p^2 + b q^2 + d (pq + qp)
struct HamiltonianCoeffs {
    double a;
    double b;
    double d;
};

HamiltonianCoeffs hamiltonian_coeffs(double t, const ModelParams& params);

// Time derivatives of (a, b, d).
HamiltonianCoeffs hamiltonian_coeffs_rate(double t, const ModelParams& params);

}  // namespace dpa
