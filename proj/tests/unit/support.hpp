#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "dpa/model.hpp"

namespace dpa::test {

using cplx = std::complex<double>;

constexpr double kPi = std::numbers::pi;

inline const InitialData kGeneric{0.3, 1.2, 0.1, 0.5, -0.4, 0.2, 0};
inline const InitialData kNegativeBeta{-0.2, -0.8, 0.3, -0.3, 0.6, -0.1, 0};

inline ModelParams phi0(double w = 1.0, double l = 0.25) { return make_model(w, l, Variant::PhiZero); }
inline ModelParams phi90(double w = 1.0, double l = 0.25) { return make_model(w, l, Variant::PhiHalfPi); }

inline InitialData with_n(InitialData d, int n) {
    d.n = n;
    return d;
}

// Random initial data with |beta| bounded away from zero.
inline InitialData random_init(std::mt19937_64& rng, int n = 0) {
    std::uniform_real_distribution<double> u(-1.0, 1.0), b(0.4, 1.8);
    std::bernoulli_distribution sign(0.5);
    InitialData d{u(rng), b(rng) * (sign(rng) ? 1.0 : -1.0), u(rng), u(rng), u(rng), u(rng), n};
    return d;
}

inline double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace dpa::test
