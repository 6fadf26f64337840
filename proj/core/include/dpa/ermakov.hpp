#pragma once

#include <complex>

#include "dpa/model.hpp"

namespace dpa {

struct ErmakovState {
    double alpha, beta, gamma, delta, eps, kappa;
    double t;
};

ErmakovState initial_state(const InitialData& init);

// Coefficients of the Green's function exponent i(alpha x^2 + beta x y + gamma y^2).
struct FundamentalTriple {
    double alpha, beta, gamma;
};

struct FundamentalForms {
    FundamentalTriple closed;   // explicit trigonometric/hyperbolic forms
    FundamentalTriple generic;  // built from mu0, mu1 and the Hamiltonian coefficients
};

// Throws SingularTimeError when |mu0| < 1e-12 (1 + |mu1|).
FundamentalForms fundamental(double t, const ModelParams& params);

// How gamma(t) is evaluated: continuous in t (default) or on the principal
// arctan branch, which jumps by pi/2 whenever the arctan denominator vanishes.
enum class GammaBranch { Continuous, Principal };

ErmakovState evolve_closed_form(const InitialData& init, double t, const ModelParams& params,
                                GammaBranch branch = GammaBranch::Continuous);

// Composition of the initial data with the fundamental triple.
ErmakovState evolve_composed(const InitialData& init, double t, const ModelParams& params);

struct SlowInvariants {
    double A, B;  // time dependent
    double C, D;  // constants of motion
};

SlowInvariants slow_invariants(const InitialData& init, double t, const ModelParams& params);

// A and B evaluated directly from an Ermakov state.
double invariant_A(const ErmakovState& s, double omega);
double invariant_B(const ErmakovState& s, double omega);
double invariant_C(const ErmakovState& s);
double invariant_D(const ErmakovState& s);

struct SlowVectors {
    std::complex<double> xi, z, eta, zeta;
};

SlowVectors slow_vectors(const InitialData& init, double t, const ModelParams& params);

// Residuals of the pointwise identities linking an evolved state with the slow vectors:
// displacement phase, displacement/xi, eta/z and zeta/z factorizations.
struct IdentityResiduals {
    double phase, xi, eta, zeta;
};

IdentityResiduals slow_vector_identities(const InitialData& init, const ErmakovState& s,
                                         const ModelParams& params);

}  // namespace dpa
