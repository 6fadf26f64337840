#pragma once

#include "dpa/model.hpp"

namespace dpa {

// Fundamental solutions of the characteristic equation with mu0(0)=0, mu1(0)=1.
struct MuPair {
    double mu0, mu1;
    double dmu0, dmu1;
    double ddmu0, ddmu1;
    double t;
};

MuPair mu_pair(double t, const ModelParams& params);

// The published Wronskian values: -1 - (l/w) cos 2wt for PhiZero and
// 1 - (l/w) sin 2wt for PhiHalfPi. PhiZero uses the ordering mu0 mu1' - mu1 mu0',
// PhiHalfPi the reversed ordering mu1 mu0' - mu0 mu1'.
double wronskian(double t, const ModelParams& params);

// mu0 mu1' - mu1 mu0' for either variant; equals -2 a(t).
double wronskian_ordered(double t, const ModelParams& params);

// Coefficients of P mu'' + Q mu' + R mu = 0.
struct InceCoeffs {
    double P, Q, R;
};

InceCoeffs ince_coeffs(double t, const ModelParams& params);

struct InceResidual {
    double r0, r1;
};

InceResidual ince_residual(double t, const ModelParams& params);

// Continuous phase whose multiples of pi are exactly the zeros of mu0;
// strictly increasing for t >= 0. Used for branch tracking.
double characteristic_phase(double t, const ModelParams& params);

// Number of zeros of mu0 in (0, t] for t > 0.
int caustic_count(double t, const ModelParams& params);

}  // namespace dpa
