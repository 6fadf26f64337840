#include "dpa/ermakov.hpp"

#include <cmath>
#include <numbers>

#include "dpa/characteristic.hpp"

namespace dpa {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

// Argument of w on the branch closest to the reference phase.
double continuous_arg(double re, double im, double reference) {
    const double principal = std::atan2(im, re);
    return principal + 2.0 * kPi * std::round((reference - principal) / (2.0 * kPi));
}

double sign_of(double x) { return x < 0.0 ? -1.0 : 1.0; }

void check_regular(const MuPair& m) {
    if (std::abs(m.mu0) < 1e-12 * (1.0 + std::abs(m.mu1)))
        throw SingularTimeError("mu0 vanishes at t = " + std::to_string(m.t));
}

}  // namespace

ErmakovState initial_state(const InitialData& d) {
    return {d.alpha0, d.beta0, d.gamma0, d.delta0, d.eps0, d.kappa0, 0.0};
}

FundamentalForms fundamental(double t, const ModelParams& p) {
    const MuPair m = mu_pair(t, p);
    check_regular(m);
    const double w = p.omega, l = p.lambda;
    const double c = std::cos(w * t), s = std::sin(w * t);

    FundamentalForms out{};
    if (p.variant == Variant::PhiZero) {
        const double ch = std::cosh(l * t), sh = std::sinh(l * t);
        const double den = ch * s + sh * c;
        out.closed = {0.5 * w * (ch * c - sh * s) / den, -w / den, 0.5 * w * (ch * c + sh * s) / den};
    } else {
        const double cot = c / s;
        out.closed = {0.5 * w * cot, -std::exp(l * t) * w / s, 0.5 * w * std::exp(2.0 * l * t) * cot};
    }

    const HamiltonianCoeffs h = hamiltonian_coeffs(t, p);
    const HamiltonianCoeffs h0 = hamiltonian_coeffs(0.0, p);
    out.generic = {m.dmu0 / (4.0 * h.a * m.mu0) - h.d / (2.0 * h.a), -1.0 / m.mu0,
                   m.mu1 / (2.0 * m.mu0) + h0.d / (2.0 * h0.a)};
    return out;
}

ErmakovState evolve_closed_form(const InitialData& in, double t, const ModelParams& p,
                                GammaBranch branch) {
    validate(in);
    const double w = p.omega, l = p.lambda;
    const double a0 = in.alpha0, b0 = in.beta0, d0 = in.delta0, e0 = in.eps0;
    const double b2 = b0 * b0, b4 = b2 * b2;
    const double c = std::cos(w * t), s = std::sin(w * t);
    const double c2 = std::cos(2.0 * w * t), s2 = std::sin(2.0 * w * t);
    const double phase_ref = characteristic_phase(t, p);

    ErmakovState st{};
    st.t = t;
    double gre = 0.0, gim = 0.0;  // gamma = gamma(0) - arg(gre + i gim) / 2

    if (p.variant == Variant::PhiZero) {
        const double ch = std::cosh(l * t), sh = std::sinh(l * t);
        const double ch2 = std::cosh(2.0 * l * t), sh2 = std::sinh(2.0 * l * t);
        const double sum = 4.0 * a0 * a0 + b4 + w * w;
        const double dif = 4.0 * a0 * a0 + b4 - w * w;
        const double L = (sum + 4.0 * a0 * w * s2) * ch2 + (4.0 * a0 * w + sum * s2) * sh2 - dif * c2;
        if (!(L > 0.0)) throw SingularTimeError("closed-form denominator is not positive");
        const double M = (w * c + 2.0 * a0 * s) * ch + (2.0 * a0 * c + w * s) * sh;
        const double N = sh * c + ch * s;

        st.alpha = w / (2.0 * L) * (dif * s2 + (4.0 * a0 * w * ch2 + sum * sh2) * c2);
        st.beta = b0 * w * std::sqrt(2.0 / L);
        gre = M;
        gim = b2 * N;
        const double P = 2.0 * a0 * d0 + b2 * b0 * e0;
        st.delta = 2.0 * w / L *
                   ((d0 * w * c + P * s) * ch + (P * c + d0 * w * s) * sh);
        const double Q = 2.0 * a0 * e0 - b0 * d0;
        st.eps = std::sqrt(2.0 / L) * ((e0 * w * c + Q * s) * ch + (Q * c + e0 * w * s) * sh);
        const double K1 = 2.0 * (b2 * b0 * d0 * e0 + a0 * (d0 * d0 - b2 * e0 * e0));
        const double K2 = (d0 * d0 - b2 * e0 * e0) * w;
        st.kappa = in.kappa0 + (K1 * c2 - (K1 + K2 * s2) * ch2 - (K2 + K1 * s2) * sh2) / (2.0 * L);
    } else {
        const double e2 = std::exp(2.0 * l * t);
        const double M = 2.0 * a0 * s + w * e2 * c;
        const double Dn = b4 * s * s + M * M;
        if (!(Dn > 0.0)) throw SingularTimeError("closed-form denominator is not positive");

        st.alpha = w * (a0 * w * e2 * c2 + 0.25 * s2 * (b4 + 4.0 * a0 * a0 - w * w * e2 * e2)) / Dn;
        st.beta = w * b0 * std::exp(l * t) / std::sqrt(Dn);
        gre = M;
        gim = b2 * s;
        st.delta = w * std::exp(l * t) * (e0 * b2 * b0 * s + M * d0) / Dn;
        st.eps = (e0 * M - b0 * d0 * s) / std::sqrt(Dn);
        st.kappa = in.kappa0 + s * s * (e0 * b2 * (a0 * e0 - b0 * d0) - a0 * d0 * d0) / Dn +
                   w * e2 * s2 * (e0 * e0 * b2 - d0 * d0) / (4.0 * Dn);
    }

    if (branch == GammaBranch::Continuous)
        st.gamma = in.gamma0 - 0.5 * continuous_arg(gre, gim, phase_ref);
    else
        st.gamma = in.gamma0 - 0.5 * std::atan(gim / gre);
    return st;
}

ErmakovState evolve_composed(const InitialData& in, double t, const ModelParams& p) {
    validate(in);
    const MuPair m = mu_pair(t, p);
    check_regular(m);
    const FundamentalTriple f = fundamental(t, p).generic;
    const HamiltonianCoeffs h0 = hamiltonian_coeffs(0.0, p);

    const double a0 = in.alpha0, b0 = in.beta0, d0 = in.delta0, e0 = in.eps0;
    const double b2 = b0 * b0, b3 = b2 * b0;
    const double sg = in.alpha0 + f.gamma;
    const double den = b2 * b2 + 4.0 * sg * sg;
    const double root = std::sqrt(den);
    // Along the trajectory the composed beta and eps change sign with mu0;
    // multiplying by sign(mu0) keeps them on the continuous branch.
    const double sgn = sign_of(m.mu0);

    ErmakovState st{};
    st.t = t;
    st.alpha = f.alpha - f.beta * f.beta * sg / den;
    st.beta = -b0 * f.beta / root * sgn;
    const double zr = (2.0 * a0 + h0.d / h0.a) * m.mu0 + m.mu1;
    st.gamma = in.gamma0 - 0.5 * continuous_arg(zr, b2 * m.mu0, characteristic_phase(t, p));
    st.delta = -f.beta * (e0 * b3 + 2.0 * sg * d0) / den;
    st.eps = (2.0 * e0 * sg - b0 * d0) / root * sgn;
    st.kappa = in.kappa0 - e0 * b3 * d0 / den + sg * (e0 * e0 * b2 - d0 * d0) / den;
    return st;
}

double invariant_A(const ErmakovState& s, double w) {
    const double b2 = s.beta * s.beta;
    return (4.0 * s.alpha * s.alpha + b2 * b2 + w * w) / b2;
}

double invariant_B(const ErmakovState& s, double w) {
    const double p = s.delta - 2.0 * s.alpha * s.eps / s.beta;
    const double q = w * s.eps / s.beta;
    return p * p + q * q;
}

double invariant_C(const ErmakovState& s) {
    return s.eps * s.eps + s.delta * s.delta / (s.beta * s.beta);
}

double invariant_D(const ErmakovState& s) {
    return s.kappa - s.delta * s.eps / (2.0 * s.beta);
}

SlowInvariants slow_invariants(const InitialData& in, double t, const ModelParams& p) {
    validate(in);
    const double w = p.omega, l = p.lambda;
    const double a0 = in.alpha0, b0 = in.beta0, d0 = in.delta0, e0 = in.eps0;
    const double b2 = b0 * b0;
    const double ep = std::exp(2.0 * l * t), em = std::exp(-2.0 * l * t);
    const double pp = d0 - 2.0 * a0 * e0 / b0;
    const double qq = w * e0 / b0;

    SlowInvariants out{};
    if (p.variant == Variant::PhiZero) {
        out.A = ((2.0 * a0 + w) * (2.0 * a0 + w) + b2 * b2) / (2.0 * b2) * ep +
                ((2.0 * a0 - w) * (2.0 * a0 - w) + b2 * b2) / (2.0 * b2) * em;
        out.B = 0.5 * (pp - qq) * (pp - qq) * ep + 0.5 * (pp + qq) * (pp + qq) * em;
    } else {
        out.A = ((4.0 * a0 * a0 + b2 * b2) * em + w * w * ep) / b2;
        out.B = pp * pp * em + qq * qq * ep;
    }
    out.C = e0 * e0 + d0 * d0 / b2;
    out.D = in.kappa0 - d0 * e0 / (2.0 * b0);
    return out;
}

SlowVectors slow_vectors(const InitialData& in, double t, const ModelParams& p) {
    validate(in);
    const double w = p.omega, l = p.lambda;
    const double a0 = in.alpha0, b0 = in.beta0, d0 = in.delta0, e0 = in.eps0;
    const double b2 = b0 * b0;
    const double pp = d0 - 2.0 * a0 * e0 / b0;
    const double qq = w * e0 / b0;
    const double c = std::cos(w * t), s = std::sin(w * t);
    const cplx cc(2.0 * a0, b2);

    SlowVectors v{};
    if (p.variant == Variant::PhiZero) {
        const double ch = std::cosh(l * t), sh = std::sinh(l * t);
        v.xi = cplx(pp * ch - qq * sh, qq * ch - pp * sh);
        v.z = (w * c + cc * s) / w * ch + (cc * c + w * s) / w * sh;
        v.eta = cplx((w + b2) * ch + 2.0 * a0 * sh, -(2.0 * a0 * ch + (w - b2) * sh));
        v.zeta = cplx((w - b2) * ch + 2.0 * a0 * sh, 2.0 * a0 * ch + (w + b2) * sh);
    } else {
        const double ep = std::exp(l * t), em = std::exp(-l * t);
        const cplx sq(b2, -2.0 * a0);
        v.xi = cplx(pp * em, qq * ep);
        v.z = ep * c + cc * em * s / w;
        v.eta = w * ep + sq * em;
        v.zeta = w * ep - sq * em;
    }
    return v;
}

IdentityResiduals slow_vector_identities(const InitialData& in, const ErmakovState& s,
                                         const ModelParams& p) {
    const double w = p.omega, t = s.t;
    const SlowVectors v = slow_vectors(in, t, p);
    const cplx I(0.0, 1.0);
    IdentityResiduals r{};
    const cplx lhs_phase(s.delta / s.beta, s.eps);
    const cplx rhs_phase = cplx(in.delta0 / in.beta0, in.eps0) * std::exp(2.0 * I * (s.gamma - in.gamma0));
    r.phase = std::abs(lhs_phase - rhs_phase);
    const cplx lhs_xi(s.delta - 2.0 * s.alpha * s.eps / s.beta, w * s.eps / s.beta);
    r.xi = std::abs(lhs_xi - std::exp(-I * w * t) * v.xi);
    const double b2 = s.beta * s.beta;
    const cplx lhs_eta(0.5 * (w + b2), -s.alpha);
    r.eta = std::abs(lhs_eta - 0.5 * std::exp(I * w * t) * v.eta / v.z);
    const cplx lhs_zeta(0.5 * (w - b2), s.alpha);
    r.zeta = std::abs(lhs_zeta - 0.5 * std::exp(-I * w * t) * v.zeta / v.z);
    return r;
}

}  // namespace dpa
