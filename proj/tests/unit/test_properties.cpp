#include <doctest.h>

#include <random>

#include "dpa/canonical.hpp"
#include "dpa/characteristic.hpp"
#include "dpa/fock.hpp"
#include "dpa/phase_space.hpp"
#include "dpa/statistics.hpp"
#include "support.hpp"

using namespace dpa;
using namespace dpa::test;

namespace {

struct Sample {
    ModelParams params;
    InitialData init;
    double t;
};

Sample draw(std::mt19937_64& rng, int max_n = 5) {
    std::uniform_real_distribution<double> uw(0.5, 2.5), ur(0.0, 0.9), ut(0.0, 6.0);
    std::uniform_int_distribution<int> un(0, max_n);
    std::bernoulli_distribution half(0.5);
    const double w = uw(rng);
    const ModelParams p = make_model(w, ur(rng) * w, half(rng) ? Variant::PhiZero : Variant::PhiHalfPi);
    // lambda t <= 3 keeps sigma_p sigma_q ~ e^{4 lambda t} well inside double precision
    return {p, random_init(rng, un(rng)), std::min(ut(rng), 3.0 / std::max(p.lambda, 1e-9))};
}

}  // namespace

TEST_SUITE("properties") {
    TEST_CASE("uncertainty determinant is (n + 1/2)^2") {
        std::mt19937_64 rng(1);
        for (int k = 0; k < 300; ++k) {
            const auto s = draw(rng);
            const auto v = quadrature_variances(evolve_closed_form(s.init, s.t, s.params), s.init.n);
            const double h = s.init.n + 0.5;
            CHECK(v.sigma_p * v.sigma_q - v.sigma_pq * v.sigma_pq == doctest::Approx(h * h).epsilon(1e-9));
        }
    }

    TEST_CASE("closed form equals composition") {
        std::mt19937_64 rng(2);
        for (int k = 0; k < 300; ++k) {
            const auto s = draw(rng);
            if (std::abs(mu_pair(s.t, s.params).mu0) < 1e-3) continue;
            const auto a = evolve_closed_form(s.init, s.t, s.params), b = evolve_composed(s.init, s.t, s.params);
            CHECK(rel(a.alpha, b.alpha) < 1e-8);
            CHECK(rel(a.beta, b.beta) < 1e-8);
            CHECK(rel(a.delta, b.delta) < 1e-8);
            CHECK(rel(a.eps, b.eps) < 1e-8);
            CHECK(rel(a.gamma, b.gamma) < 1e-8);
            CHECK(rel(a.kappa, b.kappa) < 1e-8);
        }
    }

    TEST_CASE("invariants") {
        std::mt19937_64 rng(3);
        for (int k = 0; k < 300; ++k) {
            const auto s = draw(rng);
            const auto inv = slow_invariants(s.init, s.t, s.params);
            const auto inv0 = slow_invariants(s.init, 0.0, s.params);
            CHECK(inv.A >= 2.0 * s.params.omega * (1 - 1e-12));
            CHECK(inv.B >= -1e-12);
            CHECK(rel(inv.C, inv0.C) < 1e-10);
            CHECK(rel(inv.D, inv0.D) < 1e-10);
            CHECK(rel(std::norm(slow_vectors(s.init, s.t, s.params).xi), inv.B) < 1e-9);
            CHECK(mean_photon_number(inv, s.init.n, s.params.omega) >= -1e-12);
        }
    }

    TEST_CASE("Wronskian is -2a(t)") {
        std::mt19937_64 rng(4);
        for (int k = 0; k < 300; ++k) {
            const auto s = draw(rng);
            CHECK(wronskian_ordered(s.t, s.params) == doctest::Approx(-2.0 * hamiltonian_coeffs(s.t, s.params).a).epsilon(1e-11));
        }
    }

    TEST_CASE("squeeze parameters reproduce their defining equations") {
        std::mt19937_64 rng(5);
        for (int k = 0; k < 300; ++k) {
            const auto s = draw(rng);
            const auto st = evolve_closed_form(s.init, s.t, s.params);
            const auto sp = squeeze_parameters(st, s.params.omega);
            const double c2 = sp.cosh_tau * sp.cosh_tau;
            CHECK(std::abs(c2 - sp.sinh_tau * sp.sinh_tau - 1.0) < 1e-12 * c2);
            const auto id = squeeze_identities(st, s.params.omega, sp);
            CHECK(id.cosh_equation < 1e-9);
            CHECK(id.sinh_equation < 1e-9);
        }
    }

    TEST_CASE("expansion mean is omega (N + 1/2)") {
        std::mt19937_64 rng(6);
        for (int k = 0; k < 300; ++k) {
            const auto s = draw(rng);
            const auto c = hamiltonian_expansion(evolve_closed_form(s.init, s.t, s.params), s.params.omega);
            const double n = statistics_report(s.init, s.t, s.params).mean_n;
            CHECK(expansion_mean(c, s.init.n) == doctest::Approx(s.params.omega * (n + 0.5)).epsilon(1e-10));
        }
    }

    TEST_CASE("amplitudes are unitary and order independent") {
        std::mt19937_64 rng(7);
        for (int k = 0; k < 40; ++k) {
            auto s = draw(rng, 3);
            s.t = std::min(s.t, 1.2 / std::max(s.params.lambda, 1e-3));
            // states with large photon numbers need more than the 512-level cap
            if (statistics_report(s.init, s.t, s.params).mean_n > 4.0) continue;
            const auto a = amplitudes(s.init, s.t, s.params);
            CHECK(a.tail_mass < 1e-10);
            CHECK(a.order_discrepancy < 1e-8);
        }
    }

    TEST_CASE("Wigner function of the dynamical vacuum is a normalized Gaussian") {
        std::mt19937_64 rng(8);
        std::uniform_real_distribution<double> u(-3.0, 3.0);
        for (int k = 0; k < 200; ++k) {
            const auto s = draw(rng, 0);
            const double W = wigner_vacuum(s.init, s.t, s.params, u(rng), u(rng));
            CHECK(W >= 0.0);
            CHECK(W <= 1.0 / kPi * (1 + 1e-14));
            const auto m = mean_qp(s.init, s.t, s.params);
            CHECK(wigner_vacuum(s.init, s.t, s.params, m.mean_q, m.mean_p) == doctest::Approx(1.0 / kPi).epsilon(1e-10));
        }
    }

    TEST_CASE("contour area is conserved") {
        std::mt19937_64 rng(9);
        for (int k = 0; k < 100; ++k) {
            const auto s = draw(rng, 0);
            const double a0 = polygon_area(contour_q(1.5, 0.0, s.init, s.params, 400).points);
            const double a = polygon_area(contour_q(1.5, s.t, s.init, s.params, 400).points);
            CHECK(a == doctest::Approx(a0).epsilon(1e-6));
        }
    }
}
