#include <doctest.h>

#include <random>

#include "dpa/canonical.hpp"
#include "dpa/statistics.hpp"
#include "support.hpp"

using namespace dpa;
using namespace dpa::test;

TEST_SUITE("canonical") {
    TEST_CASE("free oscillator expansion") {
        const double w = 1.5;
        const auto c = hamiltonian_expansion(initial_state(vacuum_init(w)), w);
        CHECK(std::abs(c.c_aa) < 1e-15);
        CHECK(std::abs(c.c_adad) < 1e-15);
        CHECK(c.c_sym == doctest::Approx(w / 2));
        CHECK(std::abs(c.c_a) < 1e-15);
        CHECK(std::abs(c.c_const) < 1e-15);
    }

    TEST_CASE("symmetric coefficient") {
        const ErmakovState s{0.3, 1.2, 0.0, 0.5, -0.4, 0.0, 0.0};
        CHECK(hamiltonian_expansion(s, 1.0).c_sym == doctest::Approx((4 * 0.09 + std::pow(1.2, 4) + 1) / (4 * 1.44)));
    }

    TEST_CASE("expansion moments reproduce the photon statistics") {
        for (auto p : {phi0(), phi90()})
            for (int n = 0; n <= 5; ++n)
                for (double t : {0.4, 1.6}) {
                    const auto in = with_n(kGeneric, n);
                    const auto c = hamiltonian_expansion(evolve_closed_form(in, t, p), p.omega);
                    const auto r = statistics_report(in, t, p);
                    CHECK(expansion_mean(c, n) == doctest::Approx(p.omega * (r.mean_n + 0.5)).epsilon(1e-10));
                    if (n <= 2) CHECK(expansion_variance(c, n) / (p.omega * p.omega) == doctest::Approx(r.var_n).epsilon(1e-9));
                }
    }

    TEST_CASE("squeeze parameters of simple states") {
        const double w = 1.0;
        const auto none = squeeze_parameters(ErmakovState{0.0, 1.0, 0.0, 0.4, 0.3, 0.0, 0.0}, w);
        CHECK(std::abs(none.theta) < 1e-15);
        CHECK(std::abs(none.tau) < 1e-15);
        CHECK(std::abs(none.phi) < 1e-15);
        CHECK(std::abs(none.xi_d - cplx(0.3, -0.4) / std::sqrt(2.0)) < 1e-15);
        const double r = 0.3;
        const auto sq = squeeze_parameters(ErmakovState{0.0, std::exp(r), 0.0, 0.0, 0.0, 0.0, 0.0}, w);
        CHECK(sq.tau == doctest::Approx(r).epsilon(1e-14));
        CHECK(std::abs(sq.theta) < 1e-14);
        CHECK(std::abs(sq.phi) < 1e-14);
    }

    TEST_CASE("hyperbolic identity and defining equations for random states") {
        std::mt19937_64 rng(7);
        for (int k = 0; k < 200; ++k) {
            const auto in = random_init(rng);
            const auto s = initial_state(in);
            const auto sp = squeeze_parameters(s, 1.0);
            CHECK(std::abs(sp.cosh_tau * sp.cosh_tau - sp.sinh_tau * sp.sinh_tau - 1.0) < 1e-12 * sp.cosh_tau * sp.cosh_tau);
            const auto id = squeeze_identities(s, 1.0, sp);
            CHECK(id.cosh_equation < 1e-10);
            CHECK(id.sinh_equation < 1e-10);
        }
    }

    TEST_CASE("unwrapped path is continuous") {
        const auto p = phi0();
        std::vector<SqueezeParams> path;
        for (int i = 0; i <= 2000; ++i) path.push_back(squeeze_parameters(evolve_closed_form(kGeneric, 0.005 * i, p), 1.0));
        unwrap_squeeze_path(path);
        // branch jumps would be close to 2 pi (theta) or pi (phi)
        for (std::size_t i = 1; i < path.size(); ++i) {
            CHECK(std::abs(path[i].theta - path[i - 1].theta) < 1.0);
            CHECK(std::abs(path[i].phi - path[i - 1].phi) < 1.0);
        }
    }

    TEST_CASE("minimum-uncertainty times, Figure 1 parameters") {
        const auto r = minimum_uncertainty_times(vacuum_init(1.0), phi0(), 0.0, 3.0);
        REQUIRE(r.roots.size() == 3);
        CHECK(r.roots[0] == doctest::Approx(0.0).epsilon(1e-3));
        CHECK(r.roots[1] == doctest::Approx(kPi / 4).epsilon(1e-3));
        CHECK(r.roots[2] == doctest::Approx(3 * kPi / 4).epsilon(1e-3));
        for (double t : r.roots) CHECK(std::abs(quadrature_variances(evolve_closed_form(vacuum_init(1.0), t, phi0()), 0).sigma_pq) < 1e-10);
    }

    TEST_CASE("harmonic limit roots") {
        const double w = 2.0;
        InitialData d = vacuum_init(w);
        d.beta0 = 1.1;
        const auto r = minimum_uncertainty_times(d, phi0(w, 0.0), 0.0, 4.0);
        std::vector<double> all = r.roots;
        all.insert(all.end(), r.touching.begin(), r.touching.end());
        std::sort(all.begin(), all.end());
        REQUIRE(all.size() == 6);
        for (std::size_t k = 0; k < all.size(); ++k) CHECK(all[k] == doctest::Approx(k * kPi / (2 * w)).epsilon(1e-9));
    }
}
