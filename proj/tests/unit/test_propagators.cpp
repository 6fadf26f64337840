#include <doctest.h>

#include <random>

#include "dpa/characteristic.hpp"
#include "dpa/oracle.hpp"
#include "dpa/propagators.hpp"
#include "support.hpp"

using namespace dpa;
using namespace dpa::test;

namespace {

double max_diff(const WavefunctionGrid& a, const InitialData& in, double t, const ModelParams& p) {
    double d = 0.0;
    for (int i = 0; i < a.num_points; ++i) d = std::max(d, std::abs(a.values[i] - squeezed_wavefunction(in, t, p, a.x(i))));
    return d;
}

double norm2(const WavefunctionGrid& g) {
    std::vector<double> f(g.values.size());
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = std::norm(g.values[i]);
    return oracle::simpson(f, g.dx());
}

}  // namespace

TEST_SUITE("propagators") {
    TEST_CASE("oscillator kernel") {
        const double w = 1.3, t = 0.7;
        CHECK(std::abs(greens_oscillator(0.3, -0.8, t, w)) == doctest::Approx(std::sqrt(w / (2 * kPi * std::sin(w * t)))));
        CHECK(std::abs(greens_oscillator(0.3, -0.8, t, w) - greens_oscillator(-0.8, 0.3, t, w)) < 1e-15);
        CHECK_THROWS_AS(greens_oscillator(0.0, 0.0, kPi / w, w), SingularTimeError);
    }

    TEST_CASE("ground state is stationary under the oscillator kernel") {
        const double w = 1.0;
        const oracle::GridSpec g{-12.0, 12.0, 6001};
        for (double t : {0.4, 2.0, 4.0}) {
            for (double x : {-0.7, 0.0, 1.1}) {
                const auto r = oracle::simpson(oracle::sample(g, std::function<cplx(double)>([&](double y) {
                                                   return greens_oscillator(x, y, t, w) * stationary_wavefunction(0, y, w);
                                               })),
                                               g.h());
                CHECK(std::abs(r - std::polar(1.0, -0.5 * w * t) * stationary_wavefunction(0, x, w)) < 1e-6);
            }
        }
    }

    TEST_CASE("squeeze kernel") {
        const double w = 1.0, l = 0.25, t = 0.9;
        CHECK(std::abs(greens_lambda(0.2, 0.5, t, w, l)) == doctest::Approx(std::sqrt(w / (2 * kPi * std::sinh(l * t)))));
        CHECK(std::abs(greens_lambda(0.2, 0.5, t, w, l) - greens_lambda(0.5, 0.2, t, w, l)) < 1e-15);
        // i chi_t + (l / 2w)(chi_xx + w^2 x^2 chi) = 0 for chi = G(., y, t)
        const double y = 0.4, h = 1e-3, dt = 1e-4;
        for (double x : {-0.6, 0.1, 0.8}) {
            const cplx G = greens_lambda(x, y, t, w, l);
            const cplx Gt = (greens_lambda(x, y, t + dt, w, l) - greens_lambda(x, y, t - dt, w, l)) / (2 * dt);
            const cplx Gxx = (greens_lambda(x + h, y, t, w, l) - 2.0 * G + greens_lambda(x - h, y, t, w, l)) / (h * h);
            const cplx res = cplx(0, 1) * Gt + (l / (2 * w)) * (Gxx + w * w * x * x * G);
            CHECK(std::abs(res) / std::abs(G) < 1e-5);
        }
    }

    TEST_CASE("factorizations at random points") {
        std::mt19937_64 rng(20240531);
        std::uniform_real_distribution<double> ux(-2.0, 2.0), ut(0.05, 6.0);
        const auto p9 = phi90(), p0 = phi0();
        for (int k = 0; k < 50; ++k) {
            const double x = ux(rng), y = ux(rng), t = ut(rng);
            if (std::abs(std::sin(t)) < 0.05 || std::abs(mu_pair(t, p0).mu0) < 0.05) continue;
            const cplx lhs = greens_full(x, y, t, p9);
            const cplx rhs = std::exp(0.5 * p9.lambda * t) * greens_oscillator(x, y * std::exp(p9.lambda * t), t, p9.omega);
            CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(rhs));
            // int G_w(x, z) G_l(z, y) dz in closed form
            const double w = p0.omega, l = p0.lambda;
            const double sh = std::sinh(l * t), ch = std::cosh(l * t);
            const auto ko = oscillator_kernel(t, w);
            const cplx pl = greens_lambda(0.0, 0.0, t, w, l);
            const cplx A = ko.c + w * ch / (2 * sh);
            const cplx B = ko.b * x - w * y / sh;
            const cplx C = ko.a * x * x + w * ch * y * y / (2 * sh);
            const cplx comp = ko.prefactor * pl * oracle::complex_gaussian_integral(A, B, C);
            const cplx g = greens_full(x, y, t, p0);
            CHECK(std::abs(g - comp) < 1e-10 * std::abs(g));
        }
    }

    TEST_CASE("harmonic limit") {
        const auto p = phi0(1.2, 0.0);
        for (double t : {0.3, 1.7, 4.0}) CHECK(std::abs(greens_full(0.4, -0.3, t, p) - greens_oscillator(0.4, -0.3, t, 1.2)) < 1e-13);
    }

    TEST_CASE("propagated ground state matches the closed form") {
        const auto v = vacuum_init(1.0);
        for (auto p : {phi0(), phi90()})
            for (double t : {0.7, 2.5, 4.0}) {
                const auto g = oracle::default_grid(v, t, p, 1025);
                const auto in = sample_squeezed(v, 0.0, p, g.lower, g.upper, g.num_points);
                const auto r = propagate_full(in, t, p);
                CHECK(max_diff(r.grid, v, t, p) < 1e-6);
                CHECK(norm2(r.grid) == doctest::Approx(1.0).epsilon(1e-6));
                if (p.variant == Variant::PhiHalfPi) {
                    REQUIRE(r.transport.has_value());
                    CHECK(r.transport_discrepancy < 1e-8);
                }
            }
    }

    TEST_CASE("generic excited state") {
        const auto in = with_n(kGeneric, 2);
        const auto p = phi90(1.0, 0.3);
        const double t = 1.9;
        const auto g = oracle::default_grid(in, t, p, 2049);
        const auto s = sample_squeezed(in, 0.0, p, g.lower, g.upper, g.num_points);
        CHECK(max_diff(propagate(s, t, p), in, t, p) < 1e-6);
    }

    TEST_CASE("short times approach the identity") {
        const auto v = vacuum_init(1.0);
        const auto p = phi0();
        const auto in = sample_squeezed(v, 0.0, p, -10.0, 10.0, 801);
        const auto out = propagate(in, 1e-3, p);
        double d = 0.0;
        for (int i = 0; i < in.num_points; ++i) d = std::max(d, std::abs(out.values[i] - in.values[i]));
        CHECK(d < 1e-3);
        const auto same = propagate_full(in, 0.0, p);
        CHECK(same.method == "identity");
        for (int i = 0; i < in.num_points; i += 40) CHECK(std::abs(same.grid.values[i] - in.values[i]) < 1e-12);
    }

    TEST_CASE("custom output grid") {
        const auto v = vacuum_init(1.0);
        const auto p = phi0();
        const auto in = sample_squeezed(v, 0.0, p, -12.0, 12.0, 1025);
        PropagateOptions o{-2.0, 2.0, 41};
        const auto out = propagate(in, 1.3, p, o);
        CHECK(out.num_points == 41);
        CHECK(max_diff(out, v, 1.3, p) < 1e-6);
    }

    TEST_CASE("input validation") {
        auto in = sample_squeezed(vacuum_init(1.0), 0.0, phi0(), -10.0, 10.0, 401);
        for (auto& z : in.values) z *= 1.1;
        CHECK_THROWS_AS(propagate(in, 0.5, phi0()), DomainError);
        const auto ok = sample_squeezed(vacuum_init(1.0), 0.0, phi0(1.0, 0.0), -10.0, 10.0, 401);
        CHECK_THROWS_AS(propagate(ok, kPi, phi0(1.0, 0.0)), SingularTimeError);
    }
}
