#include <doctest.h>

#include "dpa/fock.hpp"
#include "dpa/oracle.hpp"
#include "dpa/phase_space.hpp"
#include "dpa/statistics.hpp"
#include "support.hpp"

using namespace dpa;
using namespace dpa::test;

TEST_SUITE("phase_space") {
    TEST_CASE("rotation") {
        const double w = 1.6, x = 0.7, p = -0.4;
        const auto r0 = rotate(x, p, 0.0, w);
        CHECK(r0.X == doctest::Approx(w * x));
        CHECK(r0.P == doctest::Approx(p));
        const auto rq = rotate(x, p, kPi / (2 * w), w);
        CHECK(rq.X == doctest::Approx(-p));
        CHECK(rq.P == doctest::Approx(w * x));
        for (double t : {0.3, 1.9, 5.0}) {
            const auto r = rotate(x, p, t, w);
            CHECK(r.X * r.X + r.P * r.P == doctest::Approx(w * w * x * x + p * p).epsilon(1e-14));
            const auto back = unrotate(r.X, r.P, t, w);
            CHECK(back.X == doctest::Approx(x).epsilon(1e-14));
            CHECK(back.P == doctest::Approx(p).epsilon(1e-14));
        }
    }

    TEST_CASE("squeeze map has unit Jacobian") {
        for (auto prm : {phi0(), phi90(1.3, 0.5)}) {
            const auto id = squeeze_coords(0.4, -0.9, 0.0, prm);
            CHECK(id.U == doctest::Approx(0.4));
            CHECK(id.V == doctest::Approx(-0.9));
            for (double t : {0.5, 2.0, 4.5}) {
                const auto e1 = squeeze_coords(1.0, 0.0, t, prm), e2 = squeeze_coords(0.0, 1.0, t, prm);
                CHECK(e1.U * e2.V - e1.V * e2.U == doctest::Approx(1.0).epsilon(1e-13));
                const auto s = squeeze_coords(0.3, 0.8, t, prm);
                const auto b = unsqueeze_coords(s.U, s.V, t, prm);
                CHECK(b.X == doctest::Approx(0.3).epsilon(1e-13));
                CHECK(b.P == doctest::Approx(0.8).epsilon(1e-13));
            }
        }
    }

    TEST_CASE("vacuum Wigner peak") {
        for (double w : {1.0, 2.0}) CHECK(wigner_vacuum(vacuum_init(w), 0.0, phi0(w, 0.5 * w), 0.0, 0.0) == doctest::Approx(1.0 / kPi));
        for (double x : {-0.6, 0.2})
            for (double p : {0.0, 0.9})
                CHECK(wigner_vacuum(vacuum_init(1.0), 0.0, phi0(), x, p) == doctest::Approx(std::exp(-x * x - p * p) / kPi));
        CHECK_THROWS_AS(wigner_vacuum(vacuum_init(1.0, 1), 0.0, phi0(), 0.0, 0.0), DomainError);
    }

    TEST_CASE("closed form matches the transform of the wavefunction") {
        for (auto prm : {phi0(), phi90()})
            for (double t : {0.6, 1.7}) {
                const auto st = evolve_closed_form(kGeneric, t, prm);
                auto psi = [&](double x) { return squeezed_wavefunction(st, 0, x); };
                const auto m = mean_qp(kGeneric, t, prm);
                for (double dx : {-0.5, 0.0, 0.7})
                    for (double dp : {-0.8, 0.0, 0.4}) {
                        const double x = m.mean_q + dx, p = m.mean_p + dp;
                        CHECK(std::abs(wigner_vacuum(kGeneric, t, prm, x, p) - oracle::wigner_transform(psi, x, p, 18.0, 4097)) < 1e-6);
                    }
            }
    }

    TEST_CASE("grid integral and marginals") {
        const auto prm = phi0();
        const double t = 1.2;
        const auto g = wigner_grid_auto(kGeneric, t, prm, 401);
        const double hx = (g.x_max - g.x_min) / (g.nx - 1), hp = (g.p_max - g.p_min) / (g.np - 1);
        CHECK(oracle::simpson_2d(g.values, g.nx, g.np, hx, hp) == doctest::Approx(1.0).epsilon(1e-6));
        const auto st = evolve_closed_form(kGeneric, t, prm);
        for (int i = 50; i < g.nx; i += 75) {
            std::vector<double> row(g.values.begin() + std::size_t(i) * g.np, g.values.begin() + std::size_t(i + 1) * g.np);
            CHECK(oracle::simpson(row, hp) == doctest::Approx(std::norm(squeezed_wavefunction(st, 0, g.x(i)))).epsilon(1e-7));
        }
    }

    TEST_CASE("grid layout") {
        const auto g = wigner_grid(vacuum_init(1.0), 0.0, phi0(), -1.0, 1.0, 3, -2.0, 2.0, 5);
        CHECK(g.values.size() == 15);
        CHECK(g.p(4) == doctest::Approx(2.0));
        CHECK(g.at(1, 2) == doctest::Approx(1.0 / kPi));
    }

    TEST_CASE("Figure 1 contours") {
        const auto prm = phi0();
        const auto v = vacuum_init(1.0);
        const auto c0 = contour_q(2.0, 0.0, v, prm, 512);
        for (const auto& [x, p] : c0.points) CHECK(x * x + p * p == doctest::Approx(2.0).epsilon(1e-13));
        const double a0 = polygon_area(c0.points);
        CHECK(a0 == doctest::Approx(2.0 * kPi * std::sin(2 * kPi / 512) / (2 * kPi / 512)).epsilon(1e-12));
        for (double t = 0.1; t < 3.0; t += 0.37) {
            const auto c = contour_q(2.0, t, v, prm, 512);
            CHECK(polygon_area(c.points) == doctest::Approx(a0).epsilon(1e-6));
            for (std::size_t k = 0; k < c.points.size(); k += 64) {
                const auto [x, p] = c.points[k];
                CHECK(wigner_vacuum(v, t, prm, x, p) == doctest::Approx(std::exp(-2.0) / kPi).epsilon(1e-10));
            }
        }
        CHECK_THROWS_AS(contour_q(-1.0, 0.0, v, prm), DomainError);
    }

    TEST_CASE("shoelace area") {
        CHECK(polygon_area({{0, 0}, {2, 0}, {2, 1}, {0, 1}}) == doctest::Approx(2.0));
    }
}
