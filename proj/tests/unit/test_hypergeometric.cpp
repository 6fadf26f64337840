#include <doctest.h>

#include <cmath>

#include "dpa/hypergeometric.hpp"

using namespace dpa;
using cplx = std::complex<double>;

TEST_SUITE("hypergeometric") {
    TEST_CASE("binomial sums") {
        const cplx z(0.3, -0.2);
        const cplx v = scaled_series({-2.0, 1.0, 1.0, z, 2}, 0.0, 0.0);
        CHECK(std::abs(v - (1.0 - z) * (1.0 - z)) < 1e-15);
        const cplx w = scaled_series({-1.0, -1.0, std::nullopt, z, 1}, 0.0, 0.0);
        CHECK(std::abs(w - (1.0 + z)) < 1e-15);
    }

    TEST_CASE("prefactor and phase") {
        const cplx v = scaled_series({-3.0, 0.5, 1.5, cplx(0.1), 3}, std::log(2.5), 0.4);
        const cplx plain = series_double({-3.0, 0.5, 1.5, cplx(0.1), 3});
        CHECK(std::abs(v - 2.5 * std::polar(1.0, 0.4) * plain) < 1e-14);
    }

    TEST_CASE("empty sum") {
        CHECK(std::abs(scaled_series({0.0, 2.0, 1.0, cplx(5.0), 0}, 0.0, 0.0) - 1.0) < 1e-15);
    }

    TEST_CASE("cancellation falls back to extended precision") {
        const int K = 60;
        const TerminatingSeries s{double(-K), 1.0, 1.0, cplx(2.0), K};
        CHECK(series_precision_bits(s, 0.0) > 53);
        CHECK(std::abs(scaled_series(s, 0.0, 0.0) - 1.0) < 1e-12);
        CHECK(std::abs(series_double(s) - 1.0) > 1e-6);
    }

    TEST_CASE("absolute accuracy on a tiny result") {
        const int K = 80;
        const TerminatingSeries s{double(-K), 1.0, 1.0, cplx(1.5), K};
        CHECK(std::abs(scaled_series(s, 0.0, 0.0) - std::pow(-0.5, K)) < 1e-17);
        CHECK(std::abs(scaled_series(s, 20.0, 0.0) - std::exp(20.0) * std::pow(-0.5, K)) < 1e-17);
    }
}
