#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "polyheat/specfun.hpp"

using namespace polyheat;

TEST_CASE("gamma closed forms") {
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-14));
    CHECK_THROWS_AS(gamma_fn(0.0), std::domain_error);
    CHECK_THROWS_AS(gamma_fn(-1.5), std::domain_error);
}

TEST_CASE("gamma matches the quadrature oracle") {
    for (double x : {0.3, 1.7, 5.25, 11.0, 20.5}) {
        double ref = oracles::gamma_quadrature(x);
        CHECK(gamma_fn(x) == doctest::Approx(ref).epsilon(1e-12));
    }
}

TEST_CASE("gamma recurrence on random arguments") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unif(0.1, 50.0);
    for (int i = 0; i < 100; ++i) {
        double x = unif(rng);
        double lhs = gamma_fn(x + 1.0);
        double rhs = x * gamma_fn(x);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("gamma positive lower bound on (0, infinity)") {
    // classical minimum ~0.8856 near x ~ 1.4616
    double lo = std::log(1e-3), hi = std::log(50.0);
    double minval = 1e300;
    for (int i = 0; i <= 400; ++i) {
        double x = std::exp(lo + (hi - lo) * i / 400.0);
        minval = std::min(minval, gamma_fn(x));
    }
    CHECK(minval >= 0.88);
    CHECK(minval == doctest::Approx(0.8856031944).epsilon(1e-4));
}

TEST_CASE("beta closed forms and symmetry") {
    CHECK(beta_fn(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(beta_fn(2.0, 3.0) == doctest::Approx(1.0 / 12.0).epsilon(1e-13));
    CHECK_THROWS_AS(beta_fn(0.0, 1.0), std::domain_error);

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unif(0.2, 10.0);
    for (int i = 0; i < 50; ++i) {
        double x = unif(rng), y = unif(rng);
        CHECK(beta_fn(x, y) == beta_fn(y, x)); // symmetric as computed
        double ref = oracles::beta_quadrature(x, y);
        CHECK(beta_fn(x, y) == doctest::Approx(ref).epsilon(1e-10));
    }
}

TEST_CASE("beta spot value against the defining integral") {
    double ref = oracles::beta_quadrature(0.7, 1.9);
    CHECK(beta_fn(0.7, 1.9) == doctest::Approx(ref).epsilon(1e-12));
}

TEST_CASE("gamma bounds report") {
    auto rep = check_gamma_bounds({1.0, 2.0, 5.0, 10.0, 20.0, 50.0, 100.0});
    REQUIRE(rep.rows.size() == 7);
    // x = 1: Gamma(2)/[(1/e) sqrt(2 pi)] = e/sqrt(2 pi)
    CHECK(rep.rows.front().stirling_ratio ==
          doctest::Approx(M_E / std::sqrt(2.0 * M_PI)).epsilon(1e-12));
    for (const auto& row : rep.rows) {
        if (row.x == 20.0) {
            CHECK(row.stirling_ratio >= 1.0);
            CHECK(row.stirling_ratio <= 1.005);
        }
        if (row.x == 100.0) {
            CHECK(row.stirling_ratio >= 1.0);
            CHECK(row.stirling_ratio <= 1.001);
        }
    }
    CHECK(rep.ratio_trend_ok);
    CHECK(rep.stirling_c > 0.0);
    // the bound Gamma(x+1) <= C x^{x+1/2} must hold with the reported C
    for (const auto& row : rep.rows)
        CHECK(row.power_ratio <= rep.stirling_c * (1 + 1e-12));
    CHECK_THROWS_AS(check_gamma_bounds({0.5}), std::domain_error);
}

TEST_CASE("embedding constant stays finite for large r") {
    CHECK(std::isfinite(embedding_constant(400.0)));
    CHECK(embedding_constant(2.0) == doctest::Approx(1.0).epsilon(1e-14));
}
