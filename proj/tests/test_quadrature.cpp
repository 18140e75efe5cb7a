#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "wirtinger/errors.hpp"
#include "wirtinger/quadrature.hpp"

using namespace wirtinger;

TEST_SUITE("quadrature") {
    TEST_CASE("endpoint singularities") {
        const QuadResult r = integrate([](double t) { return 1.0 / std::sqrt(t); }, 0.0, 1.0);
        CHECK(r.converged);
        CHECK(r.value == doctest::Approx(2.0).epsilon(1e-10));
        CHECK(r.error_estimate <= std::max(QuadConfig{}.abs_tol, QuadConfig{}.rel_tol * r.value));

        const QuadResult disc =
            integrate([](double z) { return std::sqrt(1.0 - z * z); }, -1.0, 1.0);
        CHECK(disc.value == doctest::Approx(std::numbers::pi / 2).epsilon(1e-10));

        for (double s : {0.1, 0.5, 0.9}) {
            // The distance argument keeps x^{-s} exact near 0.
            const QuadResult q = integrate(
                [s](double, double from_a, double) { return std::pow(from_a, -s); }, 0.0, 1.0);
            CHECK(q.converged);
            CHECK(std::abs(q.value - 1.0 / (1.0 - s)) <= 1e-8 / (1.0 - s));
        }
    }

    TEST_CASE("polynomials are integrated exactly") {
        QuadConfig cfg;
        cfg.min_level = 6;
        for (int deg = 0; deg <= 10; ++deg) {
            const QuadResult r =
                integrate([deg](double x) { return std::pow(x, deg); }, -0.5, 2.0, cfg);
            const double want = (std::pow(2.0, deg + 1) - std::pow(-0.5, deg + 1)) / (deg + 1);
            CHECK(std::abs(r.value - want) <= 1e-12 * std::abs(want));
        }
    }

    TEST_CASE("additivity over random split points") {
        std::mt19937_64 rng(3);
        std::uniform_real_distribution<double> u(0.05, 0.95);
        const QuadResult whole = integrate(
            [](double, double da, double db) { return std::pow(da, -0.3) * std::pow(db, -0.6); },
            0.0, 1.0);
        for (int i = 0; i < 20; ++i) {
            const double c = u(rng);
            const QuadResult left = integrate(
                [](double x, double da, double) {
                    return std::pow(da, -0.3) * std::pow(1.0 - x, -0.6);
                },
                0.0, c);
            const QuadResult right = integrate(
                [](double x, double, double db) { return std::pow(x, -0.3) * std::pow(db, -0.6); },
                c, 1.0);
            const double tol = whole.error_estimate + left.error_estimate + right.error_estimate +
                               1e-12 * whole.value;
            CHECK(std::abs(left.value + right.value - whole.value) <= tol);
        }
    }

    TEST_CASE("endpoints are never evaluated") {
        bool touched = false;
        integrate(
            [&](double x) {
                if (x == 0.0 || x == 1.0) touched = true;
                return 1.0 / std::sqrt(x * (1.0 - x));
            },
            0.0, 1.0);
        CHECK_FALSE(touched);
    }

    TEST_CASE("non-convergence is flagged, bad intervals throw") {
        QuadConfig cfg;
        cfg.max_level = 4;
        cfg.min_level = 2;
        cfg.rel_tol = 1e-15;
        cfg.abs_tol = 1e-300;
        const QuadResult r = integrate([](double x) { return std::sin(200.0 * x); }, 0.0, 1.0, cfg);
        CHECK_FALSE(r.converged);
        CHECK_THROWS_AS(integrate([](double x) { return x; }, 1.0, 1.0), DomainError);
        CHECK_THROWS_AS(integrate([](double x) { return x; }, 2.0, 1.0), DomainError);
        QuadConfig bad;
        bad.min_level = 1;
        CHECK_THROWS_AS(bad.validate(), DomainError);
        bad = QuadConfig{};
        bad.max_level = 17;
        CHECK_THROWS_AS(bad.validate(), DomainError);
    }

    TEST_CASE("cumulative tables") {
        const CumulativeTable one = cumulative_table([](double) { return 1.0; }, 0.0, 1.0, 8);
        REQUIRE(one.x.size() == 9);
        for (std::size_t k = 0; k < one.x.size(); ++k) {
            CHECK(std::abs(one.integral[k] - one.x[k]) <= 1e-12);
            if (k > 0) CHECK(one.x[k] > one.x[k - 1]);
        }
        const CumulativeTable root = cumulative_table(
            [](double, double from_a, double) { return 1.0 / std::sqrt(from_a); }, 0.0, 1.0, 32);
        for (std::size_t k = 0; k < root.x.size(); ++k) {
            CHECK(std::abs(root.integral[k] - 2.0 * std::sqrt(root.x[k])) <= 1e-9);
        }
        // Quadratic grading: the first panel is much narrower than a uniform one.
        CHECK(root.x[1] - root.x[0] < 0.1 / 32);
        CHECK_THROWS_AS(cumulative_table([](double) { return 1.0; }, 0.0, 1.0, 7), DomainError);
    }
}
