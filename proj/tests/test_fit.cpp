#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "pentaflow/fit.hpp"

using namespace pentaflow;

TEST_CASE("exact power law: slope -2, r^2 = 1") {
    const std::vector<std::pair<double, double>> pts{{10, 1e-2}, {100, 1e-4}, {1000, 1e-6}};
    const ConvergenceFit fit = fit_convergence(pts);
    CHECK(fit.slope == Catch::Approx(-2.0).margin(1e-12));
    CHECK(fit.r_squared == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("constant residual: slope 0") {
    const std::vector<std::pair<double, double>> pts{{10, 5}, {100, 5}, {1000, 5}};
    const ConvergenceFit fit = fit_convergence(pts);
    CHECK(fit.slope == Catch::Approx(0.0).margin(1e-14));
    CHECK(fit.r_squared == 1.0); // flat data fits the flat line exactly
}

TEST_CASE("fit error paths") {
    CHECK_THROWS_AS(fit_convergence(std::vector<std::pair<double, double>>{{10, 1}, {20, 1}}),
                    InsufficientData);
    CHECK_THROWS_AS(
        fit_convergence(std::vector<std::pair<double, double>>{{10, 1}, {10, 2}, {30, 1}}),
        InsufficientData);
    CHECK_THROWS_AS(
        fit_convergence(std::vector<std::pair<double, double>>{{10, 1}, {20, 0.0}, {30, 1}}),
        NonPositiveResidual);
    CHECK_THROWS_AS(
        fit_convergence(std::vector<std::pair<double, double>>{{10, 1}, {20, -2.0}, {30, 1}}),
        NonPositiveResidual);
}

TEST_CASE("linear least squares recovers a known line") {
    std::vector<double> xs, ys;
    for (int i = 0; i < 20; ++i) {
        xs.push_back(i);
        ys.push_back(3.5 * i - 2.25);
    }
    const LinearFit fit = linear_least_squares(xs, ys);
    CHECK(fit.slope == Catch::Approx(3.5).margin(1e-12));
    CHECK(fit.intercept == Catch::Approx(-2.25).margin(1e-11));
    CHECK(fit.r_squared == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("r^2 drops for scattered data") {
    const std::vector<double> xs{0, 1, 2, 3, 4, 5};
    const std::vector<double> ys{0.0, 2.0, -1.0, 3.0, 0.5, 1.0};
    const LinearFit fit = linear_least_squares(xs, ys);
    CHECK(fit.r_squared < 0.9);
    CHECK(fit.r_squared >= 0.0);
}
