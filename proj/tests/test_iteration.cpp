#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "pentaflow/iteration.hpp"
#include "pentaflow/random_polygon.hpp"

using namespace pentaflow;

TEST_CASE("regular pentagon shrinks by 1/phi^2 every step") {
    const IterationTrace trace = iterate_and_measure(regular_polygon(5), 10);
    REQUIRE(trace.steps_completed == 10);
    REQUIRE_FALSE(trace.truncated);
    for (int k = 1; k <= 10; ++k) {
        const double ratio = trace.diameter[static_cast<std::size_t>(k)] /
                             trace.diameter[static_cast<std::size_t>(k - 1)];
        CHECK(ratio == Catch::Approx(0.38196601125010515).margin(1e-9));
    }
    CHECK(trace.log_diameter_slope == Catch::Approx(-0.96242365011920705).margin(1e-6));
    CHECK(trace.r_squared > 0.999999);
}

TEST_CASE("regular hexagon shrinks by sqrt(3)/3 every step") {
    const IterationTrace trace = iterate_and_measure(regular_polygon(6), 10);
    for (int k = 1; k <= 10; ++k) {
        const double ratio = trace.diameter[static_cast<std::size_t>(k)] /
                             trace.diameter[static_cast<std::size_t>(k - 1)];
        CHECK(ratio == Catch::Approx(0.57735026918962573).margin(1e-9));
    }
    CHECK(trace.log_diameter_slope == Catch::Approx(-0.54930614433405489).margin(1e-6));
}

TEST_CASE("seeded random 10-gon: 30 steps, log-diameter close to linear") {
    const IterationTrace trace = iterate_and_measure(random_convex_polygon(10, 3), 30);
    REQUIRE(trace.steps_completed == 30);
    CHECK(trace.r_squared > 0.99);
    CHECK(trace.log_diameter_slope < 0.0);
}

TEST_CASE("diameter decreases strictly along every trace") {
    for (int n : {5, 10, 17}) {
        const IterationTrace trace =
            iterate_and_measure(random_convex_polygon(n, 60 + static_cast<std::uint64_t>(n)), 12);
        for (std::size_t k = 1; k < trace.diameter.size(); ++k) {
            CHECK(trace.diameter[k] < trace.diameter[k - 1]);
        }
    }
}

TEST_CASE("invariant drift grows at most linearly: 1e-9 per step") {
    const IterationTrace trace = iterate_and_measure(random_convex_polygon(12, 5), 10);
    for (std::size_t k = 1; k < trace.invariant_drift.size(); ++k) {
        CHECK(trace.invariant_drift[k] < 1e-9 * static_cast<double>(k));
    }
}

TEST_CASE("preconditions: convexity and steps >= 2") {
    std::vector<Point2> dented = regular_polygon(7).vertices();
    dented[2] = dented[2] * 0.05;
    CHECK_THROWS_AS(iterate_and_measure(Polygon(dented), 10), InvalidInput);
    CHECK_THROWS_AS(iterate_and_measure(regular_polygon(6), 1), InvalidInput);
}

TEST_CASE("collapse truncates the trace instead of throwing") {
    const IterationTrace trace = iterate_and_measure(regular_polygon(5), 5000);
    CHECK(trace.truncated);
    CHECK(trace.steps_completed >= 100);
    CHECK(trace.steps_completed < 5000);
    CHECK(trace.diameter.size() == static_cast<std::size_t>(trace.steps_completed) + 1);
}
