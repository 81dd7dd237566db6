#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "pentaflow/curve.hpp"
#include "support/curves.hpp"
#include "support/fd_oracle.hpp"

using namespace pentaflow;
using testsupport::demo_curve;
using testsupport::demo_curve_b;
using testsupport::unit_circle;

namespace {

// Axis-aligned ellipse (cos 2 pi x, 2 sin 2 pi x): a linear image of the
// circle, with analytic derivatives.
struct EllipseCurve : PeriodicCurve {
    static constexpr double w = 2.0 * std::numbers::pi;
    Point2 eval(double x) const override { return {std::cos(w * x), 2.0 * std::sin(w * x)}; }
    Vec2 d1(double x) const override { return {-w * std::sin(w * x), 2.0 * w * std::cos(w * x)}; }
    Vec2 d2(double x) const override {
        return {-w * w * std::cos(w * x), -2.0 * w * w * std::sin(w * x)};
    }
    Vec2 d3(double x) const override {
        return {w * w * w * std::sin(w * x), -2.0 * w * w * w * std::cos(w * x)};
    }
};

// The given curve pushed through an invertible linear map.
struct LinearImageCurve : PeriodicCurve {
    const PeriodicCurve& base;
    double m00, m01, m10, m11;
    LinearImageCurve(const PeriodicCurve& b, double a, double c, double d, double e)
        : base(b), m00(a), m01(c), m10(d), m11(e) {}
    Vec2 apply(Vec2 v) const { return {m00 * v.x + m01 * v.y, m10 * v.x + m11 * v.y}; }
    Point2 eval(double x) const override { return apply(base.eval(x)); }
    Vec2 d1(double x) const override { return apply(base.d1(x)); }
    Vec2 d2(double x) const override { return apply(base.d2(x)); }
    Vec2 d3(double x) const override { return apply(base.d3(x)); }
};

} // namespace

TEST_CASE("theta advances by exactly one turn per period") {
    const ThetaFourierCurve curve = demo_curve();
    for (double x : {0.0, 0.13, 0.5, 0.77}) {
        CHECK(curve.theta(x + 1.0) - curve.theta(x) ==
              Catch::Approx(2.0 * std::numbers::pi).margin(1e-12));
        CHECK((curve.eval(x + 1.0) - curve.eval(x)).norm() < 1e-12);
    }
}

TEST_CASE("demo curve anchor value at x = 0") {
    // theta(0) = 0.1 + 0.07 sin(pi/3) + 0.1 cos(pi/5)
    const ThetaFourierCurve curve = demo_curve();
    CHECK(curve.theta(0.0) == Catch::Approx(0.24152347770240545).margin(1e-15));
    const Point2 v0 = curve.eval(0.0);
    CHECK(v0.x == Catch::Approx(0.97097471311106798).margin(1e-14));
    CHECK(v0.y == Catch::Approx(0.23918216174890494).margin(1e-14));
}

TEST_CASE("analytic derivatives match the finite-difference oracle") {
    for (const ThetaFourierCurve& curve : {demo_curve(), demo_curve_b()}) {
        for (int s = 0; s < 64; ++s) {
            const double x = (s + 0.31) / 64.0;
            const Vec2 a1 = curve.d1(x), a2 = curve.d2(x), a3 = curve.d3(x);
            CHECK((a1 - testsupport::fd_d1(curve, x)).norm() < 1e-7 * a1.norm());
            CHECK((a2 - testsupport::fd_d2(curve, x)).norm() < 1e-7 * a2.norm());
            CHECK((a3 - testsupport::fd_d3(curve, x)).norm() < 1e-7 * a3.norm());
        }
    }
}

TEST_CASE("W vanishes on the circle and on its linear images") {
    const ThetaFourierCurve circle = unit_circle();
    const EllipseCurve ellipse;
    for (double x : {0.0, 0.2, 0.4, 0.6, 0.8}) {
        CHECK(std::abs(compute_W(circle, x)) < 1e-10);
        CHECK(std::abs(compute_W(ellipse, x)) < 1e-10);
    }
}

TEST_CASE("W of the demo curve matches the finite-difference oracle at 0") {
    const ThetaFourierCurve curve = demo_curve();
    const double analytic = compute_W(curve, 0.0);
    CHECK(analytic == Catch::Approx(-22.581608275170662).margin(1e-9));
    CHECK(std::abs(analytic - testsupport::fd_w(curve, 0.0)) < 1e-6 * std::abs(analytic));
}

TEST_CASE("W equals 3 theta''/theta' for winding-angle curves") {
    // Independent algebraic route: gamma = (cos theta, sin theta) gives
    // det(g', g''') = 3 theta'^2 theta'' and det(g', g'') = theta'^3.
    for (const ThetaFourierCurve& curve : {demo_curve(), demo_curve_b()}) {
        for (double x : {0.05, 0.25, 0.45, 0.7, 0.9}) {
            const double expect = 3.0 * curve.theta_deriv(x, 2) / curve.theta_deriv(x, 1);
            CHECK(compute_W(curve, x) == Catch::Approx(expect).margin(1e-9));
        }
    }
}

TEST_CASE("W is invariant under invertible linear maps") {
    const ThetaFourierCurve curve = demo_curve();
    const LinearImageCurve warped(curve, 1.3, 0.4, -0.2, 0.9);
    for (double x : {0.1, 0.25, 0.5, 0.7}) {
        CHECK(std::abs(compute_W(warped, x) - compute_W(curve, x)) < 1e-10 *
              std::max(1.0, std::abs(compute_W(curve, x))));
    }
}

TEST_CASE("vanishing curvature is reported") {
    // amp = 1, freq = 1, cos: theta'(x) = 2 pi (1 - sin(2 pi x)), zero at x = 1/4.
    const ThetaFourierCurve flat({{1.0, 1, 0.0, FourierTerm::Kind::cos}});
    CHECK_THROWS_AS(compute_W(flat, 0.25), VanishingCurvature);
}

TEST_CASE("sampling the circle gives the regular polygon") {
    const Polygon pent = sample_polygon(unit_circle(), 5);
    const Polygon reg = regular_polygon(5);
    for (int i = 0; i < 5; ++i) CHECK((pent[i] - reg[i]).norm() < 1e-15);
}

TEST_CASE("sample_polygon rejects n < 5 and anchors vertex 0") {
    CHECK_THROWS_AS(sample_polygon(unit_circle(), 4), InvalidInput);
    const Polygon sampled = sample_polygon(demo_curve(), 20);
    REQUIRE(sampled.size() == 20);
    CHECK(sampled[0].x == Catch::Approx(0.97097471311106798).margin(1e-14));
    CHECK(sampled[0].y == Catch::Approx(0.23918216174890494).margin(1e-14));
}

TEST_CASE("bad curve terms are rejected") {
    CHECK_THROWS_AS(ThetaFourierCurve({{0.1, 0, 0.0, FourierTerm::Kind::cos}}), InvalidInput);
    CHECK_THROWS_AS(ThetaFourierCurve({{0.1, -2, 0.0, FourierTerm::Kind::sin}}), InvalidInput);
}
