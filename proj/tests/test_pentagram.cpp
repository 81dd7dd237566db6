#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "pentaflow/pentagram.hpp"
#include "pentaflow/random_polygon.hpp"

using namespace pentaflow;

TEST_CASE("pentagon maps to a pentagon rotated by pi/5, radius 1/phi^2") {
    const Polygon pent = regular_polygon(5, 1.0, std::numbers::pi / 2.0);
    const Polygon image = pentagram_map(pent);
    REQUIRE(image.size() == 5);
    const double expected_r = 0.38196601125010515; // 1/phi^2
    for (int i = 0; i < 5; ++i) {
        CHECK(image[i].norm() == Catch::Approx(expected_r).margin(1e-12));
        const double got = std::atan2(image[i].y, image[i].x);
        const double want = std::numbers::pi / 2.0 + 2.0 * std::numbers::pi * i / 5.0 +
                            std::numbers::pi / 5.0;
        CHECK(std::remainder(got - want, 2.0 * std::numbers::pi) ==
              Catch::Approx(0.0).margin(1e-12));
    }
}

TEST_CASE("hexagon maps to a hexagon rotated by pi/6, radius sqrt(3)/3") {
    const Polygon image = pentagram_map(regular_polygon(6));
    for (int i = 0; i < 6; ++i) {
        CHECK(image[i].norm() == Catch::Approx(std::sqrt(3.0) / 3.0).margin(1e-12));
    }
    CHECK(std::atan2(image[0].y, image[0].x) ==
          Catch::Approx(std::numbers::pi / 6.0).margin(1e-12));
}

TEST_CASE("affine formulas agree with the line-intersection oracle") {
    SECTION("hexagon, i = 0") {
        const VertexTriple t = vertex_two_ways(regular_polygon(6), 0);
        CHECK((t.affine_ab - t.affine_cd).norm() < 1e-12);
        CHECK((t.affine_ab - t.intersection).norm() < 1e-12);
    }
    SECTION("pentagon, i = 2") {
        const VertexTriple t = vertex_two_ways(regular_polygon(5), 2);
        CHECK((t.affine_ab - t.affine_cd).norm() < 1e-12);
        CHECK((t.affine_ab - t.intersection).norm() < 1e-12);
    }
    SECTION("seeded random convex 12-gon, all i") {
        const Polygon poly = random_convex_polygon(12, 42);
        const double diam = poly.diameter();
        for (int i = 0; i < poly.size(); ++i) {
            const VertexTriple t = vertex_two_ways(poly, i);
            CHECK((t.affine_ab - t.affine_cd).norm() < 1e-10 * diam);
            CHECK((t.affine_ab - t.intersection).norm() < 1e-10 * diam);
        }
    }
}

TEST_CASE("pentagram map matches the oracle vertexwise") {
    const Polygon poly = random_convex_polygon(9, 5);
    const Polygon image = pentagram_map(poly);
    for (int i = 0; i < poly.size(); ++i) {
        CHECK((image[i] - vertex_two_ways(poly, i).intersection).norm() <
              1e-12 * poly.diameter());
    }
}

TEST_CASE("map commutes with similarity transforms") {
    SplitMix64 rng(7);
    for (int n : {5, 8, 13, 20}) {
        const Polygon poly = random_convex_polygon(n, 300 + static_cast<std::uint64_t>(n));
        const double ang = rng.uniform(0.0, 2.0 * std::numbers::pi);
        const double s = rng.uniform(0.1, 10.0);
        const Vec2 t{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
        const double c = std::cos(ang), si = std::sin(ang);
        const auto transform = [&](Point2 p) {
            return Point2{s * (c * p.x - si * p.y) + t.x, s * (si * p.x + c * p.y) + t.y};
        };

        std::vector<Point2> mapped_first;
        for (const Point2& p : pentagram_map(poly).vertices()) mapped_first.push_back(transform(p));

        std::vector<Point2> transformed;
        for (const Point2& p : poly.vertices()) transformed.push_back(transform(p));
        const Polygon transformed_then_mapped = pentagram_map(Polygon(transformed));

        const double scale = transformed_then_mapped.diameter();
        for (int i = 0; i < n; ++i) {
            CHECK((mapped_first[static_cast<std::size_t>(i)] - transformed_then_mapped[i]).norm() <
                  1e-10 * scale);
        }
    }
}

TEST_CASE("iterating to collapse reports a degenerate image") {
    Polygon poly = regular_polygon(5);
    bool hit = false;
    for (int k = 0; k < 2000; ++k) {
        try {
            poly = pentagram_map(poly);
        } catch (const DegenerateImage&) {
            hit = true;
            break;
        }
    }
    CHECK(hit);
}
