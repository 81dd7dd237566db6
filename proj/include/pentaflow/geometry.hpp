#pragma once

#include <cmath>
#include <string>

#include "pentaflow/errors.hpp"

namespace pentaflow {

/// Plain 2D vector / point, double precision.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2() = default;
    constexpr Vec2(double px, double py) : x(px), y(py) {}

    constexpr Vec2 operator+(Vec2 r) const { return {x + r.x, y + r.y}; }
    constexpr Vec2 operator-(Vec2 r) const { return {x - r.x, y - r.y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
    friend constexpr Vec2 operator*(double s, Vec2 v) { return {v.x * s, v.y * s}; }
    Vec2& operator+=(Vec2 r) { x += r.x; y += r.y; return *this; }
    Vec2& operator-=(Vec2 r) { x -= r.x; y -= r.y; return *this; }

    constexpr double dot(Vec2 r) const { return x * r.x + y * r.y; }
    double norm() const { return std::hypot(x, y); }
    bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

using Point2 = Vec2;

/// 2x2 determinant [u, v] = u.x v.y - u.y v.x.
constexpr double det2(Vec2 u, Vec2 v) { return u.x * v.y - u.y * v.x; }

/// Relative degeneracy threshold for determinant tests: a determinant whose
/// magnitude is below 1e-14 times the product of its operands' norms is
/// treated as zero.
inline constexpr double kDetRelTol = 1e-14;

inline bool det_is_degenerate(Vec2 u, Vec2 v) {
    return std::abs(det2(u, v)) <= kDetRelTol * u.norm() * v.norm();
}

/// Intersection of the infinite lines through (p1, p2) and (q1, q2).
/// Throws ParallelLines when the direction determinant is below
/// kDetRelTol times the product of the segment lengths.
inline Point2 line_intersection(Point2 p1, Point2 p2, Point2 q1, Point2 q2) {
    const Vec2 dp = p2 - p1;
    const Vec2 dq = q2 - q1;
    const double den = det2(dp, dq);
    if (std::abs(den) <= kDetRelTol * dp.norm() * dq.norm()) {
        throw ParallelLines("line_intersection: lines are parallel or degenerate");
    }
    const double t = det2(q1 - p1, dq) / den;
    return p1 + t * dp;
}

/// Signed length of the displacement a - b measured along the unit direction
/// of the line origin -> direction_end. Both a and b must lie on that line;
/// transverse deviation beyond 1e-9 times the segment length throws
/// NotCollinear. Ratios of these lengths on one line are independent of the
/// direction convention.
inline double signed_length(Point2 origin, Point2 direction_end, Point2 a, Point2 b) {
    const Vec2 dir = direction_end - origin;
    const double len = dir.norm();
    if (len == 0.0) {
        throw InvalidInput("signed_length: zero-length direction");
    }
    const Vec2 u{dir.x / len, dir.y / len};
    const double tol = 1e-9 * len;
    for (const Point2 p : {a, b}) {
        if (std::abs(det2(u, p - origin)) > tol) {
            throw NotCollinear("signed_length: point is off the reference line");
        }
    }
    return (a - b).dot(u);
}

} // namespace pentaflow
