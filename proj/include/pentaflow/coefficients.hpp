#pragma once

#include <cmath>
#include <string>

#include "pentaflow/errors.hpp"
#include "pentaflow/geometry.hpp"
#include "pentaflow/polygon.hpp"

namespace pentaflow {

/// The four barycentric-style weights attached to vertex i of a polygon.
/// They express the mapped vertex u_i two ways:
///   u_i = a*v_i + b*v_{i+2} = c*v_{i-1} + d*v_{i+1},  a + b = c + d = 1.
/// All four are ratios of 2x2 determinants sharing one denominator, hence
/// invariant under any invertible affine map of the polygon.
struct CoefficientQuad {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
};

/// Coefficient quad at cyclic index i.
/// Throws DegeneratePosition when the shared denominator
/// [v_{i-1}-v_{i+1}, v_i-v_{i+2}] vanishes.
inline CoefficientQuad coefficients(const Polygon& poly, long long i) {
    const Point2 vm1 = poly[i - 1];
    const Point2 v0 = poly[i];
    const Point2 v1 = poly[i + 1];
    const Point2 v2 = poly[i + 2];

    const Vec2 e13 = vm1 - v1; // v_{i-1} - v_{i+1}
    const Vec2 e24 = v0 - v2;  // v_i     - v_{i+2}
    const double den = det2(e13, e24);
    if (std::abs(den) <= kDetRelTol * e13.norm() * e24.norm()) {
        throw DegeneratePosition("coefficients: denominator vanishes at index " +
                                 std::to_string(poly.wrap(i)));
    }
    return CoefficientQuad{
        det2(e13, v1 - v2) / den,
        det2(vm1 - v0, v0 - v1) / den,
        det2(v0 - v1, v1 - v2) / den,
        det2(vm1 - v0, e24) / den,
    };
}

} // namespace pentaflow
