#pragma once

#include <utility>
#include <vector>

#include "pentaflow/coefficients.hpp"
#include "pentaflow/errors.hpp"
#include "pentaflow/geometry.hpp"
#include "pentaflow/polygon.hpp"

namespace pentaflow {

/// One application of the pentagram map T.
///
/// Output vertex i is the intersection of the short diagonals
/// (v_{i-1} v_{i+1}) and (v_i v_{i+2}), evaluated through the affine form
/// u_i = a_i v_i + b_i v_{i+2} (one shared denominator per vertex). The
/// generic two-line solver stays available as an independent oracle via
/// vertex_two_ways. The image is re-validated; failures come back as
/// DegenerateImage.
inline Polygon pentagram_map(const Polygon& poly) {
    const int n = poly.size();
    std::vector<Point2> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const CoefficientQuad q = coefficients(poly, i);
        out.push_back(q.a * poly[i] + q.b * poly[i + 2]);
    }
    try {
        return Polygon(std::move(out));
    } catch (const DegeneracyError& e) {
        throw DegenerateImage(std::string("pentagram_map: image degenerate: ") + e.what());
    } catch (const InvalidInput& e) {
        throw DegenerateImage(std::string("pentagram_map: image invalid: ") + e.what());
    }
}

/// The same mapped vertex computed three independent ways:
/// both affine forms of the coefficient quad plus the generic line solver.
struct VertexTriple {
    Point2 affine_ab;     // a_i v_i   + b_i v_{i+2}
    Point2 affine_cd;     // c_i v_{i-1} + d_i v_{i+1}
    Point2 intersection;  // line_intersection oracle
};

inline VertexTriple vertex_two_ways(const Polygon& poly, long long i) {
    const CoefficientQuad q = coefficients(poly, i);
    return VertexTriple{
        q.a * poly[i] + q.b * poly[i + 2],
        q.c * poly[i - 1] + q.d * poly[i + 1],
        line_intersection(poly[i - 1], poly[i + 1], poly[i], poly[i + 2]),
    };
}

} // namespace pentaflow
