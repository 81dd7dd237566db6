#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "pentaflow/coefficients.hpp"
#include "pentaflow/errors.hpp"
#include "pentaflow/geometry.hpp"
#include "pentaflow/pentagram.hpp"
#include "pentaflow/polygon.hpp"

namespace pentaflow {

/// The cross-ratio product f(V) computed along two independent routes.
///
/// f_signed multiplies per-vertex factors of signed distances taken on the
/// diagonal line (v_{i-1} v_{i+1}), which carries the four points v_{i-1},
/// u_{i-1}, u_i, v_{i+1}. f_coeff multiplies b_{i-1} c_i / (a_{i-1} d_i).
/// The two are algebraically identical; comparing them is a cheap
/// end-to-end cross-check of the whole coefficient pipeline.
struct InvariantReport {
    double f_signed = 1.0;
    double f_coeff = 1.0;
    std::vector<double> factors; // per-vertex signed-distance factors X_i
};

inline InvariantReport invariant_f(const Polygon& poly) {
    const Polygon image = pentagram_map(poly);
    const int n = poly.size();
    InvariantReport report;
    report.factors.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const Point2 vm1 = poly[i - 1];
        const Point2 vp1 = poly[i + 1];
        const Point2 um1 = image[i - 1];
        const Point2 u0 = image[i];
        const double num = signed_length(vm1, vp1, vm1, um1) * signed_length(vm1, vp1, u0, vp1);
        const double den = signed_length(vm1, vp1, vm1, u0) * signed_length(vm1, vp1, um1, vp1);
        const double factor = num / den;
        if (!std::isfinite(factor) || factor == 0.0) {
            throw DegeneratePosition("invariant_f: degenerate cross-ratio factor at index " +
                                     std::to_string(i));
        }
        report.factors.push_back(factor);
        report.f_signed *= factor;

        const CoefficientQuad qm1 = coefficients(poly, i - 1);
        const CoefficientQuad qi = coefficients(poly, i);
        report.f_coeff *= (qm1.b * qi.c) / (qm1.a * qi.d);
    }
    return report;
}

/// |f(T(V)) / f(V) - 1|, the relative drift of the invariant under one map.
inline double check_invariance(const Polygon& poly) {
    const double f0 = invariant_f(poly).f_signed;
    const double f1 = invariant_f(pentagram_map(poly)).f_signed;
    return std::abs(f1 / f0 - 1.0);
}

/// Residuals of the two ratio-transport identities relating quads of T(V)
/// at index i to quads of V:
///   first:  |c(T,i)/a(T,i) - c_i/a_{i-1}|
///   second: |b(T,i)/d(T,i) - b_{i+1}/d_{i+2}|
inline std::pair<double, double> ratio_transport_check(const Polygon& poly, long long i) {
    const Polygon image = pentagram_map(poly);
    const CoefficientQuad qt = coefficients(image, i);
    const CoefficientQuad qm1 = coefficients(poly, i - 1);
    const CoefficientQuad qi = coefficients(poly, i);
    const CoefficientQuad qp1 = coefficients(poly, i + 1);
    const CoefficientQuad qp2 = coefficients(poly, i + 2);
    return {
        std::abs(qt.c / qt.a - qi.c / qm1.a),
        std::abs(qt.b / qt.d - qp1.b / qp2.d),
    };
}

/// Residual of the exact closed form for the mapped b-coefficient:
///   b(T,i) = (d_i - b_{i-1}) b_{i+1} / (a_{i-1} d_{i+2} - b_{i+1} c_i).
/// This identity is exact, not asymptotic.
inline double mapped_coefficient_identity(const Polygon& poly, long long i) {
    const Polygon image = pentagram_map(poly);
    const CoefficientQuad qt = coefficients(image, i);
    const CoefficientQuad qm1 = coefficients(poly, i - 1);
    const CoefficientQuad qi = coefficients(poly, i);
    const CoefficientQuad qp1 = coefficients(poly, i + 1);
    const CoefficientQuad qp2 = coefficients(poly, i + 2);
    const double den = qm1.a * qp2.d - qp1.b * qi.c;
    if (den == 0.0) {
        throw DegeneratePosition("mapped_coefficient_identity: identity denominator vanishes");
    }
    const double predicted = (qi.d - qm1.b) * qp1.b / den;
    return std::abs(qt.b - predicted);
}

} // namespace pentaflow
