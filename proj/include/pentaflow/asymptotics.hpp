#pragma once

#include <cmath>
#include <variant>
#include <vector>

#include "pentaflow/coefficients.hpp"
#include "pentaflow/curve.hpp"
#include "pentaflow/errors.hpp"
#include "pentaflow/geometry.hpp"
#include "pentaflow/pentagram.hpp"
#include "pentaflow/polygon.hpp"

namespace pentaflow {

/// Which asymptotic claim a record measures.
enum class ClaimKind { coeff_b, coeff_c, t_stability, evolution, p_point, corollary35 };

/// Right-hand side selector for the limiting-flow comparisons:
/// corrected -> (3/4) gamma'' - (1/8) W gamma'
/// schwartz  ->       gamma'' - (2/3) W gamma'
enum class FlowRhs { corrected, schwartz };

/// One residual measurement of an asymptotic claim at a single (n, i).
/// lhs and predicted are scalars for the coefficient kinds and 2-vectors for
/// the flow kinds; residual is |lhs - predicted| resp. its Euclidean norm.
struct AsymptoticsRecord {
    int n = 0;
    int index = 0;
    ClaimKind kind = ClaimKind::coeff_b;
    std::variant<double, Vec2> lhs;
    std::variant<double, Vec2> predicted;
    double residual = 0.0;
};

namespace detail {

inline AsymptoticsRecord scalar_record(int n, int i, ClaimKind kind, double lhs, double predicted) {
    return AsymptoticsRecord{n, i, kind, lhs, predicted, std::abs(lhs - predicted)};
}

inline AsymptoticsRecord vector_record(int n, int i, ClaimKind kind, Vec2 lhs, Vec2 predicted) {
    return AsymptoticsRecord{n, i, kind, lhs, predicted, (lhs - predicted).norm()};
}

inline Vec2 flow_rhs(const PeriodicCurve& curve, double x, FlowRhs variant) {
    const Vec2 g1 = curve.d1(x);
    const Vec2 g2 = curve.d2(x);
    const double w = compute_W(curve, x);
    if (variant == FlowRhs::corrected) {
        return 0.75 * g2 - 0.125 * w * g1;
    }
    return g2 - (2.0 / 3.0) * w * g1;
}

} // namespace detail

/// Residuals of the sampled b- and c-coefficients at index i+k against their
/// first-order expansions 1/4 - W/(8n) and 1/4 - W/(16n), with W evaluated
/// at the base point x = i/n. k must be an integer shift (sampled polygons
/// have no vertices in between).
inline std::pair<AsymptoticsRecord, AsymptoticsRecord> coefficient_asymptotics(
    const PeriodicCurve& curve, int n, int i, int k = 0) {
    const Polygon poly = sample_polygon(curve, n);
    const int j = poly.wrap(i + k);
    const CoefficientQuad q = coefficients(poly, j);
    const double x = static_cast<double>(poly.wrap(i)) / n;
    const double w = compute_W(curve, x);
    return {
        detail::scalar_record(n, j, ClaimKind::coeff_b, q.b, 0.25 - w / (8.0 * n)),
        detail::scalar_record(n, j, ClaimKind::coeff_c, q.c, 0.25 - w / (16.0 * n)),
    };
}

/// How much one application of T moves a coefficient:
/// |coeff(T(V), i) - coeff(V, i)| for the chosen member of the quad.
enum class CoefficientName { a, b, c, d };

inline AsymptoticsRecord t_stability(const PeriodicCurve& curve, int n, int i,
                                     CoefficientName which = CoefficientName::b) {
    const Polygon poly = sample_polygon(curve, n);
    const Polygon image = pentagram_map(poly);
    const CoefficientQuad before = coefficients(poly, i);
    const CoefficientQuad after = coefficients(image, i);
    const auto pick = [which](const CoefficientQuad& q) {
        switch (which) {
            case CoefficientName::a: return q.a;
            case CoefficientName::b: return q.b;
            case CoefficientName::c: return q.c;
            default: return q.d;
        }
    };
    return detail::scalar_record(n, poly.wrap(i), ClaimKind::t_stability, pick(after), pick(before));
}

/// Finite-n version of the limiting-flow quotient:
///   lhs       = n^2 (T^2(V) vertex (i-1) - v_i)
///   predicted = the selected right-hand side at x = i/n.
inline AsymptoticsRecord evolution_residual(const PeriodicCurve& curve, int n, int i,
                                            FlowRhs variant = FlowRhs::corrected) {
    const Polygon poly = sample_polygon(curve, n);
    const Polygon twice = pentagram_map(pentagram_map(poly));
    const int j = poly.wrap(i);
    const double x = static_cast<double>(j) / n;
    const Vec2 lhs = static_cast<double>(n) * n * (twice[j - 1] - poly[j]);
    return detail::vector_record(n, j, ClaimKind::evolution, lhs,
                                 detail::flow_rhs(curve, x, variant));
}

/// Intersection p_i of the long diagonals (v_{i-2} v_{i+1}) and
/// (v_{i-1} v_{i+2}).
inline Point2 schwartz_p_point(const Polygon& poly, long long i) {
    return line_intersection(poly[i - 2], poly[i + 1], poly[i - 1], poly[i + 2]);
}

/// Residual of n^2 (p_i - gamma(i/n)) against gamma'' - (2/3) W gamma'.
inline AsymptoticsRecord p_point_residual(const PeriodicCurve& curve, int n, int i) {
    const Polygon poly = sample_polygon(curve, n);
    const int j = poly.wrap(i);
    const double x = static_cast<double>(j) / n;
    const Vec2 lhs = static_cast<double>(n) * n * (schwartz_p_point(poly, j) - curve.eval(x));
    return detail::vector_record(n, j, ClaimKind::p_point, lhs,
                                 detail::flow_rhs(curve, x, FlowRhs::schwartz));
}

/// Residual of the claimed relation between the twice-mapped vertex and p_i:
///   T^2(V) vertex (i-1) = p_i - gamma''/(4n^2) + 13 W gamma'/(24 n^2) + tail.
/// lhs = T^2 vertex (i-1) - p_i, predicted = the 1/n^2 correction.
inline AsymptoticsRecord corollary35_residual(const PeriodicCurve& curve, int n, int i) {
    const Polygon poly = sample_polygon(curve, n);
    const Polygon twice = pentagram_map(pentagram_map(poly));
    const int j = poly.wrap(i);
    const double x = static_cast<double>(j) / n;
    const double n2 = static_cast<double>(n) * n;
    const Vec2 g1 = curve.d1(x);
    const Vec2 g2 = curve.d2(x);
    const double w = compute_W(curve, x);
    const Vec2 lhs = twice[j - 1] - schwartz_p_point(poly, j);
    const Vec2 predicted = (13.0 * w / 24.0) * g1 / n2 - g2 / (4.0 * n2);
    return detail::vector_record(n, j, ClaimKind::corollary35, lhs, predicted);
}

/// One row of the figure tables: parameter, |n^2 T^2 vertex (i-1)|, and
/// |n^2 gamma + RHS| for the chosen right-hand side.
struct FigureRow {
    double x = 0.0;
    double mapped_norm = 0.0;    // |n^2 * T^2(V) vertex (i-1)|
    double predicted_norm = 0.0; // |n^2 gamma(x) + RHS(x)|
};

inline std::vector<FigureRow> figure_data(const PeriodicCurve& curve, int n, FlowRhs variant) {
    const Polygon poly = sample_polygon(curve, n);
    const Polygon twice = pentagram_map(pentagram_map(poly));
    const double n2 = static_cast<double>(n) * n;
    std::vector<FigureRow> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double x = static_cast<double>(i) / n;
        rows.push_back(FigureRow{
            x,
            n2 * twice[i - 1].norm(),
            (n2 * curve.eval(x) + detail::flow_rhs(curve, x, variant)).norm(),
        });
    }
    return rows;
}

} // namespace pentaflow
