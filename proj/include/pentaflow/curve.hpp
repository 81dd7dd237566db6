#pragma once

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "pentaflow/errors.hpp"
#include "pentaflow/geometry.hpp"
#include "pentaflow/polygon.hpp"

namespace pentaflow {

/// Smooth closed plane curve with period exactly 1 in the parameter,
/// exposing analytic derivatives through order three.
class PeriodicCurve {
public:
    virtual ~PeriodicCurve() = default;
    virtual Point2 eval(double x) const = 0;
    virtual Vec2 d1(double x) const = 0;
    virtual Vec2 d2(double x) const = 0;
    virtual Vec2 d3(double x) const = 0;
};

/// One trigonometric term of a winding-angle profile:
/// amplitude * kind(2*pi*frequency*x + phase).
struct FourierTerm {
    enum class Kind { cos, sin };
    double amplitude = 0.0;
    int frequency = 1;
    double phase = 0.0;
    Kind kind = Kind::cos;
};

/// Unit-circle curve driven by a perturbed winding angle:
///   gamma(x) = (cos theta(x), sin theta(x)),
///   theta(x) = 2*pi*x + sum of the terms.
/// theta(x+1) - theta(x) = 2*pi exactly (every term has integer frequency),
/// so the curve closes with winding number one. Derivatives come from the
/// third-order chain rule on theta; no finite differences anywhere.
class ThetaFourierCurve : public PeriodicCurve {
public:
    ThetaFourierCurve() = default;
    explicit ThetaFourierCurve(std::vector<FourierTerm> terms) : terms_(std::move(terms)) {
        for (const FourierTerm& t : terms_) {
            if (t.frequency < 1) {
                throw InvalidInput("ThetaFourierCurve: frequencies must be positive integers");
            }
        }
    }

    const std::vector<FourierTerm>& terms() const { return terms_; }

    double theta(double x) const {
        double s = 2.0 * std::numbers::pi * x;
        for (const FourierTerm& t : terms_) s += t.amplitude * wave(t, x, 0);
        return s;
    }

    /// Derivative of theta of the given order (1..3).
    double theta_deriv(double x, int order) const {
        double s = (order == 1) ? 2.0 * std::numbers::pi : 0.0;
        for (const FourierTerm& t : terms_) {
            const double w = 2.0 * std::numbers::pi * t.frequency;
            s += t.amplitude * std::pow(w, order) * wave(t, x, order);
        }
        return s;
    }

    Point2 eval(double x) const override {
        const double th = theta(x);
        return {std::cos(th), std::sin(th)};
    }

    Vec2 d1(double x) const override {
        const Frame f = frame(x);
        return f.t1 * f.tangent;
    }

    Vec2 d2(double x) const override {
        const Frame f = frame(x);
        return f.t2 * f.tangent - (f.t1 * f.t1) * f.radial;
    }

    Vec2 d3(double x) const override {
        const Frame f = frame(x);
        return (f.t3 - f.t1 * f.t1 * f.t1) * f.tangent - 3.0 * f.t1 * f.t2 * f.radial;
    }

private:
    struct Frame {
        Vec2 radial;  // ( cos theta, sin theta)
        Vec2 tangent; // (-sin theta, cos theta)
        double t1, t2, t3;
    };

    Frame frame(double x) const {
        const double th = theta(x);
        return Frame{{std::cos(th), std::sin(th)},
                     {-std::sin(th), std::cos(th)},
                     theta_deriv(x, 1),
                     theta_deriv(x, 2),
                     theta_deriv(x, 3)};
    }

    // kind(arg) differentiated `order` times, without the inner-frequency factor.
    static double wave(const FourierTerm& t, double x, int order) {
        const double arg = 2.0 * std::numbers::pi * t.frequency * x + t.phase;
        const bool is_cos = t.kind == FourierTerm::Kind::cos;
        switch (order & 3) {
            case 0: return is_cos ? std::cos(arg) : std::sin(arg);
            case 1: return is_cos ? -std::sin(arg) : std::cos(arg);
            case 2: return is_cos ? -std::cos(arg) : -std::sin(arg);
            default: return is_cos ? std::sin(arg) : -std::cos(arg);
        }
    }

    std::vector<FourierTerm> terms_;
};

/// W = det(gamma', gamma''') / det(gamma', gamma'').
/// Invariant under invertible linear maps of the plane; identically zero on
/// the circle. Throws VanishingCurvature when the denominator is below
/// 1e-14 * |gamma'|^3 (the denominator's natural scale).
inline double compute_W(const PeriodicCurve& curve, double x) {
    const Vec2 g1 = curve.d1(x);
    const Vec2 g2 = curve.d2(x);
    const Vec2 g3 = curve.d3(x);
    const double den = det2(g1, g2);
    const double s = g1.norm();
    if (std::abs(den) <= 1e-14 * s * s * s) {
        throw VanishingCurvature("compute_W: det(gamma', gamma'') vanishes");
    }
    return det2(g1, g3) / den;
}

/// Inscribe an n-gon: vertex i = gamma(i/n). The sample is validated like
/// any other polygon.
inline Polygon sample_polygon(const PeriodicCurve& curve, int n) {
    if (n < 5) {
        throw InvalidInput("sample_polygon: n >= 5 required");
    }
    std::vector<Point2> verts;
    verts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        verts.push_back(curve.eval(static_cast<double>(i) / n));
    }
    return Polygon(std::move(verts));
}

} // namespace pentaflow
