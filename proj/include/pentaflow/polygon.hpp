#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "pentaflow/errors.hpp"
#include "pentaflow/geometry.hpp"

namespace pentaflow {

/// Cyclic polygon with at least five vertices in general position.
///
/// Validation happens at construction: every vertex finite, every shared
/// coefficient denominator [v_{i-1}-v_{i+1}, v_i-v_{i+2}] nonzero, and no
/// three consecutive vertices collinear (both with the kDetRelTol relative
/// threshold). Convexity is detected but not required; the core algebra only
/// needs general position.
class Polygon {
public:
    explicit Polygon(std::vector<Point2> vertices) : verts_(std::move(vertices)) {
        validate();
    }

    int size() const { return static_cast<int>(verts_.size()); }

    /// Cyclic access: any integer index is reduced mod n.
    Point2 operator[](long long i) const { return verts_[static_cast<std::size_t>(wrap(i))]; }

    const std::vector<Point2>& vertices() const { return verts_; }

    bool is_convex() const { return convex_; }

    /// Max pairwise vertex distance.
    double diameter() const {
        double best = 0.0;
        const int n = size();
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                best = std::max(best, (verts_[j] - verts_[i]).norm());
            }
        }
        return best;
    }

    Point2 centroid() const {
        Vec2 c{0.0, 0.0};
        for (const Point2& p : verts_) c += p;
        return c / static_cast<double>(size());
    }

    Polygon translated(Vec2 t) const {
        std::vector<Point2> out(verts_);
        for (Point2& p : out) p += t;
        return Polygon(std::move(out));
    }

    int wrap(long long i) const {
        const long long n = size();
        long long r = i % n;
        if (r < 0) r += n;
        return static_cast<int>(r);
    }

private:
    void validate() {
        const int n = static_cast<int>(verts_.size());
        if (n < 5) {
            throw InvalidInput("Polygon: n >= 5 required, got n = " + std::to_string(n));
        }
        for (int i = 0; i < n; ++i) {
            if (!verts_[static_cast<std::size_t>(i)].finite()) {
                throw InvalidInput("Polygon: non-finite coordinate at vertex " + std::to_string(i));
            }
        }
        for (int i = 0; i < n; ++i) {
            const Point2 a = (*this)[i - 1];
            const Point2 b = (*this)[i];
            const Point2 c = (*this)[i + 1];
            const Point2 d = (*this)[i + 2];
            if (det_is_degenerate(a - c, b - d)) {
                throw DegeneratePosition("Polygon: coefficient denominator vanishes at index " +
                                         std::to_string(i));
            }
            if (det_is_degenerate(c - b, d - c)) {
                throw DegeneratePosition("Polygon: three consecutive vertices collinear at index " +
                                         std::to_string(i));
            }
        }
        // Sign test is safe here: near-zero turns were rejected above.
        bool pos = false, neg = false;
        for (int i = 0; i < n; ++i) {
            const double turn = det2((*this)[i + 1] - (*this)[i], (*this)[i + 2] - (*this)[i + 1]);
            if (turn > 0.0) pos = true; else neg = true;
        }
        convex_ = !(pos && neg);
    }

    std::vector<Point2> verts_;
    bool convex_ = false;
};

/// Regular n-gon, vertex j at angle phase + 2*pi*j/n on a circle of the
/// given circumradius.
inline Polygon regular_polygon(int n, double circumradius = 1.0, double phase = 0.0) {
    std::vector<Point2> v;
    v.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const double ang = phase + 2.0 * std::numbers::pi * j / n;
        v.push_back({circumradius * std::cos(ang), circumradius * std::sin(ang)});
    }
    return Polygon(std::move(v));
}

} // namespace pentaflow
