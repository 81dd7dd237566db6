#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "pentaflow/errors.hpp"
#include "pentaflow/polygon.hpp"

namespace pentaflow {

/// splitmix64: tiny deterministic PRNG, identical output on every platform
/// (std::uniform_real_distribution is implementation-defined, which would
/// break byte-identical golden files).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

private:
    std::uint64_t state_;
};

/// Seeded random convex n-gon.
///
/// Sorted uniform angles on the circle (with a minimum angular gap of
/// 0.1 * 2pi/n, rejected otherwise) are paired with radii from a smooth
/// random convex profile r(phi) = 0.75 + sum_k a_k cos(k phi + psi_k),
/// a_k ~ U[0, 0.1/k^2], k = 1..4. Points in cyclic order on a strictly
/// convex curve give a convex polygon, so acceptance stays O(1) at every n
/// (independent per-vertex radii make convexity astronomically rare beyond
/// n ~ 10). Radii land inside [0.61, 0.89]. Samples failing validation or
/// convexity are redrawn.
inline Polygon random_convex_polygon(int n, std::uint64_t seed) {
    if (n < 5) {
        throw InvalidInput("random_convex_polygon: n >= 5 required");
    }
    constexpr double two_pi = 2.0 * std::numbers::pi;
    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<double> angles(static_cast<std::size_t>(n));
        for (double& a : angles) a = rng.uniform(0.0, two_pi);
        std::sort(angles.begin(), angles.end());

        const double min_gap = 0.1 * two_pi / n;
        bool gaps_ok = true;
        for (int i = 0; i < n; ++i) {
            const double next = (i + 1 < n) ? angles[static_cast<std::size_t>(i + 1)]
                                            : angles[0] + two_pi;
            if (next - angles[static_cast<std::size_t>(i)] < min_gap) {
                gaps_ok = false;
                break;
            }
        }
        if (!gaps_ok) continue;

        double amp[4], phase[4];
        for (int k = 0; k < 4; ++k) {
            amp[k] = rng.uniform(0.0, 0.1 / ((k + 1.0) * (k + 1.0)));
            phase[k] = rng.uniform(0.0, two_pi);
        }
        std::vector<Point2> verts;
        verts.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            const double phi = angles[static_cast<std::size_t>(i)];
            double r = 0.75;
            for (int k = 0; k < 4; ++k) r += amp[k] * std::cos((k + 1) * phi + phase[k]);
            verts.push_back({r * std::cos(phi), r * std::sin(phi)});
        }
        try {
            Polygon candidate(std::move(verts));
            if (candidate.is_convex()) return candidate;
        } catch (const Error&) {
            // redraw
        }
    }
    throw DegeneratePosition("random_convex_polygon: no valid sample after 10000 attempts");
}

} // namespace pentaflow
