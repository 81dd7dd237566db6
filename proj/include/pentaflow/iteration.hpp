#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "pentaflow/errors.hpp"
#include "pentaflow/fit.hpp"
#include "pentaflow/invariant.hpp"
#include "pentaflow/pentagram.hpp"
#include "pentaflow/polygon.hpp"

namespace pentaflow {

/// Record of an iterated-map run: one diameter and one invariant-drift entry
/// per recorded state (index 0 is the input), plus a least-squares fit of
/// log(diameter) against step.
struct IterationTrace {
    std::vector<double> diameter;
    std::vector<double> invariant_drift; // |f(V_k)/f(V_0) - 1|
    int steps_completed = 0;             // maps successfully applied
    bool truncated = false;              // degeneracy stopped the run early
    double log_diameter_slope = 0.0;
    double r_squared = 1.0;
};

/// Apply T repeatedly to a convex polygon, recording diameter and invariant
/// drift at every state. Each iterate is recentred at its centroid before
/// the next map (T commutes with translations, and diameters and f do not
/// see the shift; coordinates stay O(diameter) as the iterates collapse).
/// A degeneracy mid-run truncates the trace instead of throwing.
inline IterationTrace iterate_and_measure(const Polygon& poly, int steps) {
    if (!poly.is_convex()) {
        throw InvalidInput("iterate_and_measure: polygon must be convex");
    }
    if (steps < 2) {
        throw InvalidInput("iterate_and_measure: steps >= 2 required");
    }
    IterationTrace trace;
    const double f0 = invariant_f(poly).f_signed;
    Polygon current = poly.translated(Point2{0.0, 0.0} - poly.centroid());

    trace.diameter.push_back(current.diameter());
    trace.invariant_drift.push_back(0.0);
    for (int k = 0; k < steps; ++k) {
        try {
            // invariant_f maps once more internally, so it can also hit the
            // collapse; either failure truncates the trace.
            Polygon next = pentagram_map(current);
            next = next.translated(Point2{0.0, 0.0} - next.centroid());
            const double drift = std::abs(invariant_f(next).f_signed / f0 - 1.0);
            current = std::move(next);
            trace.diameter.push_back(current.diameter());
            trace.invariant_drift.push_back(drift);
            ++trace.steps_completed;
        } catch (const DegeneracyError&) {
            trace.truncated = true;
            break;
        }
    }

    if (trace.diameter.size() >= 2) {
        std::vector<double> xs, ys;
        xs.reserve(trace.diameter.size());
        ys.reserve(trace.diameter.size());
        for (std::size_t k = 0; k < trace.diameter.size(); ++k) {
            xs.push_back(static_cast<double>(k));
            ys.push_back(std::log(trace.diameter[k]));
        }
        const LinearFit fit = linear_least_squares(xs, ys);
        trace.log_diameter_slope = fit.slope;
        trace.r_squared = fit.r_squared;
    }
    return trace;
}

} // namespace pentaflow
