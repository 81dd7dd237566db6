#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "pentaflow/errors.hpp"

namespace pentaflow {

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 1.0;
};

/// Ordinary least squares y = slope*x + intercept with coefficient of
/// determination. Constant data (zero total variance) is reported as a
/// perfect fit (r_squared = 1) so that flat residual curves come out as
/// slope 0 rather than 0/0.
inline LinearFit linear_least_squares(std::span<const double> xs, std::span<const double> ys) {
    const std::size_t m = xs.size();
    if (m < 2 || ys.size() != m) {
        throw InsufficientData("linear_least_squares: need at least two matched points");
    }
    double sx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        sx += xs[i];
        sy += ys[i];
    }
    const double mx = sx / static_cast<double>(m);
    const double my = sy / static_cast<double>(m);
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double dx = xs[i] - mx;
        const double dy = ys[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0) {
        throw InsufficientData("linear_least_squares: abscissae are all equal");
    }
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    if (syy > 0.0) {
        double ss_res = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const double r = ys[i] - (fit.slope * xs[i] + fit.intercept);
            ss_res += r * r;
        }
        fit.r_squared = 1.0 - ss_res / syy;
    }
    return fit;
}

/// Slope/intercept/r^2 of ln(residual) against ln(n). The slope estimates -p
/// for a residual behaving like C * n^(-p).
struct ConvergenceFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 1.0;
};

inline ConvergenceFit fit_convergence(std::span<const std::pair<double, double>> pairs) {
    if (pairs.size() < 3) {
        throw InsufficientData("fit_convergence: need at least three (n, residual) pairs");
    }
    std::vector<double> lx, ly;
    lx.reserve(pairs.size());
    ly.reserve(pairs.size());
    for (const auto& [n, residual] : pairs) {
        if (!(residual > 0.0)) {
            throw NonPositiveResidual("fit_convergence: residuals must be positive");
        }
        lx.push_back(std::log(n));
        ly.push_back(std::log(residual));
    }
    for (std::size_t i = 0; i < lx.size(); ++i) {
        for (std::size_t j = i + 1; j < lx.size(); ++j) {
            if (lx[i] == lx[j]) {
                throw InsufficientData("fit_convergence: n values must be distinct");
            }
        }
    }
    const LinearFit f = linear_least_squares(lx, ly);
    return ConvergenceFit{f.slope, f.intercept, f.r_squared};
}

inline ConvergenceFit fit_convergence(const std::vector<std::pair<double, double>>& pairs) {
    return fit_convergence(std::span<const std::pair<double, double>>(pairs));
}

} // namespace pentaflow
