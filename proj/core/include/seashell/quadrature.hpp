#pragma once

#include <cstddef>
#include <functional>

namespace seashell {

struct QuadratureOptions {
    /// Accept a panel once its Gauss/Kronrod difference is below this.
    double panel_tolerance{1e-13};
    /// Total number of panels evaluated before giving up.
    std::size_t max_panels{10'000};
};

struct QuadratureResult {
    double value{0.0};
    double error_estimate{0.0};
    std::size_t panels{0};
};

/// Adaptive bisection with a 7/15-point Gauss-Kronrod pair on each panel.
/// Only panel-local error estimates are used, so integrands with square-root
/// endpoint behaviour converge by repeated bisection toward the singularity.
/// `lo > hi` is allowed and yields the negated integral.
///
/// Throws ConvergenceError when the panel budget is exhausted.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                                    const QuadratureOptions& opts = {});

}  // namespace seashell
