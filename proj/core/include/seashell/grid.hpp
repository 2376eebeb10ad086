#pragma once

#include <cstddef>
#include <vector>

#include "seashell/geometry.hpp"

namespace seashell {

/// Tensor lattice over [theta_lo, theta_hi] x [psi_lo, psi_hi], endpoints
/// included. `margin` in (0, 1] shrinks the psi axis about its midpoint, so
/// margin 0.99 on I_a samples 0.99 * I_a and keeps clear of the endpoints
/// where h' is singular.
class Grid {
public:
    /// Throws InvalidParameter on lo >= hi, counts < 2 or margin outside (0, 1].
    Grid(double theta_lo, double theta_hi, double psi_lo, double psi_hi, std::size_t n_theta,
         std::size_t n_psi, double margin = 1.0);

    double theta_lo() const { return theta_lo_; }
    double theta_hi() const { return theta_hi_; }
    double psi_lo() const { return psi_lo_; }
    double psi_hi() const { return psi_hi_; }
    std::size_t n_theta() const { return n_theta_; }
    std::size_t n_psi() const { return n_psi_; }
    double margin() const { return margin_; }
    std::size_t size() const { return n_theta_ * n_psi_; }

    /// Sample coordinates after the margin is applied.
    double theta(std::size_t i) const;
    double psi(std::size_t j) const;

    /// Point (i, j); theta index varies fastest in linear order.
    PolarPoint at(std::size_t i, std::size_t j) const { return {theta(i), psi(j)}; }
    PolarPoint at(std::size_t linear) const { return at(linear % n_theta_, linear / n_theta_); }

    std::vector<PolarPoint> points() const;

    Grid with_margin(double margin) const;
    Grid with_counts(std::size_t n_theta, std::size_t n_psi) const;
    Grid shifted(double d_theta, double d_psi) const;

private:
    static double lerp(double lo, double hi, double margin, std::size_t i, std::size_t n);

    double theta_lo_;
    double theta_hi_;
    double psi_lo_;
    double psi_hi_;
    std::size_t n_theta_;
    std::size_t n_psi_;
    double margin_;
};

}  // namespace seashell
