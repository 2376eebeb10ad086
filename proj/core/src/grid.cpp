#include "seashell/grid.hpp"

#include <cmath>

#include "seashell/errors.hpp"

namespace seashell {

Grid::Grid(double theta_lo, double theta_hi, double psi_lo, double psi_hi, std::size_t n_theta,
           std::size_t n_psi, double margin)
    : theta_lo_(theta_lo),
      theta_hi_(theta_hi),
      psi_lo_(psi_lo),
      psi_hi_(psi_hi),
      n_theta_(n_theta),
      n_psi_(n_psi),
      margin_(margin) {
    const bool finite = std::isfinite(theta_lo) && std::isfinite(theta_hi) && std::isfinite(psi_lo) &&
                        std::isfinite(psi_hi);
    if (!finite) throw InvalidParameter("grid bounds must be finite");
    if (!(theta_lo < theta_hi)) throw InvalidParameter("grid needs theta_lo < theta_hi");
    if (!(psi_lo < psi_hi)) throw InvalidParameter("grid needs psi_lo < psi_hi");
    if (n_theta < 2 || n_psi < 2) throw InvalidParameter("grid needs at least 2 samples per axis");
    if (!(margin > 0.0 && margin <= 1.0)) throw InvalidParameter("grid margin must lie in (0, 1]");
}

double Grid::lerp(double lo, double hi, double margin, std::size_t i, std::size_t n) {
    if (margin != 1.0) {
        const double mid = 0.5 * (lo + hi);
        const double half = 0.5 * (hi - lo) * margin;
        lo = mid - half;
        hi = mid + half;
    }
    // Exact endpoints at i == 0 and i == n - 1.
    if (i + 1 == n) return hi;
    const double t = static_cast<double>(i) / static_cast<double>(n - 1);
    return lo + t * (hi - lo);
}

double Grid::theta(std::size_t i) const { return lerp(theta_lo_, theta_hi_, 1.0, i, n_theta_); }
double Grid::psi(std::size_t j) const { return lerp(psi_lo_, psi_hi_, margin_, j, n_psi_); }

std::vector<PolarPoint> Grid::points() const {
    std::vector<PolarPoint> out;
    out.reserve(size());
    for (std::size_t j = 0; j < n_psi_; ++j) {
        for (std::size_t i = 0; i < n_theta_; ++i) out.push_back(at(i, j));
    }
    return out;
}

Grid Grid::with_margin(double margin) const {
    return {theta_lo_, theta_hi_, psi_lo_, psi_hi_, n_theta_, n_psi_, margin};
}

Grid Grid::with_counts(std::size_t n_theta, std::size_t n_psi) const {
    return {theta_lo_, theta_hi_, psi_lo_, psi_hi_, n_theta, n_psi, margin_};
}

Grid Grid::shifted(double d_theta, double d_psi) const {
    return {theta_lo_ + d_theta, theta_hi_ + d_theta, psi_lo_ + d_psi, psi_hi_ + d_psi, n_theta_, n_psi_, margin_};
}

}  // namespace seashell
