#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "seashell/family.hpp"
#include "seashell/geometry.hpp"
#include "seashell/grid.hpp"

namespace seashell {

/// Summary of one property check. `verdict` is true exactly when
/// max_abs_deviation <= tolerance.
struct VerificationReport {
    std::string property_name;
    std::size_t n_samples{0};
    double mean{0.0};
    double max_abs_deviation{0.0};
    double rms{0.0};
    double tolerance{0.0};
    bool verdict{false};
    std::map<std::string, double> per_family_metadata;

    bool passed() const { return verdict; }
};

/// Flat JSON object with snake_case keys; verdict is "pass" or "fail".
nlohmann::json to_json(const VerificationReport& report);

/// Normalized residual of rho_theta^2 + rho_psi^2 cos^2 psi = rho^2 cos^2 psi tan^2 beta,
/// divided by the right-hand side. For tan(beta) == 0 the left-hand side over
/// rho^2 is returned instead.
double pde_residual(const SurfaceFamily& family, const PolarPoint& p, Angle beta);

/// Angle beta the family is expected to satisfy the PDE with. Equiangular
/// families report their characteristic angle; for the rest the angle
/// measured at (0, 0) is used so the residual shows how far they drift.
Angle reference_beta(const SurfaceFamily& family);

/// Measures angle_beta over the grid; mean is the beta estimate, deviation is
/// taken from that mean. Frame errors are rethrown naming the grid point.
VerificationReport check_equiangular(const SurfaceFamily& family, const Grid& grid, double tol,
                                     unsigned threads = 1);

/// pde_residual at every grid point against `beta`.
VerificationReport check_pde(const SurfaceFamily& family, const Grid& grid, Angle beta, double tol,
                             unsigned threads = 1);

struct Shift {
    double d_theta{0.0};
    double d_psi{0.0};
};

/// For each shift, rho(p + shift) / rho(p) over the grid. Passes when every
/// shift's ratio has relative spread <= tol; per-shift ratios go into the
/// metadata as ratio_<i>.
VerificationReport check_self_similar(const SurfaceFamily& family, std::span<const Shift> shifts,
                                      const Grid& grid, double tol);

struct Classification {
    bool equiangular{false};
    /// arctan|b| when equiangular.
    Angle beta;
    /// For non-equiangular surfaces: latitudes and the distinct angles the PDE
    /// would require there.
    std::vector<std::pair<double, Angle>> witnesses;
};

/// A self-similar surface rho0 e^{mu theta + b psi} is equiangular exactly when
/// mu == 0 (no tolerance is applied; threshold before calling).
Classification classify_self_similar_equiangular(double mu, double b);

/// Cone-membership tolerance and log-linearity tolerance for level curves.
inline constexpr double kConeRatioTolerance = 1e-12;
inline constexpr double kLogLinearTolerance = 1e-10;

/// Checks that psi = psi_c on the general equiangular surface is a conical
/// spiral: z / sqrt(x^2 + y^2) is constant and ln sqrt(x^2 + y^2) is affine
/// in theta with slope sign_theta * mu. Deviations are reported in units of
/// their own tolerances so the report tolerance is 1.
VerificationReport check_conchospiral_level_curve(const SurfaceFamily& family, double psi_c,
                                                  std::span<const double> thetas);

/// Angle between position and analytic velocity of the planar spiral;
/// passes when |cot(alpha) - k| <= 1e-9 everywhere. mean is the mean cot(alpha).
VerificationReport spiral2d_equiangular_check(double r0, double k, std::span<const double> thetas);

}  // namespace seashell
