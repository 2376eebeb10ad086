#pragma once

#include "seashell/family.hpp"
#include "seashell/geometry.hpp"

namespace seashell {

struct RhoPartials {
    double rho_theta{0.0};
    double rho_psi{0.0};
};

/// First-order frame of the surface at one domain point.
struct SurfaceSample {
    PolarPoint p;
    double rho{0.0};
    double rho_theta{0.0};
    double rho_psi{0.0};
    Vec3 X;
    Vec3 X_theta;
    Vec3 X_psi;
    /// X_theta x X_psi
    Vec3 N;
};

/// Polar radius. Throws UnsupportedFamily for cones and planes, DomainError
/// for the general equiangular family outside I_a.
double eval_rho(const SurfaceFamily& family, const PolarPoint& p);

/// Analytic partial derivatives of rho.
RhoPartials eval_rho_partials(const SurfaceFamily& family, const PolarPoint& p);

/// Position only; valid wherever rho is (including cos psi <= 0).
Vec3 surface_point(const SurfaceFamily& family, const PolarPoint& p);

/// True when a frame can be built at p: polar family, rho defined, cos psi > 0.
bool frame_defined(const SurfaceFamily& family, const PolarPoint& p);

/// Builds X, X_theta, X_psi by the chain rule and N = X_theta x X_psi.
/// Throws DomainError when cos psi <= 0 or psi lies outside the family domain.
SurfaceSample surface_sample(const SurfaceFamily& family, const PolarPoint& p);

/// Normal expanded symbolically in rho, rho_theta, rho_psi; equals the cross
/// product of the tangents up to rounding.
Vec3 closed_form_normal(const SurfaceSample& s);

/// Characteristic angle at a sample, folded into [0, pi/2] so the orientation
/// of N does not matter. Throws DegenerateFrame if N or X vanishes.
Angle angle_beta(const SurfaceSample& s);

}  // namespace seashell
