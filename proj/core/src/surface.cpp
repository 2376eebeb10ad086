#include "seashell/surface.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "seashell/errors.hpp"
#include "seashell/special_functions.hpp"

namespace seashell {
namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void unsupported(const SurfaceFamily& family) {
    throw UnsupportedFamily(std::string(family.name()) + " has no polar equation rho(theta, psi)");
}

// scale * exp(x1 * y1 + x2 * y2) evaluated in extended precision and rounded
// once, so ratios of two values stay within a few ulp.
double scaled_exp(double scale, double x1, double y1, double x2, double y2) {
    using ld = long double;
    const ld exponent = static_cast<ld>(x1) * y1 + static_cast<ld>(x2) * y2;
    return static_cast<double>(scale * std::exp(exponent));
}

double equiangular_rho(const EquiangularGeneral& f, const PolarPoint& p) {
    const double exponent = f.sign_theta * f.h.mu() * p.theta + f.sign_psi * h_closed(f.h, p.psi);
    return f.rho0 * std::exp(exponent);
}

}  // namespace

double eval_rho(const SurfaceFamily& family, const PolarPoint& p) {
    return std::visit(overloaded{
                          [&](const LogSpiral2D& f) { return f.r0 * std::exp(f.k * p.theta); },
                          [&](const SelfSimilar& f) { return scaled_exp(f.rho0, f.mu, p.theta, f.b, p.psi); },
                          [&](const RotationalSpiral& f) { return f.r0 * std::exp(f.k * p.psi); },
                          [&](const EquiangularGeneral& f) { return equiangular_rho(f, p); },
                          [&](const Sphere& f) { return f.radius; },
                          [&](const Cone&) -> double { unsupported(family); },
                          [&](const PlaneThroughOrigin&) -> double { unsupported(family); },
                      },
                      family.variant());
}

RhoPartials eval_rho_partials(const SurfaceFamily& family, const PolarPoint& p) {
    const double rho = eval_rho(family, p);
    return std::visit(overloaded{
                          [&](const LogSpiral2D& f) { return RhoPartials{f.k * rho, 0.0}; },
                          [&](const SelfSimilar& f) { return RhoPartials{f.mu * rho, f.b * rho}; },
                          [&](const RotationalSpiral& f) { return RhoPartials{0.0, f.k * rho}; },
                          [&](const EquiangularGeneral& f) {
                              return RhoPartials{f.sign_theta * f.h.mu() * rho,
                                                 f.sign_psi * h_derivative(f.h, p.psi) * rho};
                          },
                          [&](const Sphere&) { return RhoPartials{0.0, 0.0}; },
                          [&](const Cone&) -> RhoPartials { unsupported(family); },
                          [&](const PlaneThroughOrigin&) -> RhoPartials { unsupported(family); },
                      },
                      family.variant());
}

Vec3 surface_point(const SurfaceFamily& family, const PolarPoint& p) {
    return to_cartesian(p, eval_rho(family, p));
}

bool frame_defined(const SurfaceFamily& family, const PolarPoint& p) {
    if (!family.polar_representable() || !(std::cos(p.psi) > 0.0)) return false;
    if (const auto lim = family.psi_limits()) {
        return std::abs(p.psi) <= lim->hi + kEndpointBand;
    }
    return true;
}

SurfaceSample surface_sample(const SurfaceFamily& family, const PolarPoint& p) {
    if (!family.polar_representable()) unsupported(family);
    const double cp = std::cos(p.psi);
    if (!(cp > 0.0)) {
        std::ostringstream msg;
        msg << "surface frame needs cos(psi) > 0, got psi = " << p.psi;
        throw DomainError(msg.str());
    }
    const double sp = std::sin(p.psi);
    const double ct = std::cos(p.theta);
    const double st = std::sin(p.theta);

    SurfaceSample s;
    s.p = p;
    s.rho = eval_rho(family, p);
    const RhoPartials d = eval_rho_partials(family, p);
    s.rho_theta = d.rho_theta;
    s.rho_psi = d.rho_psi;

    const Vec3 radial{cp * ct, cp * st, sp};
    const Vec3 d_theta{-cp * st, cp * ct, 0.0};
    const Vec3 d_psi{-sp * ct, -sp * st, cp};

    s.X = s.rho * radial;
    s.X_theta = s.rho_theta * radial + s.rho * d_theta;
    s.X_psi = s.rho_psi * radial + s.rho * d_psi;
    s.N = cross(s.X_theta, s.X_psi);
    return s;
}

Vec3 closed_form_normal(const SurfaceSample& s) {
    const double cp = std::cos(s.p.psi);
    const double sp = std::sin(s.p.psi);
    const double ct = std::cos(s.p.theta);
    const double st = std::sin(s.p.theta);
    const double r = s.rho;
    const double rt = s.rho_theta;
    const double rp = s.rho_psi;
    return {rp * r * ct * cp * sp + rt * r * st + r * r * ct * cp * cp,
            rp * r * st * cp * sp - rt * r * ct + r * r * st * cp * cp,
            -rp * r * cp * cp + r * r * cp * sp};
}

Angle angle_beta(const SurfaceSample& s) {
    const double n = norm(s.N);
    const double x = norm(s.X);
    if (!(n > 0.0) || !(x > 0.0)) throw DegenerateFrame("normal or radius vector vanishes");
    // atan2(|N x X|, N.X) is the arccos of the clamped cosine without its
    // loss of precision near 0 and pi.
    const double beta = std::atan2(norm(cross(s.N, s.X)), dot(s.N, s.X));
    return {std::min(beta, std::numbers::pi - beta)};
}

}  // namespace seashell
