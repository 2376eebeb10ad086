#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "seashell/geometry.hpp"
#include "seashell/special_functions.hpp"

namespace seashell {

/// Planar logarithmic spiral r = r0 e^{k theta}. Evaluated on the sphere as
/// rho(theta, psi) = r0 e^{k theta}, whose equator is the spiral itself.
struct LogSpiral2D {
    double r0;
    double k;
};

/// rho = rho0 e^{mu theta + b psi}
struct SelfSimilar {
    double rho0;
    double mu;
    double b;
};

/// Logarithmic spiral rotated about the z-axis: rho = r0 e^{k psi}.
struct RotationalSpiral {
    double r0;
    double k;
};

/// General separable equiangular surface
/// rho = rho0 exp(sign_theta * mu * theta + sign_psi * h(psi)), psi in I_a.
struct EquiangularGeneral {
    double rho0;
    HParams h;
    int sign_theta;
    int sign_psi;
};

struct Sphere {
    double radius;
};

/// Cone with vertex at the origin around the z-axis.
struct Cone {
    double half_angle;
};

struct PlaneThroughOrigin {
    Vec3 unit_normal;
};

enum class FamilyKind {
    LogSpiral2D,
    SelfSimilar,
    RotationalSpiral,
    EquiangularGeneral,
    Sphere,
    Cone,
    PlaneThroughOrigin,
};

/// Immutable, validated surface family. Construct through the named factories;
/// each throws InvalidParameter naming the violated bound.
class SurfaceFamily {
public:
    using Variant = std::variant<LogSpiral2D, SelfSimilar, RotationalSpiral, EquiangularGeneral, Sphere,
                                 Cone, PlaneThroughOrigin>;

    static SurfaceFamily log_spiral_2d(double r0, double k);
    static SurfaceFamily self_similar(double rho0, double mu, double b);
    static SurfaceFamily rotational_spiral(double r0, double k);
    static SurfaceFamily equiangular(double rho0, double mu, double a, int sign_theta = +1,
                                     int sign_psi = +1);
    static SurfaceFamily sphere(double radius);
    static SurfaceFamily cone(double half_angle);
    static SurfaceFamily plane(const Vec3& normal);

    const Variant& variant() const { return value_; }
    FamilyKind kind() const { return static_cast<FamilyKind>(value_.index()); }

    template <typename T>
    const T* get_if() const {
        return std::get_if<T>(&value_);
    }

    /// True for every family with a polar equation rho(theta, psi).
    bool polar_representable() const;

    /// Latitude interval on which rho is defined, if bounded (I_a for the
    /// general equiangular family).
    std::optional<DomainInterval> psi_limits() const;

    /// Characteristic angle if the family is equiangular, else nullopt.
    std::optional<Angle> characteristic_angle() const;

    /// Short machine name: "self-similar", "equiangular", ...
    std::string_view name() const;

    /// Parameters as (name, value) pairs in declaration order.
    std::vector<std::pair<std::string, double>> parameters() const;

private:
    explicit SurfaceFamily(Variant v) : value_(std::move(v)) {}
    Variant value_;
};

}  // namespace seashell
