#include "seashell/family.hpp"

#include <cmath>
#include <numbers>

#include "seashell/errors.hpp"

namespace seashell {
namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const char* message) {
    if (!ok) throw InvalidParameter(message);
}

bool finite(double v) { return std::isfinite(v); }

void require_sign(int s, const char* name) {
    if (s != 1 && s != -1) throw InvalidParameter(std::string(name) + " must be +1 or -1");
}

}  // namespace

SurfaceFamily SurfaceFamily::log_spiral_2d(double r0, double k) {
    require(finite(r0) && r0 > 0.0, "r0 must be > 0");
    require(finite(k), "k must be finite");
    return SurfaceFamily(LogSpiral2D{r0, k});
}

SurfaceFamily SurfaceFamily::self_similar(double rho0, double mu, double b) {
    require(finite(rho0) && rho0 >= 0.0, "rho0 must be >= 0");
    require(finite(mu), "mu must be finite");
    require(finite(b), "b must be finite");
    return SurfaceFamily(SelfSimilar{rho0, mu, b});
}

SurfaceFamily SurfaceFamily::rotational_spiral(double r0, double k) {
    require(finite(r0) && r0 > 0.0, "r0 must be > 0");
    require(finite(k), "k must be finite");
    return SurfaceFamily(RotationalSpiral{r0, k});
}

SurfaceFamily SurfaceFamily::equiangular(double rho0, double mu, double a, int sign_theta, int sign_psi) {
    require(finite(rho0) && rho0 >= 0.0, "rho0 must be >= 0");
    require_sign(sign_theta, "sign_theta");
    require_sign(sign_psi, "sign_psi");
    return SurfaceFamily(EquiangularGeneral{rho0, HParams(mu, a), sign_theta, sign_psi});
}

SurfaceFamily SurfaceFamily::sphere(double radius) {
    require(finite(radius) && radius > 0.0, "radius must be > 0");
    return SurfaceFamily(Sphere{radius});
}

SurfaceFamily SurfaceFamily::cone(double half_angle) {
    require(finite(half_angle) && half_angle > 0.0 && half_angle < std::numbers::pi / 2.0,
            "half_angle must lie in (0, pi/2)");
    return SurfaceFamily(Cone{half_angle});
}

SurfaceFamily SurfaceFamily::plane(const Vec3& normal) {
    const double n = norm(normal);
    require(std::isfinite(n) && n > 0.0, "plane normal must be non-zero");
    return SurfaceFamily(PlaneThroughOrigin{normalized(normal)});
}

bool SurfaceFamily::polar_representable() const {
    return kind() != FamilyKind::Cone && kind() != FamilyKind::PlaneThroughOrigin;
}

std::optional<DomainInterval> SurfaceFamily::psi_limits() const {
    if (const auto* eq = get_if<EquiangularGeneral>()) return psi_domain(eq->h.a());
    return std::nullopt;
}

std::optional<Angle> SurfaceFamily::characteristic_angle() const {
    constexpr double right = std::numbers::pi / 2.0;
    return std::visit(
        overloaded{
            [](const LogSpiral2D& f) -> std::optional<Angle> {
                if (f.k == 0.0) return Angle{0.0};
                return std::nullopt;
            },
            [](const SelfSimilar& f) -> std::optional<Angle> {
                if (f.mu == 0.0) return Angle{std::atan(std::abs(f.b))};
                return std::nullopt;
            },
            [](const RotationalSpiral& f) -> std::optional<Angle> { return Angle{std::atan(std::abs(f.k))}; },
            [](const EquiangularGeneral& f) -> std::optional<Angle> { return Angle{std::atan(f.h.tan_beta())}; },
            [](const Sphere&) -> std::optional<Angle> { return Angle{0.0}; },
            [&](const Cone&) -> std::optional<Angle> { return Angle{right}; },
            [&](const PlaneThroughOrigin&) -> std::optional<Angle> { return Angle{right}; },
        },
        value_);
}

std::string_view SurfaceFamily::name() const {
    switch (kind()) {
        case FamilyKind::LogSpiral2D: return "spiral2d";
        case FamilyKind::SelfSimilar: return "self-similar";
        case FamilyKind::RotationalSpiral: return "rotational";
        case FamilyKind::EquiangularGeneral: return "equiangular";
        case FamilyKind::Sphere: return "sphere";
        case FamilyKind::Cone: return "cone";
        case FamilyKind::PlaneThroughOrigin: return "plane";
    }
    return "unknown";
}

std::vector<std::pair<std::string, double>> SurfaceFamily::parameters() const {
    return std::visit(
        overloaded{
            [](const LogSpiral2D& f) -> std::vector<std::pair<std::string, double>> {
                return {{"r0", f.r0}, {"k", f.k}};
            },
            [](const SelfSimilar& f) -> std::vector<std::pair<std::string, double>> {
                return {{"rho0", f.rho0}, {"mu", f.mu}, {"b", f.b}};
            },
            [](const RotationalSpiral& f) -> std::vector<std::pair<std::string, double>> {
                return {{"r0", f.r0}, {"k", f.k}};
            },
            [](const EquiangularGeneral& f) -> std::vector<std::pair<std::string, double>> {
                return {{"rho0", f.rho0},
                        {"mu", f.h.mu()},
                        {"a", f.h.a()},
                        {"sign_theta", static_cast<double>(f.sign_theta)},
                        {"sign_psi", static_cast<double>(f.sign_psi)}};
            },
            [](const Sphere& f) -> std::vector<std::pair<std::string, double>> { return {{"radius", f.radius}}; },
            [](const Cone& f) -> std::vector<std::pair<std::string, double>> {
                return {{"half_angle", f.half_angle}};
            },
            [](const PlaneThroughOrigin& f) -> std::vector<std::pair<std::string, double>> {
                return {{"nx", f.unit_normal.x}, {"ny", f.unit_normal.y}, {"nz", f.unit_normal.z}};
            },
        },
        value_);
}

}  // namespace seashell
