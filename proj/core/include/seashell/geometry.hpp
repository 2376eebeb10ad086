#pragma once

#include <cmath>
#include <numbers>

namespace seashell {

/// Plain 3-vector used for positions, tangents and normals.
struct Vec3 {
    double x{0.0};
    double y{0.0};
    double z{0.0};

    constexpr Vec3& operator+=(const Vec3& o) {
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    constexpr Vec3& operator-=(const Vec3& o) {
        x -= o.x;
        y -= o.y;
        z -= o.z;
        return *this;
    }
    constexpr Vec3& operator*=(double s) {
        x *= s;
        y *= s;
        z *= s;
        return *this;
    }

    friend constexpr Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
    friend constexpr Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
    friend constexpr Vec3 operator*(Vec3 a, double s) { return a *= s; }
    friend constexpr Vec3 operator*(double s, Vec3 a) { return a *= s; }
    friend constexpr Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
    friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

using CartesianPoint = Vec3;

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& v) { return std::hypot(v.x, v.y, v.z); }
constexpr double norm_squared(const Vec3& v) { return dot(v, v); }

inline Vec3 normalized(const Vec3& v) {
    const double n = norm(v);
    return {v.x / n, v.y / n, v.z / n};
}

/// Angle in radians.
struct Angle {
    double radians{0.0};

    static constexpr Angle from_degrees(double deg) { return {deg * std::numbers::pi / 180.0}; }
    constexpr double degrees() const { return radians * 180.0 / std::numbers::pi; }
};

/// Domain coordinates: theta is the azimuthal rotation angle, psi the elevation
/// above the xy-plane.
struct PolarPoint {
    double theta{0.0};
    double psi{0.0};
};

/// (rho cos psi cos theta, rho cos psi sin theta, rho sin psi)
inline CartesianPoint to_cartesian(const PolarPoint& p, double rho) {
    const double cp = std::cos(p.psi);
    return {rho * cp * std::cos(p.theta), rho * cp * std::sin(p.theta), rho * std::sin(p.psi)};
}

struct Point2 {
    double x{0.0};
    double y{0.0};
};

/// Point of the logarithmic spiral r = r0 e^{k theta}.
inline Point2 spiral2d_point(double r0, double k, double theta) {
    const double r = r0 * std::exp(k * theta);
    return {r * std::cos(theta), r * std::sin(theta)};
}

/// Analytic derivative of spiral2d_point with respect to theta.
inline Point2 spiral2d_velocity(double r0, double k, double theta) {
    const double r = r0 * std::exp(k * theta);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return {r * (k * c - s), r * (k * s + c)};
}

}  // namespace seashell
