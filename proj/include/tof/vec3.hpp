#pragma once

#include <cmath>

namespace tof {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(Vec3 o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(Vec3 o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    double dot(Vec3 o) const { return x * o.x + y * o.y + z * o.z; }
    double norm2() const { return dot(*this); }
    double norm() const { return std::sqrt(norm2()); }
    double rho() const { return std::hypot(x, y); }  // cylindrical radius
};

inline Vec3 operator*(double s, Vec3 v) { return v * s; }

// Cylindrical (r, phi, z) to Cartesian.
inline Vec3 from_cylindrical(double r, double phi, double z) {
    return {r * std::cos(phi), r * std::sin(phi), z};
}

}  // namespace tof
