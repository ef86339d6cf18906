#pragma once

#include <array>
#include <cmath>

namespace gzlab {

struct Vec3 {
    double x = 0, y = 0, z = 0;

    double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }
inline double dist(const Vec3& a, const Vec3& b) { return norm(a - b); }
inline Vec3 normalized(const Vec3& v) { return v / norm(v); }

// Rotation of v about a unit axis by angle (Rodrigues).
inline Vec3 rotate_about(const Vec3& v, const Vec3& axis, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return v * c + cross(axis, v) * s + axis * (dot(axis, v) * (1.0 - c));
}

// Minimum distance between segments [a0,a1] and [b0,b1], plus nearest points.
struct SegmentClosest {
    double distance;
    Vec3 pa, pb;
};

inline SegmentClosest segment_segment_closest(const Vec3& a0, const Vec3& a1,
                                              const Vec3& b0, const Vec3& b1) {
    const Vec3 u = a1 - a0, v = b1 - b0, w = a0 - b0;
    const double A = dot(u, u), B = dot(u, v), C = dot(v, v);
    const double D = dot(u, w), E = dot(v, w);
    const double den = A * C - B * B;
    double s, t;
    if (den > 1e-14 * A * C + 1e-300) {
        s = (B * E - C * D) / den;
        t = (A * E - B * D) / den;
    } else { // near-parallel
        s = 0.0;
        t = C > 0 ? E / C : 0.0;
    }
    auto clamp01 = [](double q) { return q < 0 ? 0.0 : (q > 1 ? 1.0 : q); };
    s = clamp01(s);
    t = clamp01(C > 0 ? (E + B * s) / C : 0.0);
    s = clamp01(A > 0 ? (B * t - D) / A : 0.0);
    const Vec3 pa = a0 + u * s, pb = b0 + v * t;
    return {dist(pa, pb), pa, pb};
}

} // namespace gzlab
