#pragma once

#include <cmath>

namespace stripvortex {

// Point or vector in the plane; x is the horizontal component.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend constexpr bool operator==(Vec2, Vec2) = default;

    constexpr Vec2& operator+=(Vec2 v) { x += v.x; y += v.y; return *this; }
    constexpr Vec2& operator-=(Vec2 v) { x -= v.x; y -= v.y; return *this; }
    constexpr Vec2& operator*=(double s) { x *= s; y *= s; return *this; }
};

constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
constexpr Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
constexpr Vec2 operator*(Vec2 v, double s) { return {s * v.x, s * v.y}; }
constexpr Vec2 operator-(Vec2 v) { return {-v.x, -v.y}; }

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

// Counterclockwise quarter turn.
constexpr Vec2 perp(Vec2 v) { return {-v.y, v.x}; }

inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
constexpr double norm_sq(Vec2 v) { return v.x * v.x + v.y * v.y; }

// 2x2 real matrix, rows indexed first: m12 sits in row 1, column 2.
struct Mat2 {
    double m11 = 0.0;
    double m12 = 0.0;
    double m21 = 0.0;
    double m22 = 0.0;

    constexpr Mat2& operator+=(const Mat2& o) {
        m11 += o.m11; m12 += o.m12; m21 += o.m21; m22 += o.m22;
        return *this;
    }
};

constexpr Mat2 operator+(Mat2 a, const Mat2& b) { return a += b; }
constexpr Mat2 operator*(double s, const Mat2& m) {
    return {s * m.m11, s * m.m12, s * m.m21, s * m.m22};
}

constexpr double trace(const Mat2& m) { return m.m11 + m.m22; }

inline double max_abs_entry(const Mat2& m) {
    return std::max(std::max(std::fabs(m.m11), std::fabs(m.m12)),
                    std::max(std::fabs(m.m21), std::fabs(m.m22)));
}

} // namespace stripvortex
