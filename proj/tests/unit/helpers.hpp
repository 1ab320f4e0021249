#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "stripvortex/geometry.hpp"
#include "stripvortex/vec2.hpp"

namespace stripvortex::testing {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline Contour make_circle(int n, double r, Vec2 center = {0.0, 0.0}) {
    std::vector<Vec2> nodes(n);
    for (int j = 0; j < n; ++j) {
        const double a = kTwoPi * j / n;
        nodes[j] = center + r * Vec2{std::cos(a), std::sin(a)};
    }
    return validate_contour(std::move(nodes), {0.0, 0.0});
}

inline Contour make_ellipse(int n, Vec2 semi_axes, Vec2 center = {0.0, 0.0}) {
    std::vector<Vec2> nodes(n);
    for (int j = 0; j < n; ++j) {
        const double a = kTwoPi * j / n;
        nodes[j] = center + Vec2{semi_axes.x * std::cos(a), semi_axes.y * std::sin(a)};
    }
    return validate_contour(std::move(nodes), {0.0, 0.0});
}

inline PatchSystem circle_system(int n, double r, double omega0, Vec2 center = {0.0, 0.0}) {
    PatchSystem s;
    s.contours.push_back(make_circle(n, r, center));
    s.omega0 = omega0;
    return s;
}

// Bottom line winding +1, top traversed oppositely winding -1; the optional
// perturbation adds a sin(k alpha) to x2 of each line.
inline PatchSystem layer_system(int n, double h, double omega0, double a = 0.0, int mode = 1) {
    std::vector<Vec2> bottom(n), top(n);
    for (int j = 0; j < n; ++j) {
        const double al = kTwoPi * j / n;
        const double pert = a * std::sin(mode * al);
        bottom[j] = {al / kTwoPi - 0.5, -h + pert};
        top[j] = {0.5 - al / kTwoPi, h + pert};
    }
    PatchSystem s;
    s.contours.push_back(validate_contour(std::move(bottom), {1.0, 0.0}));
    s.contours.push_back(validate_contour(std::move(top), {-1.0, 0.0}));
    s.omega0 = omega0;
    return s;
}

inline std::mt19937_64 seeded_rng(unsigned seed = 20240811u) { return std::mt19937_64{seed}; }

} // namespace stripvortex::testing
