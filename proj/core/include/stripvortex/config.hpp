#pragma once

#include <vector>

#include "stripvortex/contour_dynamics.hpp"
#include "stripvortex/vec2.hpp"

namespace stripvortex {

// Initial-condition presets; layer presets produce a winding +1 / -1 pair.
struct PresetSpec {
    enum class Kind { circle, ellipse, flat_layer, perturbed_layer, explicit_nodes };

    Kind kind = Kind::circle;
    Vec2 center{};             // circle, ellipse
    double radius = 0.0;       // circle
    Vec2 semi_axes{};          // ellipse
    double h = 0.0;            // layer half-height
    double amplitude = 0.0;    // perturbed_layer
    int mode = 1;              // perturbed_layer
    std::vector<Vec2> nodes;   // explicit
    Vec2 closure{};            // explicit

    friend bool operator==(const PresetSpec&, const PresetSpec&) = default;
};

struct SimConfig {
    double omega0 = 0.0;
    std::vector<PresetSpec> contours;
    int n_nodes = 0;
    double dt = 1e-3;
    double t_end = 0.0;
    int save_every = 10;
    int redistribute_every = 20;
    QuadratureKind quadrature = QuadratureKind::spectral;

    friend bool operator==(const SimConfig&, const SimConfig&) = default;
};

} // namespace stripvortex
