#pragma once

#include <string>
#include <vector>

#include "stripvortex/config.hpp"
#include "stripvortex/contour_dynamics.hpp"
#include "stripvortex/geometry.hpp"

namespace stripvortex {

struct Diagnostics {
    double area = 0.0;
    double vertical_moment = 0.0;
    std::vector<double> gamma_star; // per contour
    double max_speed = 0.0;
    double m2 = 0.0;
    double m1_sum = 0.0;
};

// Snapshot of the contours plus conserved-quantity diagnostics.
struct FrameRecord {
    double t = 0.0;
    std::vector<Contour> contours;
    Diagnostics diagnostics;
};

/// Mean-flow probe height used for frame diagnostics: vertical extent + 1.
double diagnostics_probe_height(const PatchSystem& system);

/// Diagnostics exactly as stored in frames; recomputable from the contours.
Diagnostics compute_diagnostics(const PatchSystem& system,
                                QuadratureKind quad = QuadratureKind::spectral);

/// One classical Runge-Kutta step of the CDE acting on all node coordinates;
/// windings and omega0 are untouched.  Contour-proximity errors from the
/// stage evaluations are rethrown annotated with the stage number.
PatchSystem rk4_step(const PatchSystem& system, double dt,
                     QuadratureKind quad = QuadratureKind::spectral);

/// Resample the contour so nodes are equispaced in arc length, keeping the
/// curve (trig interpolant of the periodic part) and node count fixed.
/// Node 0 stays anchored at parameter 0.
Contour redistribute(const Contour& contour);

struct RunResult {
    std::vector<FrameRecord> frames;
    bool breakdown = false;
    std::string breakdown_message;
    std::vector<std::string> warnings;
};

/// Fixed-step time integration from t = 0 to t_end, recording a frame every
/// save_every steps and at t_end.  Halts early with the partial trajectory
/// and a breakdown message when cde_rhs refuses to evaluate.
RunResult run(const SimConfig& config);

} // namespace stripvortex
