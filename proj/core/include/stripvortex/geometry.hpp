#pragma once

#include <vector>

#include "stripvortex/vec2.hpp"

namespace stripvortex {

/// Wrap into the fundamental domain: t - floor(t + 1/2), always in [-1/2, 1/2).
/// Ties at half-integers map to -1/2.
double wrap_x1(double t);

// Point on the periodic strip; x1 is wrapped into [-1/2, 1/2) on construction.
struct StripPoint {
    StripPoint(double x1_in, double x2_in);

    double x1;
    double x2;
};

/// Distance on the cylinder: sqrt(wrap_x1(dx1)^2 + dx2^2).
double strip_distance(StripPoint p, StripPoint q);

// Closed boundary curve stored in lifted coordinates (no wrapping), sampled
// at alpha_j = 2 pi j / N.  The curve closes up to the offset (winding, 0).
struct Contour {
    std::vector<Vec2> nodes;
    int winding = 0;

    int size() const { return static_cast<int>(nodes.size()); }
};

/// Validate node list and declared closure offset, producing a Contour.
/// The offset must be an integral horizontal shift (w, 0) with |w| <= 1.
Contour validate_contour(std::vector<Vec2> nodes, Vec2 closure_offset);

// Patch region boundary: contours oriented with the region on their left,
// plus the constant vorticity carried inside.
struct PatchSystem {
    std::vector<Contour> contours;
    double omega0 = 0.0;
};

/// Even-odd membership test by counting crossings of the upward vertical ray
/// through p with all boundary segments, horizontal extents compared mod 1.
/// Throws AmbiguousMembershipError within delta_bnd of the boundary polyline.
bool point_in_region(const PatchSystem& system, StripPoint p);

/// Same parity count without the boundary-proximity guard; used for bulk cell
/// classification where a stray near-boundary cell is harmless.
bool region_parity(const PatchSystem& system, StripPoint p);

/// Distance from p to the boundary polyline (segments on the cylinder).
double boundary_distance(const PatchSystem& system, StripPoint p);

/// -sum_k contour integral of x2 dx1, spectral derivative + periodic trapezoid.
/// Lift-independent; positive for regions on the left of the traversal.
double signed_area(const PatchSystem& system);

/// -sum_k contour integral of (x2^2/2) dx1; conserved by the dynamics.
double vertical_moment(const PatchSystem& system);

/// Discrete chord-to-parameter ratio infimum over node pairs; the parameter
/// distance is the periodic one (<= pi) and the chord uses the matching lift.
double gamma_star(const Contour& contour);

/// Contours translated by (n, 0), n = -floor(copies/2) .. floor(copies/2),
/// for exporting the periodized full-plane picture.
std::vector<Contour> replicate(const PatchSystem& system, int copies);

/// d gamma / d alpha at the nodes: spectral derivative of the periodic part
/// gamma(alpha) - (w alpha / 2 pi, 0) plus the winding drift (w / 2 pi, 0).
std::vector<Vec2> contour_derivative_at_nodes(const Contour& contour);

/// Largest |x2| over all nodes of all contours (0 for an empty system).
double vertical_extent(const PatchSystem& system);

/// Minimum strip distance between nodes of distinct contours.
double min_cross_contour_distance(const PatchSystem& system);

} // namespace stripvortex
