#pragma once

#include <vector>

#include "stripvortex/geometry.hpp"
#include "stripvortex/vec2.hpp"

namespace stripvortex {

// Quadrature used for the singular self-interaction integral of the CDE.
// The punctured rule is a low-order cross-check of the spectral path.
enum class QuadratureKind { spectral, punctured };

// Boundary non-degeneracy thresholds.  Evolution warns below the first pair
// and cde_rhs refuses to evaluate below the second.
inline constexpr double kGammaStarWarn = 1e-2;
inline constexpr double kGammaStarHalt = 1e-3;
inline constexpr double kCrossDistanceWarn = 1e-3;
inline constexpr double kCrossDistanceHalt = 1e-4;

// Node velocities aligned with the contours of the system they came from.
struct CdeRhs {
    std::vector<std::vector<Vec2>> velocities;
};

/// Velocity induced at an off-boundary point,
///   u(x) = -(omega0 / 2 pi) sum_j integral log rho(x - gamma_j) gamma_j' dalpha,
/// by plain periodic trapezoid per contour.  Probes closer to a contour than
/// twice the local node spacing raise NearBoundaryError.
Vec2 velocity(const PatchSystem& system, StripPoint x);

/// Boundary node velocities of the contour dynamics equation.  The self
/// integral splits off the parameter-space log factor
/// ln(4 sin^2((alpha - alpha')/2)) / 2 and uses the spectral circulant rule,
/// with diagonal smooth-part limit ln(pi |gamma'|) gamma'.
CdeRhs cde_rhs(const PatchSystem& system, QuadratureKind quad = QuadratureKind::spectral);

/// Velocity gradient at an off-boundary point: local rotation jump
/// omega(x)/2 [[0,-1],[1,0]] plus the principal-value integral of
/// grad_k_inf over the patch, by a midpoint cell sum anchored at the probe
/// with a symmetric excluded disk and its analytic off-diagonal correction.
Mat2 velocity_gradient(const PatchSystem& system, StripPoint x);

struct MeanFlow {
    double m2 = 0.0;     // horizontal mean of u2 at the probe height
    double m1_at = 0.0;  // horizontal mean of u1 at the probe height
    double m1_sum = 0.0; // m1(probe) + m1(-probe); zero for K * omega fields
};

/// Horizontal mean values of the velocity on lines above/below the support;
/// the probe lines must clear the vertical extent by at least 0.5.
MeanFlow mean_flow_diagnostics(const PatchSystem& system, double x2_probe);

} // namespace stripvortex
