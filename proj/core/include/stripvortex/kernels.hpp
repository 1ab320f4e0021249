#pragma once

#include "stripvortex/vec2.hpp"

namespace stripvortex {

// Kernel evaluations closer than this to a lattice singularity raise
// KernelSingularityError instead of returning huge values that would
// silently poison quadrature sums.
inline constexpr double kSingularTol = 1e-14;

// Mean value of the off-diagonal entries of grad_k_inf over circles of
// vanishing radius centered at the origin.  The diagonal entries average to
// zero, the off-diagonal ones do not; the brute-force angular quadrature in
// the test suite confirms this constant and its radius independence.
// Used for the excluded-disk correction of principal-value integrals.
inline constexpr double kGradKInfDiskMean = -0.52359877559829887; // -pi/6

/// rho(d) = sqrt(sin^2(pi d.x) + sinh^2(pi d.y)); vanishes exactly on the
/// lattice Z x {0}.
double rho(Vec2 d);

/// Green's function of the strip, (1/2pi) log rho(d).
double green(Vec2 d);

/// Periodic Biot-Savart kernel,
///   K(d) = (-sinh(2 pi d.y), sin(2 pi d.x)) / (2 (cosh(2 pi d.y) - cos(2 pi d.x))).
/// Period 1 in d.x; divergence-free away from the lattice.
Vec2 k_inf(Vec2 d);

/// Classical free-space Biot-Savart kernel (1/2pi) d^perp / |d|^2.
Vec2 k_classical(Vec2 d);

/// Symmetric partial image sum  sum_{|n| <= n_images} k_classical(d - (n, 0)),
/// accumulated in pairs (n with -n).  Converges to k_inf(d) with O(1/n) error.
Vec2 k_sym_truncated(Vec2 d, int n_images);

/// The symmetric trace-free matrix in grad_k_inf = (pi/2) beta / rho^2:
///   beta = [ sin(2pi x) sinh(2pi y),  cos(2pi x) cosh(2pi y) - 1 ;
///            (symmetric)           , -sin(2pi x) sinh(2pi y)     ] / (2 rho^2).
Mat2 beta(Vec2 d);

/// Jacobian of k_inf (rows = components, columns = partials).
Mat2 grad_k_inf(Vec2 d);

/// Jacobian of the classical kernel, (1/2pi) sigma(d) / |d|^2.
Mat2 grad_k_classical(Vec2 d);

/// Symmetric partial image sum of grad_k_classical; O(1/n^2) tail.
Mat2 grad_k_sym_truncated(Vec2 d, int n_images);

} // namespace stripvortex
