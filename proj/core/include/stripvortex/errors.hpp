#pragma once

#include <stdexcept>
#include <string>

namespace stripvortex {

// Base class for all library errors that are not plain argument mistakes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Kernel evaluated within eps_sing of a lattice singularity.
struct KernelSingularityError : Error {
    using Error::Error;
};

// Closure offset implies a winding outside {-1, 0, +1}.
struct UnsupportedWindingError : Error {
    using Error::Error;
};

// Coincident consecutive nodes.
struct DegenerateContourError : Error {
    using Error::Error;
};

// Node count odd or below the minimum required by the spectral quadrature.
struct InvalidDiscretizationError : Error {
    using Error::Error;
};

// Probe too close to a boundary polyline for the parity test to be meaningful.
struct AmbiguousMembershipError : Error {
    using Error::Error;
};

// Velocity/gradient probe closer to a contour than the evaluation clearance.
struct NearBoundaryError : Error {
    using Error::Error;
};

// Contours too close to each other or too degenerate to evolve further.
struct ContourProximityError : Error {
    using Error::Error;
};

// Mean-flow probe line passes through the vortical region.
struct InvalidProbeError : Error {
    using Error::Error;
};

// Arc-length reparameterization did not converge.
struct RedistributionError : Error {
    using Error::Error;
};

// Configuration parsing/validation failure; message names the offending path.
struct ConfigError : Error {
    using Error::Error;
};

// Output stream failure; message names the frame index reached.
struct IoError : Error {
    using Error::Error;
};

} // namespace stripvortex
