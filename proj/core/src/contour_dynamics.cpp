#include "stripvortex/contour_dynamics.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <string>

#include "stripvortex/errors.hpp"
#include "stripvortex/kernels.hpp"
#include "stripvortex/quadrature.hpp"

namespace stripvortex {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// 2 ln rho(d); ln rho is 1-periodic in d.x so lifted differences need no wrap.
inline double log_rho_sq(double dx, double dy) {
    const double s = std::sin(kPi * dx);
    const double sh = std::sinh(kPi * dy);
    const double r2 = s * s + sh * sh;
    if (r2 <= kSingularTol * kSingularTol) {
        throw KernelSingularityError("log rho evaluated at a lattice point of the kernel");
    }
    return std::log(r2);
}

const LogKernelWeights& cached_log_weights(int n) {
    static thread_local std::map<int, LogKernelWeights> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, log_kernel_weights(n)).first;
    return it->second;
}

// dist(x, node) >= 2 * max(adjacent spacings) for every node.
void ensure_probe_clearance(const PatchSystem& system, StripPoint x) {
    for (const Contour& c : system.contours) {
        const int n = c.size();
        std::vector<double> spacing(n);
        for (int j = 0; j < n; ++j) {
            const Vec2 next = (j + 1 < n)
                                  ? c.nodes[j + 1]
                                  : c.nodes[0] + Vec2{static_cast<double>(c.winding), 0.0};
            spacing[j] = norm(next - c.nodes[j]);
        }
        for (int j = 0; j < n; ++j) {
            const double local = std::max(spacing[(j + n - 1) % n], spacing[j]);
            const double dist =
                std::hypot(wrap_x1(x.x1 - c.nodes[j].x), x.x2 - c.nodes[j].y);
            if (dist < 2.0 * local) {
                throw NearBoundaryError(
                    "probe within 2x the local node spacing of a contour (dist = " +
                    std::to_string(dist) + "); use cde_rhs for on-boundary values");
            }
        }
    }
}

void ensure_system_evolvable(const PatchSystem& system) {
    for (size_t k = 0; k < system.contours.size(); ++k) {
        const double gs = gamma_star(system.contours[k]);
        if (gs < kGammaStarHalt) {
            throw ContourProximityError("contour " + std::to_string(k) +
                                        " degenerate: gamma_star = " + std::to_string(gs) +
                                        " < " + std::to_string(kGammaStarHalt));
        }
    }
    if (system.contours.size() > 1) {
        const double d = min_cross_contour_distance(system);
        if (d < kCrossDistanceHalt) {
            throw ContourProximityError("contours closer than the halt threshold: " +
                                        std::to_string(d));
        }
    }
}

} // namespace

Vec2 velocity(const PatchSystem& system, StripPoint x) {
    ensure_probe_clearance(system, x);
    Vec2 total{};
    for (const Contour& c : system.contours) {
        const std::vector<Vec2> gp = contour_derivative_at_nodes(c);
        const int n = c.size();
        Vec2 acc{};
        for (int j = 0; j < n; ++j) {
            const double lr = 0.5 * log_rho_sq(x.x1 - c.nodes[j].x, x.x2 - c.nodes[j].y);
            acc += lr * gp[j];
        }
        total += (kTwoPi / n) * acc;
    }
    return (-system.omega0 / kTwoPi) * total;
}

CdeRhs cde_rhs(const PatchSystem& system, QuadratureKind quad) {
    ensure_system_evolvable(system);

    const size_t nc = system.contours.size();
    std::vector<std::vector<Vec2>> derivs(nc);
    for (size_t k = 0; k < nc; ++k) derivs[k] = contour_derivative_at_nodes(system.contours[k]);

    CdeRhs rhs;
    rhs.velocities.resize(nc);
    for (size_t k = 0; k < nc; ++k) {
        const Contour& target = system.contours[k];
        const int n = target.size();
        rhs.velocities[k].assign(n, Vec2{});

        // ln(4 sin^2(pi d / N)) for node offsets d = 1 .. N-1.
        std::vector<double> log_sin(n, 0.0);
        for (int d = 1; d < n; ++d) {
            const double s = 2.0 * std::sin(kPi * d / n);
            log_sin[d] = std::log(s * s);
        }
        const LogKernelWeights* weights =
            quad == QuadratureKind::spectral ? &cached_log_weights(n) : nullptr;

        std::vector<Vec2> smooth(n);
        for (int i = 0; i < n; ++i) {
            const Vec2 xi = target.nodes[i];
            Vec2 total{};

            // Self interaction through the log splitting.
            const std::vector<Vec2>& gp = derivs[k];
            if (quad == QuadratureKind::spectral) {
                for (int j = 0; j < n; ++j) {
                    if (j == i) continue;
                    const double s =
                        0.5 * log_rho_sq(xi.x - target.nodes[j].x, xi.y - target.nodes[j].y) -
                        0.5 * log_sin[i - j >= 0 ? i - j : i - j + n];
                    smooth[j] = s * gp[j];
                }
                smooth[i] = std::log(kPi * norm(gp[i])) * gp[i];
                total += integrate_with_log_singularity<Vec2>(smooth, gp, i, *weights);
            } else {
                for (int j = 0; j < n; ++j) {
                    smooth[j] = (j == i) ? Vec2{}
                                         : 0.5 *
                                               log_rho_sq(xi.x - target.nodes[j].x,
                                                          xi.y - target.nodes[j].y) *
                                               gp[j];
                }
                // Zero-mean cell correction: the punctured sum of the periodic
                // log kernel carries an exact bias (sum of ln(2 sin(pi j/N))
                // over j != 0 is ln N), so the omitted cell must contribute
                // h ln(h/2pi) per unit log coefficient plus the smooth diagonal.
                const double h = kTwoPi / n;
                const Vec2 corr = h * std::log(0.5 * h * norm(gp[i])) * gp[i];
                total += punctured_trapezoid_log<Vec2>(smooth, i, corr);
            }

            // Cross terms by plain trapezoid, fixed contour-then-node order.
            for (size_t j = 0; j < nc; ++j) {
                if (j == k) continue;
                const Contour& src = system.contours[j];
                const std::vector<Vec2>& gpj = derivs[j];
                const int m = src.size();
                Vec2 acc{};
                for (int q = 0; q < m; ++q) {
                    const double lr =
                        0.5 * log_rho_sq(xi.x - src.nodes[q].x, xi.y - src.nodes[q].y);
                    acc += lr * gpj[q];
                }
                total += (kTwoPi / m) * acc;
            }

            rhs.velocities[k][i] = (-system.omega0 / kTwoPi) * total;
        }
    }
    return rhs;
}

Mat2 velocity_gradient(const PatchSystem& system, StripPoint x) {
    ensure_probe_clearance(system, x);

    double d_min = std::numeric_limits<double>::infinity();
    double y_lo = std::numeric_limits<double>::infinity();
    double y_hi = -std::numeric_limits<double>::infinity();
    for (const Contour& c : system.contours) {
        for (const Vec2& v : c.nodes) {
            d_min = std::min(d_min, std::hypot(wrap_x1(x.x1 - v.x), x.x2 - v.y));
            y_lo = std::min(y_lo, v.y);
            y_hi = std::max(y_hi, v.y);
        }
    }

    const double h_cell = std::min(0.005, d_min / 20.0);
    const double r_pv = 4.0 * h_cell;
    // Snap the column width so cells tile one period exactly; the grid is
    // anchored at the probe, making the cell centers symmetric about it.
    const int n_cols = static_cast<int>(std::lround(1.0 / h_cell));
    const double h1 = 1.0 / n_cols;
    const double h2 = h_cell;

    const int j_lo = static_cast<int>(std::floor((y_lo - x.x2) / h2 - 1.5));
    const int j_hi = static_cast<int>(std::ceil((y_hi - x.x2) / h2 + 0.5));

    const bool inside = region_parity(system, x);

    Mat2 pv{};
    for (int i = -(n_cols / 2); i < n_cols - n_cols / 2; ++i) {
        const double dx = (i + 0.5) * h1;
        for (int j = j_lo; j <= j_hi; ++j) {
            const double dy = (j + 0.5) * h2;
            if (dx * dx + dy * dy <= r_pv * r_pv) continue; // symmetric exclusion
            if (!region_parity(system, StripPoint(x.x1 + dx, x.x2 + dy))) continue;
            pv += grad_k_inf({-dx, -dy});
        }
    }
    pv = (system.omega0 * h1 * h2) * pv;

    if (inside) {
        // The excluded disk carries constant vorticity; its principal-value
        // contribution survives only in the off-diagonal entries.
        const double corr = system.omega0 * kPi * r_pv * r_pv * kGradKInfDiskMean;
        pv.m12 += corr;
        pv.m21 += corr;
        // Local rotation jump omega(x)/2 [[0,-1],[1,0]].
        pv.m12 -= 0.5 * system.omega0;
        pv.m21 += 0.5 * system.omega0;
    }
    return pv;
}

MeanFlow mean_flow_diagnostics(const PatchSystem& system, double x2_probe) {
    const double clearance = std::fabs(x2_probe) - vertical_extent(system);
    if (!(clearance >= 0.5)) {
        throw InvalidProbeError("mean-flow probe must clear the vertical extent by >= 0.5, got " +
                                std::to_string(clearance));
    }
    const int ns = 128;
    auto mean_on_line = [&](double height) {
        std::vector<double> u1(ns), u2(ns);
        for (int i = 0; i < ns; ++i) {
            const Vec2 u = velocity(system, StripPoint(-0.5 + static_cast<double>(i) / ns, height));
            u1[i] = u.x;
            u2[i] = u.y;
        }
        return std::pair<double, double>{trapezoid_periodic<double>(u1, 1.0),
                                         trapezoid_periodic<double>(u2, 1.0)};
    };
    const auto [m1_plus, m2_plus] = mean_on_line(x2_probe);
    const auto [m1_minus, m2_minus] = mean_on_line(-x2_probe);
    (void)m2_minus;
    MeanFlow mf;
    mf.m2 = m2_plus;
    mf.m1_at = m1_plus;
    mf.m1_sum = m1_plus + m1_minus;
    return mf;
}

} // namespace stripvortex
