#include "stripvortex/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "stripvortex/errors.hpp"
#include "stripvortex/fourier.hpp"
#include "stripvortex/io.hpp"

namespace stripvortex {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

PatchSystem advanced(const PatchSystem& base, const CdeRhs& k, double scale) {
    PatchSystem out = base;
    for (size_t c = 0; c < out.contours.size(); ++c) {
        for (size_t j = 0; j < out.contours[c].nodes.size(); ++j) {
            out.contours[c].nodes[j] += scale * k.velocities[c][j];
        }
    }
    return out;
}

CdeRhs stage_rhs(const PatchSystem& system, QuadratureKind quad, int stage) {
    try {
        return cde_rhs(system, quad);
    } catch (const ContourProximityError& e) {
        throw ContourProximityError("RK4 stage " + std::to_string(stage) + ": " + e.what());
    }
}

double max_speed_of(const CdeRhs& rhs) {
    double m = 0.0;
    for (const auto& contour : rhs.velocities) {
        for (const Vec2& v : contour) m = std::max(m, norm(v));
    }
    return m;
}

double min_node_spacing(const PatchSystem& system) {
    double m = std::numeric_limits<double>::infinity();
    for (const Contour& c : system.contours) {
        const int n = c.size();
        for (int j = 0; j < n; ++j) {
            const Vec2 next = (j + 1 < n)
                                  ? c.nodes[j + 1]
                                  : c.nodes[0] + Vec2{static_cast<double>(c.winding), 0.0};
            m = std::min(m, norm(next - c.nodes[j]));
        }
    }
    return m;
}

} // namespace

double diagnostics_probe_height(const PatchSystem& system) {
    return vertical_extent(system) + 1.0;
}

Diagnostics compute_diagnostics(const PatchSystem& system, QuadratureKind quad) {
    Diagnostics d;
    d.area = signed_area(system);
    d.vertical_moment = vertical_moment(system);
    d.gamma_star.reserve(system.contours.size());
    for (const Contour& c : system.contours) d.gamma_star.push_back(gamma_star(c));
    d.max_speed = max_speed_of(cde_rhs(system, quad));
    const MeanFlow mf = mean_flow_diagnostics(system, diagnostics_probe_height(system));
    d.m2 = mf.m2;
    d.m1_sum = mf.m1_sum;
    return d;
}

PatchSystem rk4_step(const PatchSystem& system, double dt, QuadratureKind quad) {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw std::invalid_argument("rk4_step: dt must be positive and finite");
    }
    const CdeRhs k1 = stage_rhs(system, quad, 1);
    const CdeRhs k2 = stage_rhs(advanced(system, k1, 0.5 * dt), quad, 2);
    const CdeRhs k3 = stage_rhs(advanced(system, k2, 0.5 * dt), quad, 3);
    const CdeRhs k4 = stage_rhs(advanced(system, k3, dt), quad, 4);

    PatchSystem out = system;
    const double w = dt / 6.0;
    for (size_t c = 0; c < out.contours.size(); ++c) {
        for (size_t j = 0; j < out.contours[c].nodes.size(); ++j) {
            out.contours[c].nodes[j] +=
                w * (k1.velocities[c][j] + 2.0 * k2.velocities[c][j] +
                     2.0 * k3.velocities[c][j] + k4.velocities[c][j]);
        }
    }
    return out;
}

Contour redistribute(const Contour& contour) {
    const int n = contour.size();
    std::vector<double> px(n), py(n);
    for (int j = 0; j < n; ++j) {
        px[j] = contour.nodes[j].x - static_cast<double>(contour.winding) * j / n;
        py[j] = contour.nodes[j].y;
    }
    const TrigSeries sx(px), sy(py);
    const double drift = contour.winding / kTwoPi;

    auto curve_speed = [&](double alpha) {
        return std::hypot(sx.deriv(alpha) + drift, sy.deriv(alpha));
    };

    // Spectral antiderivative of |gamma'| sampled on a finer grid gives the
    // cumulative arc length in closed form.
    const int fine = 4 * n;
    std::vector<double> speed(fine);
    for (int j = 0; j < fine; ++j) speed[j] = curve_speed(kTwoPi * j / fine);
    const TrigSeries speed_series(speed);
    const double total_length = speed_series.mean() * kTwoPi;

    Contour out = contour;
    for (int j = 1; j < n; ++j) {
        const double target = total_length * j / n;
        double beta = kTwoPi * j / n;
        bool converged = false;
        for (int it = 0; it < 50; ++it) {
            const double resid = target - speed_series.antiderivative(beta);
            if (std::fabs(resid) <= 1e-12 * std::max(1.0, total_length)) {
                converged = true;
                break;
            }
            const double sp = curve_speed(beta);
            if (!(sp > 0.0) || !std::isfinite(sp)) break;
            beta += resid / sp;
        }
        if (!converged) {
            throw RedistributionError("arc-length iteration did not converge at node " +
                                      std::to_string(j));
        }
        out.nodes[j] = {sx.eval(beta) + drift * beta, sy.eval(beta)};
    }
    // Node 0 is the beta = 0 anchor and stays put.
    return out;
}

RunResult run(const SimConfig& config) {
    RunResult result;
    PatchSystem system = build_initial_system(config);

    // Step count; a trailing partial step covers a non-divisible t_end.
    const long n_full = static_cast<long>(std::floor(config.t_end / config.dt + 1e-9));
    const double rem = config.t_end - static_cast<double>(n_full) * config.dt;
    const bool partial = rem > 1e-12 * std::max(1.0, config.t_end);
    const long n_steps = n_full + (partial ? 1 : 0);

    bool warned_gamma = false;
    bool warned_cross = false;
    auto check_warnings = [&](const PatchSystem& sys, double t) {
        if (!warned_gamma) {
            for (const Contour& c : sys.contours) {
                if (gamma_star(c) < kGammaStarWarn) {
                    result.warnings.push_back("gamma_star below " +
                                              std::to_string(kGammaStarWarn) + " at t = " +
                                              std::to_string(t));
                    warned_gamma = true;
                    break;
                }
            }
        }
        if (!warned_cross && sys.contours.size() > 1) {
            if (min_cross_contour_distance(sys) < kCrossDistanceWarn) {
                result.warnings.push_back("cross-contour distance below " +
                                          std::to_string(kCrossDistanceWarn) + " at t = " +
                                          std::to_string(t));
                warned_cross = true;
            }
        }
    };

    auto record = [&](const PatchSystem& sys, double t) {
        FrameRecord fr;
        fr.t = t;
        fr.contours = sys.contours;
        fr.diagnostics = compute_diagnostics(sys, config.quadrature);
        result.frames.push_back(std::move(fr));
    };

    try {
        {
            // Startup CFL-style sanity check, warning only.
            const CdeRhs rhs0 = cde_rhs(system, config.quadrature);
            const double v0 = max_speed_of(rhs0);
            const double spacing = min_node_spacing(system);
            if (config.dt * v0 >= spacing) {
                result.warnings.push_back(
                    "dt * max initial node speed exceeds the minimum node spacing (" +
                    std::to_string(config.dt * v0) + " >= " + std::to_string(spacing) + ")");
            }
        }
        check_warnings(system, 0.0);
        record(system, 0.0);

        for (long step = 1; step <= n_steps; ++step) {
            const bool last = step == n_steps;
            const double dt = (last && partial) ? rem : config.dt;
            const double t = last ? config.t_end : static_cast<double>(step) * config.dt;

            system = rk4_step(system, dt, config.quadrature);
            if (config.redistribute_every > 0 && step % config.redistribute_every == 0 && !last) {
                try {
                    for (Contour& c : system.contours) c = redistribute(c);
                } catch (const RedistributionError& e) {
                    result.warnings.push_back(std::string("redistribution skipped: ") + e.what());
                }
            }
            check_warnings(system, t);
            if (step % config.save_every == 0 || last) record(system, t);
        }
    } catch (const ContourProximityError& e) {
        result.breakdown = true;
        result.breakdown_message = e.what();
    }
    return result;
}

} // namespace stripvortex
