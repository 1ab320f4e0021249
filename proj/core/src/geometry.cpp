#include "stripvortex/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "stripvortex/errors.hpp"
#include "stripvortex/fourier.hpp"

namespace stripvortex {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
} // namespace

double wrap_x1(double t) {
    if (!std::isfinite(t)) throw std::invalid_argument("wrap_x1: non-finite input");
    return t - std::floor(t + 0.5);
}

StripPoint::StripPoint(double x1_in, double x2_in) : x1(wrap_x1(x1_in)), x2(x2_in) {
    if (!std::isfinite(x2)) throw std::invalid_argument("StripPoint: non-finite x2");
}

double strip_distance(StripPoint p, StripPoint q) {
    return std::hypot(wrap_x1(p.x1 - q.x1), p.x2 - q.x2);
}

Contour validate_contour(std::vector<Vec2> nodes, Vec2 closure_offset) {
    const int n = static_cast<int>(nodes.size());
    if (n < 8 || n % 2 != 0) {
        throw InvalidDiscretizationError("contour needs an even node count >= 8, got " +
                                         std::to_string(n));
    }
    for (const Vec2& v : nodes) {
        if (!std::isfinite(v.x) || !std::isfinite(v.y)) {
            throw std::invalid_argument("validate_contour: non-finite node coordinate");
        }
    }
    const double w_real = closure_offset.x;
    const long long w = std::llround(w_real);
    if (std::fabs(closure_offset.y) > 1e-9 || std::fabs(w_real - static_cast<double>(w)) > 1e-9) {
        throw UnsupportedWindingError("closure offset must be an integral horizontal shift, got (" +
                                      std::to_string(closure_offset.x) + ", " +
                                      std::to_string(closure_offset.y) + ")");
    }
    if (w < -1 || w > 1) {
        throw UnsupportedWindingError("winding " + std::to_string(w) +
                                      " not in {-1, 0, +1}; simple curves cannot wrap further");
    }
    for (int j = 0; j < n; ++j) {
        Vec2 next = (j + 1 < n) ? nodes[j + 1] : nodes[0] + Vec2{static_cast<double>(w), 0.0};
        if (norm_sq(next - nodes[j]) == 0.0) {
            throw DegenerateContourError("coincident consecutive nodes at index " +
                                         std::to_string(j));
        }
    }
    Contour c;
    c.nodes = std::move(nodes);
    c.winding = static_cast<int>(w);
    return c;
}

namespace {

// Segment endpoints of a contour, closure offset applied on the wrap-around.
inline Vec2 segment_end(const Contour& c, int j) {
    return (j + 1 < c.size()) ? c.nodes[j + 1]
                              : c.nodes[0] + Vec2{static_cast<double>(c.winding), 0.0};
}

// Distance from p to the segment [a, b] seen on the cylinder.
double segment_distance_cyl(StripPoint p, Vec2 a, Vec2 b) {
    // Shift the probe horizontally so it faces the segment's midpoint, then
    // check the neighboring integer shifts as well.
    const double mid = 0.5 * (a.x + b.x);
    const double base = p.x1 + std::round(mid - p.x1);
    double best = std::numeric_limits<double>::infinity();
    for (int k = -1; k <= 1; ++k) {
        const Vec2 q{base + k, p.x2};
        const Vec2 ab = b - a;
        const double len2 = norm_sq(ab);
        double t = len2 > 0.0 ? dot(q - a, ab) / len2 : 0.0;
        t = std::clamp(t, 0.0, 1.0);
        best = std::min(best, norm(q - (a + t * ab)));
    }
    return best;
}

} // namespace

double boundary_distance(const PatchSystem& system, StripPoint p) {
    double best = std::numeric_limits<double>::infinity();
    for (const Contour& c : system.contours) {
        for (int j = 0; j < c.size(); ++j) {
            best = std::min(best, segment_distance_cyl(p, c.nodes[j], segment_end(c, j)));
        }
    }
    return best;
}

bool region_parity(const PatchSystem& system, StripPoint p) {
    long crossings = 0;
    for (const Contour& c : system.contours) {
        for (int j = 0; j < c.size(); ++j) {
            const Vec2 a = c.nodes[j];
            const Vec2 b = segment_end(c, j);
            const double dx = b.x - a.x;
            if (dx == 0.0) continue; // vertical segment, ray parallel
            // Representative of p.x1 + Z inside the segment's half-open span.
            double k, t;
            if (dx > 0.0) {
                k = std::ceil(a.x - p.x1);
                t = (p.x1 + k - a.x) / dx;
                if (!(t >= 0.0 && t < 1.0)) continue;
            } else {
                k = std::floor(a.x - p.x1);
                t = (p.x1 + k - a.x) / dx;
                if (!(t >= 0.0 && t < 1.0)) continue;
            }
            const double height = a.y + t * (b.y - a.y);
            if (height > p.x2) ++crossings;
        }
    }
    return (crossings % 2) != 0;
}

bool point_in_region(const PatchSystem& system, StripPoint p) {
    const double tol = 1e-12 * (1.0 + vertical_extent(system));
    if (boundary_distance(system, p) <= tol) {
        throw AmbiguousMembershipError("probe within delta_bnd of the boundary polyline");
    }
    return region_parity(system, p);
}

std::vector<Vec2> contour_derivative_at_nodes(const Contour& contour) {
    const int n = contour.size();
    std::vector<double> px(n), py(n);
    for (int j = 0; j < n; ++j) {
        px[j] = contour.nodes[j].x - static_cast<double>(contour.winding) * j / n;
        py[j] = contour.nodes[j].y;
    }
    const std::vector<double> dx = TrigSeries(px).deriv_at_nodes();
    const std::vector<double> dy = TrigSeries(py).deriv_at_nodes();
    const double drift = contour.winding / kTwoPi;
    std::vector<Vec2> out(n);
    for (int j = 0; j < n; ++j) out[j] = {dx[j] + drift, dy[j]};
    return out;
}

namespace {

// -contour integral of f(x2) dx1 with spectral dx1/dalpha.
template <typename F>
double minus_dx1_integral(const PatchSystem& system, F f) {
    double total = 0.0;
    for (const Contour& c : system.contours) {
        const std::vector<Vec2> gp = contour_derivative_at_nodes(c);
        double s = 0.0;
        for (int j = 0; j < c.size(); ++j) s += f(c.nodes[j].y) * gp[j].x;
        total -= kTwoPi / c.size() * s;
    }
    return total;
}

} // namespace

double signed_area(const PatchSystem& system) {
    return minus_dx1_integral(system, [](double y) { return y; });
}

double vertical_moment(const PatchSystem& system) {
    return minus_dx1_integral(system, [](double y) { return 0.5 * y * y; });
}

double gamma_star(const Contour& contour) {
    const int n = contour.size();
    const double w = contour.winding;
    double best = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
            const double dalpha = kTwoPi * (k - j) / n;
            const Vec2 diff = contour.nodes[k] - contour.nodes[j];
            // Candidate parameter distances <= pi: comparing gamma(alpha_k)
            // with gamma(alpha_j) or with gamma(alpha_j + 2 pi).
            if (dalpha <= std::numbers::pi + 1e-15) {
                best = std::min(best, norm(diff) / dalpha);
            }
            if (kTwoPi - dalpha <= std::numbers::pi + 1e-15) {
                best = std::min(best, norm(diff - Vec2{w, 0.0}) / (kTwoPi - dalpha));
            }
        }
    }
    return best;
}

std::vector<Contour> replicate(const PatchSystem& system, int copies) {
    if (copies < 1) throw std::invalid_argument("replicate: copies must be >= 1");
    const int half = copies / 2;
    std::vector<Contour> out;
    out.reserve(system.contours.size() * (2 * half + 1));
    for (int n = -half; n <= half; ++n) {
        for (const Contour& c : system.contours) {
            Contour t = c;
            for (Vec2& v : t.nodes) v.x += n;
            out.push_back(std::move(t));
        }
    }
    return out;
}

double vertical_extent(const PatchSystem& system) {
    double ext = 0.0;
    for (const Contour& c : system.contours) {
        for (const Vec2& v : c.nodes) ext = std::max(ext, std::fabs(v.y));
    }
    return ext;
}

double min_cross_contour_distance(const PatchSystem& system) {
    double best = std::numeric_limits<double>::infinity();
    const auto& cs = system.contours;
    for (size_t a = 0; a < cs.size(); ++a) {
        for (size_t b = a + 1; b < cs.size(); ++b) {
            for (const Vec2& p : cs[a].nodes) {
                for (const Vec2& q : cs[b].nodes) {
                    best = std::min(best, std::hypot(wrap_x1(p.x - q.x), p.y - q.y));
                }
            }
        }
    }
    return best;
}

} // namespace stripvortex
