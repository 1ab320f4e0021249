#include "stripvortex/kernels.hpp"

#include <cmath>
#include <numbers>

#include "stripvortex/errors.hpp"

namespace stripvortex {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Beyond this height cosh(2 pi y) exceeds ~1e80; evaluate through the
// exactly rescaled form in q = exp(-2 pi |y|) instead.
constexpr double kTallSwitch = 30.0;

[[noreturn]] void throw_singular(Vec2 d) {
    throw KernelSingularityError("kernel evaluated within eps_sing of the lattice at d = (" +
                                 std::to_string(d.x) + ", " + std::to_string(d.y) + ")");
}

} // namespace

double rho(Vec2 d) {
    if (std::fabs(d.y) > kTallSwitch) {
        const double q = std::exp(-kTwoPi * std::fabs(d.y));
        const double s = std::sin(kPi * d.x);
        const double p = 0.25 * (1.0 - q) * (1.0 - q) + q * s * s;
        return std::exp(kPi * std::fabs(d.y)) * std::sqrt(p);
    }
    return std::hypot(std::sin(kPi * d.x), std::sinh(kPi * d.y));
}

double green(Vec2 d) {
    if (std::fabs(d.y) > kTallSwitch) {
        const double q = std::exp(-kTwoPi * std::fabs(d.y));
        const double s = std::sin(kPi * d.x);
        const double p = 0.25 * (1.0 - q) * (1.0 - q) + q * s * s;
        return (kPi * std::fabs(d.y) + 0.5 * std::log(p)) / kTwoPi;
    }
    const double s = std::sin(kPi * d.x);
    const double sh = std::sinh(kPi * d.y);
    const double rho2 = s * s + sh * sh;
    if (rho2 <= kSingularTol * kSingularTol) throw_singular(d);
    return std::log(rho2) / (2.0 * kTwoPi);
}

Vec2 k_inf(Vec2 d) {
    if (std::fabs(d.y) > kTallSwitch) {
        // Exact rescaling by exp(-2 pi |y|); the naive form would overflow.
        const double q = std::exp(-kTwoPi * std::fabs(d.y));
        const double c = std::cos(kTwoPi * d.x);
        const double s = std::sin(kTwoPi * d.x);
        const double den = 1.0 + q * q - 2.0 * c * q;
        const double sign = d.y > 0.0 ? 1.0 : -1.0;
        return {-sign * (1.0 - q * q) / (2.0 * den), s * q / den};
    }
    const double si = std::sin(kPi * d.x);
    const double sh = std::sinh(kPi * d.y);
    const double rho2 = si * si + sh * sh;
    if (rho2 <= kSingularTol * kSingularTol) throw_singular(d);
    // cosh(2 pi y) - cos(2 pi x) = 2 rho^2
    return {-std::sinh(kTwoPi * d.y) / (4.0 * rho2), std::sin(kTwoPi * d.x) / (4.0 * rho2)};
}

Vec2 k_classical(Vec2 d) {
    const double r2 = norm_sq(d);
    if (r2 <= kSingularTol * kSingularTol) throw_singular(d);
    const double f = 1.0 / (kTwoPi * r2);
    return {-d.y * f, d.x * f};
}

Vec2 k_sym_truncated(Vec2 d, int n_images) {
    if (n_images < 0) throw std::invalid_argument("k_sym_truncated: n_images must be >= 0");
    Vec2 acc = k_classical(d);
    for (int n = 1; n <= n_images; ++n) {
        acc += k_classical({d.x - n, d.y}) + k_classical({d.x + n, d.y});
    }
    return acc;
}

namespace {

// beta entries together with rho^2, sharing the overflow-safe branch.
struct BetaParts {
    double b11;
    double b12;
    double inv_rho2; // exp-rescaled in the tall branch; see grad_k_inf
    double scale;    // extra factor for grad_k_inf in the tall branch
};

BetaParts beta_parts(Vec2 d) {
    if (std::fabs(d.y) > kTallSwitch) {
        const double q = std::exp(-kTwoPi * std::fabs(d.y));
        const double s1 = std::sin(kPi * d.x);
        const double p = 0.25 * (1.0 - q) * (1.0 - q) + q * s1 * s1; // rho^2 exp(-2 pi |y|)
        const double c = std::cos(kTwoPi * d.x);
        const double s = std::sin(kTwoPi * d.x);
        const double sign = d.y > 0.0 ? 1.0 : -1.0;
        const double b11 = sign * s * (1.0 - q * q) / (4.0 * p);
        const double b12 = (c * (1.0 + q * q) / 2.0 - q) / (2.0 * p);
        return {b11, b12, 1.0 / p, q};
    }
    const double si = std::sin(kPi * d.x);
    const double sh = std::sinh(kPi * d.y);
    const double rho2 = si * si + sh * sh;
    if (rho2 <= kSingularTol * kSingularTol) throw_singular(d);
    const double b11 = std::sin(kTwoPi * d.x) * std::sinh(kTwoPi * d.y) / (2.0 * rho2);
    const double b12 = (std::cos(kTwoPi * d.x) * std::cosh(kTwoPi * d.y) - 1.0) / (2.0 * rho2);
    return {b11, b12, 1.0 / rho2, 1.0};
}

} // namespace

Mat2 beta(Vec2 d) {
    const BetaParts p = beta_parts(d);
    return {p.b11, p.b12, p.b12, -p.b11};
}

Mat2 grad_k_inf(Vec2 d) {
    const BetaParts p = beta_parts(d);
    const double f = 0.5 * kPi * p.inv_rho2 * p.scale;
    return {f * p.b11, f * p.b12, f * p.b12, -f * p.b11};
}

Mat2 grad_k_classical(Vec2 d) {
    const double r2 = norm_sq(d);
    if (r2 <= kSingularTol * kSingularTol) throw_singular(d);
    const double f = 1.0 / (kTwoPi * r2 * r2);
    const double s11 = 2.0 * d.x * d.y;
    const double s12 = d.y * d.y - d.x * d.x;
    return {f * s11, f * s12, f * s12, -f * s11};
}

Mat2 grad_k_sym_truncated(Vec2 d, int n_images) {
    if (n_images < 0) throw std::invalid_argument("grad_k_sym_truncated: n_images must be >= 0");
    Mat2 acc = grad_k_classical(d);
    for (int n = 1; n <= n_images; ++n) {
        acc += grad_k_classical({d.x - n, d.y});
        acc += grad_k_classical({d.x + n, d.y});
    }
    return acc;
}

} // namespace stripvortex
