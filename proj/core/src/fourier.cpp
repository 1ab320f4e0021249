#include "stripvortex/fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace stripvortex {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
} // namespace

TrigSeries::TrigSeries(std::span<const double> samples) : n_(static_cast<int>(samples.size())) {
    if (n_ < 2 || n_ % 2 != 0) {
        throw std::invalid_argument("TrigSeries: sample count must be even and >= 2");
    }
    // One period of cos/sin on the grid; all DFT arguments reduce to it exactly.
    std::vector<double> ct(n_), st(n_);
    for (int k = 0; k < n_; ++k) {
        ct[k] = std::cos(kTwoPi * k / n_);
        st[k] = std::sin(kTwoPi * k / n_);
    }
    const int half = n_ / 2;
    a_.assign(half + 1, 0.0);
    b_.assign(half, 0.0);
    const double scale = 2.0 / n_;
    for (int m = 0; m <= half; ++m) {
        double sa = 0.0;
        double sb = 0.0;
        for (int j = 0; j < n_; ++j) {
            const int k = static_cast<int>((static_cast<long long>(m) * j) % n_);
            sa += samples[j] * ct[k];
            sb += samples[j] * st[k];
        }
        a_[m] = scale * sa;
        if (m >= 1 && m < half) b_[m] = scale * sb;
    }
}

double TrigSeries::eval(double alpha) const {
    const int half = n_ / 2;
    double acc = 0.5 * a_[0];
    for (int m = 1; m < half; ++m) {
        acc += a_[m] * std::cos(m * alpha) + b_[m] * std::sin(m * alpha);
    }
    acc += 0.5 * a_[half] * std::cos(half * alpha);
    return acc;
}

double TrigSeries::deriv(double alpha) const {
    const int half = n_ / 2;
    double acc = 0.0;
    for (int m = 1; m < half; ++m) {
        acc += m * (b_[m] * std::cos(m * alpha) - a_[m] * std::sin(m * alpha));
    }
    acc -= 0.5 * half * a_[half] * std::sin(half * alpha);
    return acc;
}

std::vector<double> TrigSeries::deriv_at_nodes() const {
    std::vector<double> ct(n_), st(n_);
    for (int k = 0; k < n_; ++k) {
        ct[k] = std::cos(kTwoPi * k / n_);
        st[k] = std::sin(kTwoPi * k / n_);
    }
    const int half = n_ / 2;
    std::vector<double> out(n_, 0.0);
    for (int j = 0; j < n_; ++j) {
        double acc = 0.0;
        for (int m = 1; m < half; ++m) {
            const int k = static_cast<int>((static_cast<long long>(m) * j) % n_);
            acc += m * (b_[m] * ct[k] - a_[m] * st[k]);
        }
        // Nyquist term: sin(half * alpha_j) = sin(pi j) = 0.
        out[j] = acc;
    }
    return out;
}

double TrigSeries::antiderivative(double alpha) const {
    const int half = n_ / 2;
    double acc = 0.5 * a_[0] * alpha;
    for (int m = 1; m < half; ++m) {
        acc += (a_[m] * std::sin(m * alpha) - b_[m] * (std::cos(m * alpha) - 1.0)) / m;
    }
    acc += 0.5 * a_[half] * std::sin(half * alpha) / half;
    return acc;
}

} // namespace stripvortex
