#pragma once

#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "stripvortex/vec2.hpp"

namespace stripvortex {

/// Periodic trapezoid rule, (period / N) * sum of the samples.  Spectrally
/// accurate for smooth periodic integrands sampled on the uniform grid.
template <typename T>
T trapezoid_periodic(std::span<const T> samples, double period) {
    if (samples.empty()) throw std::invalid_argument("trapezoid_periodic: empty sample list");
    T acc{};
    for (const T& s : samples) acc += s;
    return (period / static_cast<double>(samples.size())) * acc;
}

// Circulant quadrature weights for the 2 pi-periodic logarithmic kernel:
// sum_j w[|i-j| mod N] f(alpha_j) approximates
// integral of ln(4 sin^2((alpha_i - alpha') / 2)) f(alpha') over one period
// with spectral accuracy for smooth periodic f.
struct LogKernelWeights {
    int n = 0;
    std::vector<double> w; // w[k] = w[n-k], zero row sum
};

/// Build the weights from the Fourier series ln(4 sin^2(t/2)) =
/// -2 sum_{m>=1} cos(mt)/m truncated at m = N/2 with the top mode halved.
LogKernelWeights log_kernel_weights(int n);

/// Split singular integral: periodic trapezoid of the smooth-part product
/// plus (1/2) * weighted sum of the log-factor samples against row i.
/// The caller supplies the analytic diagonal limit in smooth_samples[i].
template <typename T>
T integrate_with_log_singularity(std::span<const T> smooth_samples,
                                 std::span<const T> log_factor_samples, int i,
                                 const LogKernelWeights& weights) {
    const int n = weights.n;
    if (static_cast<int>(smooth_samples.size()) != n ||
        static_cast<int>(log_factor_samples.size()) != n) {
        throw std::invalid_argument("integrate_with_log_singularity: sample/weight size mismatch");
    }
    if (i < 0 || i >= n) {
        throw std::invalid_argument("integrate_with_log_singularity: node index out of range");
    }
    T acc = trapezoid_periodic(smooth_samples, 2.0 * std::numbers::pi);
    T logsum{};
    for (int j = 0; j < n; ++j) {
        const int k = i - j >= 0 ? i - j : i - j + n;
        logsum += weights.w[k] * log_factor_samples[j];
    }
    return acc + 0.5 * logsum;
}

/// Low-order fallback: omit the singular node and add the analytic local
/// correction supplied by the caller.  For a periodic log singularity with
/// coefficient c and smooth diagonal value s the zero-mean correction is
/// c h ln(h/2pi) + s h, h = 2 pi / N, which makes the pure log kernel exact.
/// Used to cross-validate the spectral path.
template <typename T>
T punctured_trapezoid_log(std::span<const T> samples, int i, T correction) {
    const int n = static_cast<int>(samples.size());
    if (n == 0) throw std::invalid_argument("punctured_trapezoid_log: empty sample list");
    if (i < 0 || i >= n) {
        throw std::invalid_argument("punctured_trapezoid_log: node index out of range");
    }
    T acc{};
    for (int j = 0; j < n; ++j) {
        if (j != i) acc += samples[j];
    }
    return (2.0 * std::numbers::pi / n) * acc + correction;
}

} // namespace stripvortex
