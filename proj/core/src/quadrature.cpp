#include "stripvortex/quadrature.hpp"

#include <cmath>
#include <string>

namespace stripvortex {

LogKernelWeights log_kernel_weights(int n) {
    if (n < 8 || n % 2 != 0) {
        throw std::invalid_argument("log_kernel_weights: N must be even and >= 8, got " +
                                    std::to_string(n));
    }
    LogKernelWeights lw;
    lw.n = n;
    lw.w.assign(n, 0.0);
    const int half = n / 2;
    // Build k = 0 .. N/2 and mirror so w[k] == w[N-k] holds bit-exactly.
    for (int k = 0; k <= half; ++k) {
        double s = 0.0;
        for (int m = 1; m < half; ++m) {
            const int r = static_cast<int>((static_cast<long long>(m) * k) % n);
            s += std::cos(2.0 * std::numbers::pi * r / n) / m;
        }
        s += (k % 2 == 0 ? 1.0 : -1.0) / n; // halved Nyquist mode, cos(pi k)/N
        lw.w[k] = -(4.0 * std::numbers::pi / n) * s;
    }
    for (int k = half + 1; k < n; ++k) lw.w[k] = lw.w[n - k];
    return lw;
}

} // namespace stripvortex
