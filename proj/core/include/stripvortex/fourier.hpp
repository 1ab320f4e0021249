#pragma once

#include <span>
#include <vector>

namespace stripvortex {

// Trigonometric interpolant of real samples on the uniform periodic grid
// alpha_j = 2 pi j / N, N even.  The Nyquist mode is kept as the real term
// (a_{N/2}/2) cos((N/2) alpha), the standard trapezoid treatment; its
// derivative vanishes at the nodes.
class TrigSeries {
  public:
    explicit TrigSeries(std::span<const double> samples);

    double eval(double alpha) const;
    double deriv(double alpha) const;

    // Derivative of the interpolant at the construction grid.
    std::vector<double> deriv_at_nodes() const;

    // Antiderivative with F(0) = 0; the mean contributes the linear term.
    double antiderivative(double alpha) const;

    double mean() const { return 0.5 * a_[0]; }
    int size() const { return n_; }

  private:
    int n_;
    std::vector<double> a_; // a_[m], m = 0 .. n/2
    std::vector<double> b_; // b_[m], m = 1 .. n/2 - 1 (b_[0] unused)
};

} // namespace stripvortex
