#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

namespace dynfrac {

using cplx = std::complex<double>;

// Nodes theta_j = 2 pi j / (2M+1), j = -M..M.
std::vector<double> circle_nodes(int M);

// Trigonometric-interpolant rule for (1/2 pi i) PV of the Cauchy integral over
// the unit circle, evaluated at e^{i theta}. samples[j] is the density at
// circle_nodes(M)[j].
cplx cauchy_pv_circle(const std::vector<cplx>& samples, double theta, int M);

// Scalar factorization g = F+ / F- of a symbol on the real line with g -> 1 at
// both ends and zero winding. The line is mapped onto the unit circle by
// P = tan(theta/2).
class CircleFactor {
  public:
    CircleFactor() = default;
    CircleFactor(std::function<cplx(double)> symbol, int M);

    int M() const { return M_; }
    // Total argument increment of the symbol divided by 2 pi, rounded.
    int winding() const { return winding_; }

    cplx log_symbol(double P) const;
    // (1/2 pi i) PV integral of log g(t) / (t - P) over the real line.
    cplx pv(double P) const;
    // Boundary values (F+, F-) on the real line.
    std::pair<cplx, cplx> boundary(double P) const;
    // F evaluated at z with Im z > 0 (F+) or Im z < 0 (1/F-, i.e. F- continued).
    cplx interior(cplx z) const;

  private:
    int M_ = 0;
    int winding_ = 0;
    std::vector<double> theta_;
    std::vector<cplx> log_nodes_;  // unwrapped log g at the nodes
    std::vector<cplx> density_;    // log g / (1 + e^{i theta})
    std::function<cplx(double)> symbol_;
};

}  // namespace dynfrac
