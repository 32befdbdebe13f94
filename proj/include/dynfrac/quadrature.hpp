#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace dynfrac {

struct GaussRule {
    std::vector<double> x;  // ascending roots of P_n on (-1, 1)
    std::vector<double> w;  // 2 / ((1 - x^2) P_n'(x)^2)
};

GaussRule gauss_legendre(int n);

using RealFn = std::function<double(double)>;
using ComplexFn = std::function<std::complex<double>(double)>;

// Adaptive Gauss-Kronrod (15 point) on [a, b]; infinite limits allowed.
double integrate(const RealFn& f, double a, double b, double tol = 1e-12, int depth = 18);
std::complex<double> integrate(const ComplexFn& f, double a, double b, double tol = 1e-12,
                               int depth = 18);

}  // namespace dynfrac
