#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace dynfrac {

using TransformFn = std::function<std::complex<double>(std::complex<double>)>;

struct InversionConfig {
    double A = 8.0 * std::log(10.0);
    int m = 40;
    int euler_terms = 12;

    void validate() const;
};

enum class InversionForm { Cosine, Sine };

// Plain trapezoid on the Bromwich line Re s = sigma with step h and m+1 points.
double invert_trapezoid(const TransformFn& F, double t, double sigma, double h, int m,
                        InversionForm form = InversionForm::Cosine);

// Abscissae used by invert_euler for time t.
std::vector<std::complex<double>> euler_abscissae(double t, const InversionConfig& cfg = {});

// Euler-accelerated alternating series from precomputed values F(s_k).
double euler_sum(const std::vector<std::complex<double>>& values, double t, const InversionConfig& cfg = {});

double invert_euler(const TransformFn& F, double t, const InversionConfig& cfg = {});

// int_0^T f(t) e^{-st} dt by Gauss panels sized to the oscillation of e^{-st};
// beyond T the integrand is treated as f(T) e^{-st}. Panels are integrated in
// sqrt(t), so an integrable t^{-1/2} singularity at the origin is allowed.
std::complex<double> forward_laplace(const std::function<double(double)>& f, double T,
                                     std::complex<double> s);

// Same for samples on an increasing grid starting at 0 (piecewise-linear).
std::complex<double> forward_laplace(const std::vector<double>& t, const std::vector<double>& f,
                                     std::complex<double> s);

}  // namespace dynfrac
