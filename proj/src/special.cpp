#include "dynfrac/special.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "dynfrac/errors.hpp"

namespace dynfrac {

namespace {

using C = std::complex<double>;

constexpr double kG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

const double kLogSqrt2Pi = 0.5 * std::log(2.0 * std::numbers::pi);

bool at_pole(C z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// Re z >= 0.5
C log_gamma_right(C z) {
    z -= 1.0;
    C x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + double(i));
    const C t = z + kG + 0.5;
    return kLogSqrt2Pi + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace

double tanh_pi_ratio(double p) {
    const double pi = std::numbers::pi;
    if (std::abs(p) < 1e-6) return pi * (1.0 - (pi * p) * (pi * p) / 3.0);
    return std::tanh(pi * p) / p;
}

C log_sin_pi(C z) {
    const double pi = std::numbers::pi;
    const C iz = C(0.0, pi) * z;
    if (std::abs(z.imag()) < 20.0) return std::log(std::sin(pi * z));
    // sin(pi z) = (e^{i pi z} - e^{-i pi z}) / 2i, keep the dominant exponent outside the log
    if (z.imag() > 0.0) return -iz - std::log(C(0.0, -2.0)) + std::log(1.0 - std::exp(2.0 * iz));
    return iz - std::log(C(0.0, 2.0)) + std::log(1.0 - std::exp(-2.0 * iz));
}

C log_gamma(C z) {
    if (at_pole(z)) throw DomainError("log_gamma: pole");
    if (z.real() >= 0.5) return log_gamma_right(z);
    // reflection
    return std::log(std::numbers::pi) - log_sin_pi(z) - log_gamma_right(1.0 - z);
}

C log_gamma_ratio(C z, double a, double b) {
    if (std::abs(z) < 1e3) return log_gamma(z + a) - log_gamma(z + b);
    // Bernoulli polynomials B_2..B_6
    auto bern = [](int k, double x) {
        switch (k) {
            case 2: return x * x - x + 1.0 / 6.0;
            case 3: return x * x * x - 1.5 * x * x + 0.5 * x;
            case 4: return x * x * x * x - 2.0 * x * x * x + x * x - 1.0 / 30.0;
            case 5: return std::pow(x, 5) - 2.5 * std::pow(x, 4) + 5.0 / 3.0 * x * x * x - x / 6.0;
            default: return std::pow(x, 6) - 3.0 * std::pow(x, 5) + 2.5 * std::pow(x, 4) - 0.5 * x * x + 1.0 / 42.0;
        }
    };
    C acc = (a - b) * std::log(z);
    C zk = z;
    for (int k = 1; k <= 5; ++k) {
        const double sign = (k % 2 == 1) ? 1.0 : -1.0;
        acc += sign * (bern(k + 1, a) - bern(k + 1, b)) / (k * (k + 1.0) * zk);
        zk *= z;
    }
    return acc;
}

C gamma_fn(C z) { return std::exp(log_gamma(z)); }

C rgamma(C z) {
    if (at_pole(z)) return 0.0;
    if (z.real() < 0.5 && std::abs(z.imag()) < 20.0)
        return std::sin(std::numbers::pi * z) * std::exp(log_gamma_right(1.0 - z)) / std::numbers::pi;
    return std::exp(-log_gamma(z));
}

}  // namespace dynfrac
