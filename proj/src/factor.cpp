#include "dynfrac/factor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dynfrac/errors.hpp"

namespace dynfrac {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr cplx kI(0.0, 1.0);
}  // namespace

std::vector<double> circle_nodes(int M) {
    const int n = 2 * M + 1;
    std::vector<double> th(n);
    for (int j = -M; j <= M; ++j) th[j + M] = 2.0 * kPi * j / n;
    return th;
}

cplx cauchy_pv_circle(const std::vector<cplx>& samples, double theta, int M) {
    const int n = 2 * M + 1;
    if (static_cast<int>(samples.size()) != n) throw InputError("cauchy_pv_circle: need 2M+1 samples");
    cplx acc = 0.0;
    for (int j = 0; j < n; ++j) {
        const double u = theta - 2.0 * kPi * (j - M) / n;
        const double den = std::sin(0.5 * u);
        double d = 0.0;
        if (std::abs(den) > 1e-14) d = std::sin(0.5 * M * u) * std::sin(0.5 * (M + 1) * u) / den;
        acc += (0.5 + kI * d) * samples[j];
    }
    return acc / double(n);
}

CircleFactor::CircleFactor(std::function<cplx(double)> symbol, int M)
    : M_(M), symbol_(std::move(symbol)) {
    if (M < 1) throw InputError("CircleFactor: M must be positive");
    theta_ = circle_nodes(M);
    const int n = 2 * M + 1;
    log_nodes_.resize(n);
    density_.resize(n);
    double prev = 0.0;
    for (int j = 0; j < n; ++j) {
        const cplx g = symbol_(std::tan(0.5 * theta_[j]));
        if (!std::isfinite(g.real()) || !std::isfinite(g.imag()) || g == 0.0)
            throw FactorizationError("symbol is singular or zero on the contour");
        double ph = std::arg(g);
        if (j > 0) ph += 2.0 * kPi * std::round((prev - ph) / (2.0 * kPi));
        prev = ph;
        log_nodes_[j] = cplx(std::log(std::abs(g)), ph);
        density_[j] = log_nodes_[j] / (1.0 + std::exp(kI * theta_[j]));
    }
    const double total = log_nodes_.back().imag() - log_nodes_.front().imag();
    winding_ = static_cast<int>(std::lround(total / (2.0 * kPi)));
    if (winding_ != 0) throw FactorizationError("symbol has nonzero winding number");
}

cplx CircleFactor::log_symbol(double P) const {
    const cplx g = symbol_(P);
    const double th = 2.0 * std::atan(P);
    // same branch as the nearest node
    const int n = 2 * M_ + 1;
    int j = static_cast<int>(std::lround(th * n / (2.0 * kPi))) + M_;
    j = std::clamp(j, 0, n - 1);
    double ph = std::arg(g);
    ph += 2.0 * kPi * std::round((log_nodes_[j].imag() - ph) / (2.0 * kPi));
    return {std::log(std::abs(g)), ph};
}

cplx CircleFactor::pv(double P) const {
    const double th = 2.0 * std::atan(P);
    return (1.0 + std::exp(kI * th)) * cauchy_pv_circle(density_, th, M_);
}

std::pair<cplx, cplx> CircleFactor::boundary(double P) const {
    const cplx half = 0.5 * log_symbol(P);
    const cplx v = pv(P);
    return {std::exp(v + half), std::exp(v - half)};
}

cplx CircleFactor::interior(cplx z) const {
    const cplx zp = (1.0 + kI * z) / (1.0 - kI * z);
    cplx acc = 0.0;
    for (std::size_t j = 0; j < theta_.size(); ++j) {
        const cplx t = std::exp(kI * theta_[j]);
        acc += density_[j] * t / (t - zp);
    }
    return std::exp((1.0 + zp) * acc / double(theta_.size()));
}

}  // namespace dynfrac
