#include "dynfrac/plane.hpp"

#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "dynfrac/errors.hpp"
#include "dynfrac/quadrature.hpp"
#include "dynfrac/special.hpp"

namespace dynfrac {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx kI(0.0, 1.0);

// p * coefficient, finite at 0
cplx scaled_coefficient(int j, double p, const CrackSetup& cs) {
    auto [a, b] = alpha_beta(p, cs.mat.c_l, cs);
    const double p2 = p * p;
    const cplx R1 = (p2 + b * b) * (p2 + b * b) - 4.0 * a * b * p2;
    const cplx pref = j == 1 ? b : a;
    return R1 / (2.0 * pref * (p2 - b * b));
}

void check_index(int j) {
    if (j != 1 && j != 2) throw InputError("symbol index must be 1 or 2");
}

}  // namespace

cplx plane_coefficient(int j, double p, const CrackSetup& cs) {
    check_index(j);
    if (p == 0.0) throw DomainError("plane_coefficient: pole at p = 0");
    return scaled_coefficient(j, p, cs) / p;
}

cplx plane_split_symbol(int j, double p, const CrackSetup& cs) {
    check_index(j);
    return scaled_coefficient(j, p, cs) * tanh_pi_ratio(p) / (-cs.gamma(j));
}

double plane_small_p_constant(int j, const CrackSetup& cs) {
    check_index(j);
    return -scaled_coefficient(j, 0.0, cs).real();
}

std::pair<cplx, cplx> coth_factors(cplx p) {
    const cplx ip = kI * p;
    const cplx kp = std::exp(log_gamma_ratio(-ip, 1.0, 0.5));
    const cplx km = std::exp(log_gamma_ratio(ip, 0.5, 0.0));
    return {kp, km};
}

std::pair<cplx, cplx> coth_factors_alt(cplx p) {
    const cplx ip = kI * p;
    const cplx kp = -std::exp(log_gamma_ratio(-ip, 0.0, 0.5));
    const cplx km = std::exp(log_gamma_ratio(ip, 0.5, 1.0));
    return {kp, km};
}

cplx omega_plus_plane(int j, cplx z, const CrackSetup& cs) {
    check_index(j);
    if (!(z.imag() > 0.0)) throw DomainError("omega_plus_plane: z must lie in the upper half-plane");
    // winding and branch check on a dense grid of the mapped line
    const int n = 4001;
    double prev = 0.0, total = 0.0;
    for (int k = 1; k < n; ++k) {
        const double th = -0.5 * kPi + kPi * k / n;
        const double ph = std::arg(plane_split_symbol(j, std::tan(th), cs));
        if (k > 1) {
            double d = ph - prev;
            d -= 2.0 * kPi * std::round(d / (2.0 * kPi));
            total += d;
        }
        if (std::abs(total) > 0.9 * kPi)
            throw FactorizationError("omega_plus_plane: argument leaves the principal branch");
        prev = ph;
    }
    if (std::lround(total / (2.0 * kPi)) != 0) throw FactorizationError("nonzero winding");

    auto f = [&](double th) -> cplx {
        const double c = std::cos(th);
        const double t = std::tan(th);
        return std::log(plane_split_symbol(j, t, cs)) / (t - z) / (c * c);
    };
    const double eps = 0.5 * kPi;
    const cplx v = integrate(ComplexFn(f), -eps, 0.0, 1e-13) + integrate(ComplexFn(f), 0.0, eps, 1e-13);
    return std::exp(v / (2.0 * kPi * kI));
}

double plane_weight_scalar(Mode m, const CrackSetup& cs) {
    // depends only on the mode, the speeds and V; memoized because the
    // Cauchy integral dominates the cost of transform evaluations
    static std::mutex mu;
    static std::map<std::array<double, 5>, double> memo;
    const std::array<double, 5> key{m == Mode::I ? 1.0 : 2.0, cs.mat.c_l, cs.mat.c_s, cs.mat.c_R, cs.V};
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    const double vl = cs.v_l();
    const double ratio = std::exp(std::lgamma(0.5 + 1.0 / vl) - std::lgamma(1.0 + 1.0 / vl));
    const cplx om = omega_plus_plane(symbol_index(m), cplx(0.0, 1.0 / vl), cs);
    const double w = ratio / (std::sqrt(vl) * om.real());
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(key, w);
    return w;
}

double plane_weight_function(Mode m, double x0, double t, const CrackSetup& cs) {
    const double d = cs.V * t - x0;
    if (d <= 0.0) return 0.0;
    return std::sqrt(2.0 / (kPi * d)) * plane_weight_scalar(m, cs);
}

cplx plane_weight_transform(Mode m, double x0, cplx s, const CrackSetup& cs) {
    const double w = plane_weight_scalar(m, cs);
    return w * std::sqrt(2.0 / (cs.V * s)) * std::exp(-s * x0 / cs.V);
}

LoadTransform point_load_transform(double x0, double s_prime, const CrackSetup& cs) {
    const double vl = cs.v_l();
    const double amp = std::exp(-s_prime * x0 / vl) / (cs.mat.c_l * s_prime);
    return [amp, vl](double t) { return amp / (1.0 + kI * t * vl); };
}

PlaneFactorization::PlaneFactorization(const CrackSetup& cs, int M) : cs_(cs) {
    for (int j = 1; j <= 2; ++j)
        f_[j - 1] = CircleFactor([cs, j](double p) { return plane_split_symbol(j, p, cs); }, M);
}

std::pair<cplx, cplx> PlaneFactorization::boundary(int j, double p) const {
    check_index(j);
    return f_[j - 1].boundary(p);
}

cplx PlaneFactorization::interior(int j, cplx z) const {
    check_index(j);
    return f_[j - 1].interior(z);
}

namespace {

// int over the real line of h(t), t = sinh(u); h decays like |t|^{-3/2}
cplx line_integral(const std::function<cplx(double)>& h) {
    auto f = [&](double u) { return h(std::sinh(u)) * std::cosh(u); };
    constexpr double U = 60.0;
    return integrate(ComplexFn(f), -U, 0.0, 1e-10, 12) + integrate(ComplexFn(f), 0.0, U, 1e-10, 12);
}

}  // namespace

cplx plane_sif_transform(int j, const LoadTransform& q, double s_prime, const PlaneFactorization& pf) {
    check_index(j);
    if (!(s_prime > 0.0)) throw DomainError("plane_sif_transform: s' must be positive");
    auto h = [&](double t) {
        const cplx kp = coth_factors(t).first;
        return q(t) / (kp * pf.boundary(j, t).first);
    };
    const cplx psi = line_integral(h) / (2.0 * kPi * kI);
    const cplx k = std::sqrt(2.0) * kI * psi * std::sqrt(s_prime);
    if (!std::isfinite(k.real()) || !std::isfinite(k.imag()))
        throw NumericalError("plane_sif_transform: quadrature diverged");
    return k;
}

double ContourCheck::rel_diff() const {
    const double scale = std::max(std::abs(main_route), std::abs(alt_route));
    return scale == 0.0 ? 0.0 : std::abs(main_route - alt_route) / scale;
}

ContourCheck contour_crosscheck(int j, const LoadTransform& q, double s_prime,
                                const PlaneFactorization& pf) {
    check_index(j);
    ContourCheck r;
    r.main_route = plane_sif_transform(j, q, s_prime, pf);
    // 1/(K~+(t) t) is regular at 0; evaluate in logs away from it
    auto inv_alt = [](double t) -> cplx {
        const cplx it = kI * t;
        if (std::abs(t) < 1.0) return -gamma_fn(0.5 - it) * rgamma(-it) / t;
        return -std::exp(log_gamma_ratio(-it, 0.5, 0.0)) / t;
    };
    auto h = [&](double t) { return q(t) * inv_alt(t) / pf.boundary(j, t).first; };
    const cplx psi0 = line_integral(h) / (2.0 * kPi * kI);
    // C = -psi0 and the large-p behaviour -(-ip)^{-1/2} C give the SIF
    r.alt_route = std::sqrt(2.0 * s_prime) * psi0;
    return r;
}

}  // namespace dynfrac
