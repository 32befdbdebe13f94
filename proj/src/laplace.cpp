#include "dynfrac/laplace.hpp"

#include <boost/math/special_functions/binomial.hpp>
#include <numbers>

#include "dynfrac/errors.hpp"
#include "dynfrac/quadrature.hpp"

namespace dynfrac {

namespace {
using C = std::complex<double>;
constexpr double kPi = std::numbers::pi;
}  // namespace

void InversionConfig::validate() const {
    if (!(A > 0.0)) throw InputError("inversion: A must be positive");
    if (euler_terms < 1 || m <= euler_terms) throw InputError("inversion: need m > euler_terms >= 1");
}

double invert_trapezoid(const TransformFn& F, double t, double sigma, double h, int m,
                        InversionForm form) {
    if (!(t > 0.0)) throw DomainError("invert_trapezoid: t must be positive");
    if (m < 1) throw InputError("invert_trapezoid: m must be positive");
    double acc = 0.0;
    for (int n = 0; n <= m; ++n) {
        const double w = (n == 0 || n == m) ? 1.0 : 2.0;
        const double om = n * h;
        const C v = F(C(sigma, om));
        acc += form == InversionForm::Cosine ? w * v.real() * std::cos(om * t)
                                             : -w * v.imag() * std::sin(om * t);
    }
    return h * std::exp(sigma * t) / kPi * acc;
}

std::vector<C> euler_abscissae(double t, const InversionConfig& cfg) {
    if (!(t > 0.0)) throw DomainError("invert_euler: t must be positive");
    cfg.validate();
    std::vector<C> s(cfg.m + 1);
    for (int k = 0; k <= cfg.m; ++k) s[k] = C(cfg.A, 2.0 * kPi * k) / (2.0 * t);
    return s;
}

double euler_sum(const std::vector<C>& values, double t, const InversionConfig& cfg) {
    cfg.validate();
    if (static_cast<int>(values.size()) != cfg.m + 1) throw InputError("euler_sum: need m+1 values");
    std::vector<double> partial(cfg.m + 1);
    double acc = 0.5 * values[0].real();
    partial[0] = acc;
    for (int k = 1; k <= cfg.m; ++k) {
        acc += (k % 2 ? -1.0 : 1.0) * values[k].real();
        partial[k] = acc;
    }
    const int E = cfg.euler_terms;
    double avg = 0.0;
    for (int k = 0; k <= E; ++k)
        avg += boost::math::binomial_coefficient<double>(E, k) * partial[cfg.m - E + k];
    avg /= std::ldexp(1.0, E);
    return std::exp(0.5 * cfg.A) / t * avg;
}

double invert_euler(const TransformFn& F, double t, const InversionConfig& cfg) {
    const std::vector<C> s = euler_abscissae(t, cfg);
    std::vector<C> v(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) v[k] = F(s[k]);
    return euler_sum(v, t, cfg);
}

namespace {

template <class Fn>
C panel_sum(const Fn& f, double a, double b, C s, bool sqrt_map) {
    static const GaussRule g = gauss_legendre(16);
    // panel width resolves both the oscillation and the decay of e^{-st}
    const double rate = std::max(std::abs(s.imag()) / (2.0 * kPi), s.real());
    const int panels = std::max(1, static_cast<int>(std::ceil((b - a) * rate / 2.0)));
    const double h = (b - a) / panels;
    C acc = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * h;
        if (sqrt_map) {
            // tau = r^2 on each panel, so f ~ tau^{-1/2} stays integrable
            const double ra = std::sqrt(lo), rb = std::sqrt(lo + h);
            for (std::size_t n = 0; n < g.x.size(); ++n) {
                const double r = ra + 0.5 * (rb - ra) * (g.x[n] + 1.0);
                const double t = r * r;
                acc += (rb - ra) * g.w[n] * r * f(t) * std::exp(-s * t);
            }
        } else {
            for (std::size_t n = 0; n < g.x.size(); ++n) {
                const double t = lo + 0.5 * h * (g.x[n] + 1.0);
                acc += 0.5 * h * g.w[n] * f(t) * std::exp(-s * t);
            }
        }
    }
    return acc;
}

}  // namespace

C forward_laplace(const std::function<double(double)>& f, double T, C s) {
    if (!(s.real() > 0.0)) throw DomainError("forward_laplace: need Re s > 0");
    if (!(T > 0.0)) throw InputError("forward_laplace: T must be positive");
    // e^{-Re(s) t} < 1e-17 past the cut, so the remainder is dropped
    const double cut = 40.0 / s.real();
    if (cut < T) return panel_sum(f, 0.0, cut, s, true);
    return panel_sum(f, 0.0, T, s, true) + f(T) * std::exp(-s * T) / s;
}

C forward_laplace(const std::vector<double>& t, const std::vector<double>& f, C s) {
    if (!(s.real() > 0.0)) throw DomainError("forward_laplace: need Re s > 0");
    if (t.size() != f.size() || t.size() < 2) throw InputError("forward_laplace: bad table");
    C acc = 0.0;
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        const double a = t[i], b = t[i + 1];
        if (!(b > a)) throw InputError("forward_laplace: grid must increase");
        const double fa = f[i], fb = f[i + 1];
        acc += panel_sum([&](double x) { return fa + (fb - fa) * (x - a) / (b - a); }, a, b, s, false);
    }
    return acc + f.back() * std::exp(-s * t.back()) / s;
}

}  // namespace dynfrac
