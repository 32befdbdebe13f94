#include "dynfrac/material.hpp"

#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <limits>

#include "dynfrac/errors.hpp"

namespace dynfrac {

std::pair<double, double> derive_speeds(double mu, double nu, double rho) {
    if (!(mu > 0.0) || !(rho > 0.0) || !(nu > 0.0) || !(nu < 0.5))
        throw DomainError("derive_speeds: need mu > 0, rho > 0, 0 < nu < 0.5");
    const double lambda = 2.0 * mu * nu / (1.0 - 2.0 * nu);
    return {std::sqrt((lambda + 2.0 * mu) / rho), std::sqrt(mu / rho)};
}

Material Material::from_moduli(double mu, double nu, double rho) {
    Material m;
    m.mu = mu;
    m.nu = nu;
    m.rho = rho;
    std::tie(m.c_l, m.c_s) = derive_speeds(mu, nu, rho);
    m.c_R = rayleigh_speed(m);
    return m;
}

Material Material::from_speed(double nu, double c_l, double mu) {
    if (!(c_l > 0.0)) throw DomainError("from_speed: c_l must be positive");
    if (!(nu > 0.0) || !(nu < 0.5)) throw DomainError("from_speed: need 0 < nu < 0.5");
    const double ratio = (2.0 - 2.0 * nu) / (1.0 - 2.0 * nu);  // (lambda+2mu)/mu
    return from_moduli(mu, nu, mu * ratio / (c_l * c_l));
}

double rayleigh_function(double V, const Material& m) {
    if (V < 0.0 || V >= m.c_s) throw DomainError("rayleigh_function: need 0 <= V < c_s");
    const double vl = V / m.c_l, vs = V / m.c_s;
    const double ah = std::sqrt(1.0 - vl * vl), bh = std::sqrt(1.0 - vs * vs);
    return 4.0 * ah * bh - (1.0 + bh * bh) * (1.0 + bh * bh);
}

double rayleigh_speed(const Material& m) {
    auto f = [&](double V) { return rayleigh_function(V, m); };
    double lo = 0.5 * m.c_s;
    const double hi = m.c_s * (1.0 - 1e-9);
    if (f(hi) >= 0.0) throw NumericalError("rayleigh_speed: no sign change near c_s");
    int guard = 0;
    while (f(lo) <= 0.0) {
        lo *= 0.5;
        if (++guard > 60) throw NumericalError("rayleigh_speed: bracket expansion failed");
    }
    auto tol = [](double a, double b) { return std::abs(b - a) <= 1e-13 * std::abs(a); };
    auto r = boost::math::tools::bisect(f, lo, hi, tol);
    return 0.5 * (r.first + r.second);
}

double CrackSetup::alpha_hat() const {
    const double v = v_l();
    return std::sqrt(1.0 - v * v);
}

double CrackSetup::beta_hat() const {
    const double v = v_s();
    return std::sqrt(1.0 - v * v);
}

double CrackSetup::gamma(int j) const {
    const double vs = v_s();
    const double r = R0();
    return j == 1 ? r / (2.0 * beta_hat() * vs * vs) : r / (2.0 * alpha_hat() * vs * vs);
}

bool CrackSetup::is_plane() const { return std::isinf(delta); }

CrackSetup make_setup(const Material& m, double V, double delta, double x0) {
    if (!(V > 0.0) || !(V < m.c_R))
        throw DomainError("crack speed must satisfy 0 < V < c_R");
    if (!(delta > 0.0)) throw DomainError("depth must be positive");
    if (x0 > 0.0) throw DomainError("load abscissa must be <= 0");
    CrackSetup cs;
    cs.mat = m;
    cs.V = V;
    cs.delta = delta;
    cs.x0 = x0;
    return cs;
}

BranchPoints branch_points(cplx s, const CrackSetup& cs) {
    const cplx is = cplx(0.0, 1.0) * s;
    const double V = cs.V;
    return {is / (V + cs.mat.c_l), is / (V - cs.mat.c_l), is / (V + cs.mat.c_s),
            is / (V - cs.mat.c_s)};
}

cplx sqrt_re(cplx z) {
    cplx r = std::sqrt(z);
    return r.real() < 0.0 ? -r : r;
}

std::pair<cplx, cplx> alpha_beta(double p, cplx s, const CrackSetup& cs) {
    const cplx S = s + cplx(0.0, cs.V * p);
    const cplx a2 = p * p + (S / cs.mat.c_l) * (S / cs.mat.c_l);
    const cplx b2 = p * p + (S / cs.mat.c_s) * (S / cs.mat.c_s);
    return {sqrt_re(a2), sqrt_re(b2)};
}

}  // namespace dynfrac
