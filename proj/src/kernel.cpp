#include "dynfrac/kernel.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "dynfrac/errors.hpp"
#include "dynfrac/log.hpp"
#include "dynfrac/special.hpp"

namespace dynfrac {

namespace {

constexpr cplx kI(0.0, 1.0);

struct Core {
    cplx a, b, R1, R2, eDelta, d11, d22, g12;
};

// d11, d22 are the diagonal entries times p
Core core(double p, cplx s, double delta, const CrackSetup& cs) {
    Core c;
    std::tie(c.a, c.b) = alpha_beta(p, s, cs);
    const cplx a = c.a, b = c.b;
    const double p2 = p * p;
    const cplx pb = p2 + b * b;
    c.R1 = pb * pb - 4.0 * a * b * p2;
    c.R2 = pb * pb + 4.0 * a * b * p2;

    cplx ea = 0.0, eb = 0.0, eab = 0.0;
    if (std::isfinite(delta)) {
        ea = std::exp(-2.0 * a * delta);
        eb = std::exp(-2.0 * b * delta);
        eab = std::exp(-(a + b) * delta);
    }
    // e^{-A} sinh A, e^{-A} sinh B, e^{-A} sinh^2(A/2), e^{-A} sinh^2(B/2); A=(a+b)d, B=(a-b)d
    const cplx shA = 0.5 * (1.0 - eab * eab);
    const cplx shB = 0.5 * (eb - ea);
    const cplx sqA = 0.25 * (1.0 - 2.0 * eab + eab * eab);
    const cplx sqB = 0.25 * (eb - 2.0 * eab + ea);
    c.eDelta = c.R1 * c.R1 * sqA - c.R2 * c.R2 * sqB;
    const cplx b11 = c.R1 * shA - c.R2 * shB + 2.0 * c.eDelta / c.R1;
    const cplx b22 = c.R1 * shA + c.R2 * shB + 2.0 * c.eDelta / c.R1;
    const cplx den = p2 - b * b;
    c.d11 = b11 / (2.0 * b * den);
    c.d22 = b22 / (2.0 * a * den);
    c.g12 = 4.0 * c.R2 * pb / (c.R1 * den) * sqB;
    return c;
}

}  // namespace

SpectralSample matrix_entries(double p, cplx s, const CrackSetup& cs) {
    if (p == 0.0) throw DomainError("matrix_entries: diagonal entries have a pole at p = 0");
    if (!(s.real() > 0.0)) throw DomainError("matrix_entries: need Re s > 0");
    const Core c = core(p, s, cs.delta, cs);
    SpectralSample r;
    r.p = p;
    r.s = s;
    r.alpha = c.a;
    r.beta = c.b;
    r.R1 = c.R1;
    r.R2 = c.R2;
    r.Delta = c.eDelta;
    r.g11 = c.d11 / p;
    r.g22 = c.d22 / p;
    r.g12 = c.g12;
    return r;
}

SpectralScale spectral_scale(cplx s, const CrackSetup& cs) {
    if (!(s.real() > 0.0)) throw DomainError("spectral_scale: need Re s > 0");
    SpectralScale sc;
    sc.ell = std::abs(s) / cs.mat.c_l;
    sc.s_hat = s / sc.ell;
    sc.delta_hat = cs.delta * sc.ell;
    return sc;
}

std::pair<cplx, cplx> split_diagonal(double P, const SpectralScale& sc, const CrackSetup& cs) {
    const Core c = core(P, sc.s_hat, sc.delta_hat, cs);
    const double tr = tanh_pi_ratio(P);
    return {c.d11 * tr / (-cs.gamma(1)), c.d22 * tr / (-cs.gamma(2))};
}

cplx coupling_entry(double P, const SpectralScale& sc, const CrackSetup& cs) {
    return core(P, sc.s_hat, sc.delta_hat, cs).g12;
}

DiagonalFactor::DiagonalFactor(cplx s, const CrackSetup& cs, int M) : sc_(spectral_scale(s, cs)) {
    const SpectralScale sc = sc_;
    f_[0] = CircleFactor([sc, cs](double P) { return split_diagonal(P, sc, cs).first; }, M);
    f_[1] = CircleFactor([sc, cs](double P) { return split_diagonal(P, sc, cs).second; }, M);
}

std::pair<cplx, cplx> DiagonalFactor::boundary(int j, double P) const {
    if (j != 1 && j != 2) throw InputError("DiagonalFactor: index must be 1 or 2");
    return f_[j - 1].boundary(P);
}

cplx DiagonalFactor::interior(int j, cplx Z) const {
    if (j != 1 && j != 2) throw InputError("DiagonalFactor: index must be 1 or 2");
    return f_[j - 1].interior(Z);
}

DiagonalFactor factorize_diagonal(cplx s, const CrackSetup& cs, int M, bool refine, double tol,
                                  int max_M) {
    DiagonalFactor f(s, cs, M);
    if (!refine) return f;
    static const double probes[] = {-10.0, -3.0, -1.0, -0.3, 0.0, 0.3, 1.0, 3.0, 10.0};
    while (true) {
        if (2 * f.M() > max_M) break;
        DiagonalFactor g(s, cs, 2 * f.M());
        double change = 0.0;
        for (int j = 1; j <= 2; ++j)
            for (double P : probes) {
                const cplx a = f.boundary(j, P).first, b = g.boundary(j, P).first;
                change = std::max(change, std::abs(a - b) / std::abs(b));
            }
        f = std::move(g);
        if (change < tol) return f;
    }
    std::ostringstream os;
    os << "circle quadrature not converged at s = " << s << " with M = " << f.M();
    log_warning(os.str());
    return f;
}

std::pair<cplx, cplx> off_diagonal_symbols(double P, const CrackSetup& cs, const DiagonalFactor& f) {
    const cplx g12 = coupling_entry(P, f.scale(), cs);
    if (g12 == 0.0) return {0.0, 0.0};
    const double th = std::tanh(std::numbers::pi * P);
    const auto o11 = f.boundary(1, P);
    const auto o22 = f.boundary(2, P);
    return {-kI * g12 * th * o22.second / o11.first, kI * g12 * th * o11.second / o22.first};
}

}  // namespace dynfrac
