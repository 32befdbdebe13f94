#pragma once

#include <complex>
#include <utility>

namespace dynfrac {

using cplx = std::complex<double>;

// Plane-strain wave speeds (c_l, c_s) from shear modulus, Poisson ratio, density.
std::pair<double, double> derive_speeds(double mu, double nu, double rho);

struct Material {
    double mu = 1.0;
    double nu = 0.3;
    double rho = 1.0;
    double c_l = 0.0;
    double c_s = 0.0;
    double c_R = 0.0;

    static Material from_moduli(double mu, double nu, double rho);
    // Density chosen so that the longitudinal speed equals c_l.
    static Material from_speed(double nu, double c_l, double mu = 1.0);
};

// 4*ah*bh - (1+bh^2)^2 for crack speed V.
double rayleigh_function(double V, const Material& m);
double rayleigh_speed(const Material& m);

struct CrackSetup {
    Material mat;
    double V = 0.0;
    double delta = 1.0;  // distance to the free boundary; +inf selects the whole plane
    double x0 = 0.0;

    double v_l() const { return V / mat.c_l; }
    double v_s() const { return V / mat.c_s; }
    double alpha_hat() const;
    double beta_hat() const;
    double R0() const { return rayleigh_function(V, mat); }
    // Large-|p| constants of the two scalar symbols (j = 1 shear, j = 2 opening).
    double gamma(int j) const;
    bool is_plane() const;
};

// Validates 0 < V < c_R and delta > 0.
CrackSetup make_setup(const Material& m, double V, double delta, double x0 = 0.0);

struct BranchPoints {
    cplx a_plus, a_minus, b_plus, b_minus;
};

BranchPoints branch_points(cplx s, const CrackSetup& cs);

// Square root with nonnegative real part.
cplx sqrt_re(cplx z);

// alpha, beta on the real p axis, Re >= 0.
std::pair<cplx, cplx> alpha_beta(double p, cplx s, const CrackSetup& cs);

}  // namespace dynfrac
