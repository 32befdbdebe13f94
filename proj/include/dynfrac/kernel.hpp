#pragma once

#include <array>
#include <complex>
#include <utility>

#include "dynfrac/factor.hpp"
#include "dynfrac/material.hpp"

namespace dynfrac {

// Symbol values at one real wavenumber. Hyperbolic products carry the factor
// e^{-(alpha+beta) delta}; Delta is stored in that scaled form.
struct SpectralSample {
    double p = 0.0;
    cplx s;
    cplx alpha, beta;
    cplx R1, R2, Delta;
    cplx g11, g12, g22;
};

// Entries of the matrix symbol at real p != 0, Re s > 0. delta = inf gives the
// whole-plane limit (g12 = 0).
SpectralSample matrix_entries(double p, cplx s, const CrackSetup& cs);

// Rescaling used by every half-plane evaluation: P = p/ell, s_hat = s/ell,
// delta_hat = ell*delta, X = ell*x with ell = |s|/c_l.
struct SpectralScale {
    double ell = 1.0;
    cplx s_hat;
    double delta_hat = 1.0;
};

SpectralScale spectral_scale(cplx s, const CrackSetup& cs);

// Diagonal symbols with the coth factor divided out, in scaled variables.
// Finite at P = 0 and -> 1 as |P| -> inf.
std::pair<cplx, cplx> split_diagonal(double P, const SpectralScale& sc, const CrackSetup& cs);

// Off-diagonal entry g12 in scaled variables (overflow safe, finite at 0).
cplx coupling_entry(double P, const SpectralScale& sc, const CrackSetup& cs);

class DiagonalFactor {
  public:
    DiagonalFactor(cplx s, const CrackSetup& cs, int M);

    const SpectralScale& scale() const { return sc_; }
    int M() const { return f_[0].M(); }
    // (Omega_jj+, Omega_jj-) at real scaled P, j = 1, 2
    std::pair<cplx, cplx> boundary(int j, double P) const;
    // Omega_jj at scaled Z off the real line
    cplx interior(int j, cplx Z) const;

  private:
    SpectralScale sc_;
    std::array<CircleFactor, 2> f_;
};

// With refine = true, M is doubled (up to max_M) until boundary values on a
// probe grid move by less than tol; a warning is logged if that fails.
DiagonalFactor factorize_diagonal(cplx s, const CrackSetup& cs, int M, bool refine = false,
                                  double tol = 1e-6, int max_M = 3200);

// Continuous off-diagonal symbols at real scaled P.
std::pair<cplx, cplx> off_diagonal_symbols(double P, const CrackSetup& cs, const DiagonalFactor& f);

}  // namespace dynfrac
