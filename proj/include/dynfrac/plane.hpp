#pragma once

#include <array>
#include <complex>
#include <functional>
#include <utility>

#include "dynfrac/factor.hpp"
#include "dynfrac/material.hpp"

namespace dynfrac {

// Fracture modes. Mode I pairs with symbol index 2, mode II with index 1.
enum class Mode { I, II };

inline int symbol_index(Mode m) { return m == Mode::I ? 2 : 1; }

// Whole-plane scalar coefficient at the dimensionless real p (s scaled to c_l).
// j = 1 uses beta in the prefactor, j = 2 uses alpha. Throws at p = 0.
cplx plane_coefficient(int j, double p, const CrackSetup& cs);

// Coefficient with the coth factor removed: finite at 0, tends to 1 at infinity.
cplx plane_split_symbol(int j, double p, const CrackSetup& cs);

// Finite value of lim p*coefficient (with sign flipped), j = 1, 2.
double plane_small_p_constant(int j, const CrackSetup& cs);

// coth(pi p) = i K+(p) / K-(p), both factor pairs.
std::pair<cplx, cplx> coth_factors(cplx p);
std::pair<cplx, cplx> coth_factors_alt(cplx p);

// Interior value exp{(1/2 pi i) int log g_j(t)/(t - z) dt} for Im z > 0.
cplx omega_plus_plane(int j, cplx z, const CrackSetup& cs);

// Dimensionless weight scalar for the mode (uses the closed-form gamma ratio).
double plane_weight_scalar(Mode m, const CrackSetup& cs);

// sqrt(2/(pi (Vt - x0))) * w; zero before the load is reached.
double plane_weight_function(Mode m, double x0, double t, const CrackSetup& cs);

// Laplace transform of the weight function, principal sqrt(s).
cplx plane_weight_transform(Mode m, double x0, cplx s, const CrackSetup& cs);

// Load transform on the real line for fixed dimensionless s' (q^-(t s', c_l s')).
using LoadTransform = std::function<cplx(double)>;

LoadTransform point_load_transform(double x0, double s_prime, const CrackSetup& cs);

// Boundary values of both scalar factorizations on the real line.
class PlaneFactorization {
  public:
    explicit PlaneFactorization(const CrackSetup& cs, int M = 400);
    // (F+, F-) of symbol j at real p
    std::pair<cplx, cplx> boundary(int j, double p) const;
    cplx interior(int j, cplx z) const;
    const CrackSetup& setup() const { return cs_; }

  private:
    CrackSetup cs_;
    std::array<CircleFactor, 2> f_;
};

// Laplace-domain SIF of mode j (symbol index) for real s' by quadrature of the
// contour integral along the real line.
cplx plane_sif_transform(int j, const LoadTransform& q, double s_prime,
                         const PlaneFactorization& pf);

struct ContourCheck {
    cplx main_route;  // indentation below the origin
    cplx alt_route;   // indentation above, constant fixed by regularity at 0
    double rel_diff() const;
};

ContourCheck contour_crosscheck(int j, const LoadTransform& q, double s_prime,
                                   const PlaneFactorization& pf);

}  // namespace dynfrac
