#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <vector>

#include "dynfrac/kernel.hpp"
#include "dynfrac/material.hpp"

namespace dynfrac {

enum class LoadMode { NormalPoint, ShearPoint, Tabulated };

struct LoadSpec {
    LoadMode mode = LoadMode::NormalPoint;
    double x0 = 0.0;
    // tabulated crack-face tractions on an increasing abscissa grid
    std::vector<double> x;
    std::vector<double> sigma12;
    std::vector<double> sigma22;

    static LoadSpec normal(double x0 = 0.0) { return {LoadMode::NormalPoint, x0, {}, {}, {}}; }
    static LoadSpec shear(double x0 = 0.0) { return {LoadMode::ShearPoint, x0, {}, {}, {}}; }
};

struct SolverOptions {
    int N = 24;        // collocation points
    int M = 400;       // circle nodes parameter (2M+1 nodes)
    double L = 1.0;    // Moebius map length
    bool refine_M = false;
    // re-solve at 2N and warn when a tip unknown moves by more than doubling_tol
    bool check_doubling = false;
    double doubling_tol = 1e-5;
};

// Legendre roots mapped to X = L(x'-1)/(x'+1) in (-inf, 0) with the
// transformed weights v_k * 2L/(x'_k+1)^2.
struct Collocation {
    std::vector<double> xi, X, weight;
};

Collocation collocation(int N, double L = 1.0);

// gamma_j u_j(X) + int_{-inf}^0 k_j(X - Y) u_{3-j}(Y) dY = f_j(X), j = 1, 2.
// kernel[j] holds k_j(X_n - X_k) with a final row at X = 0; rhs[j] likewise.
struct CoupledSystem {
    std::array<double, 2> gamma{1.0, 1.0};
    std::array<Eigen::MatrixXcd, 2> kernel;
    std::array<Eigen::VectorXcd, 2> rhs;
    Eigen::VectorXd weight;
};

struct CoupledSolution {
    std::array<Eigen::VectorXcd, 2> nodes;
    std::array<cplx, 2> endpoint;  // natural extension to X = 0
};

CoupledSolution solve_coupled(const CoupledSystem& sys);

struct SifTransformRecord {
    cplx s;
    cplx K_I, K_II;
    cplx chi1, chi2;  // crack-face unknowns at the tip, K_I = -sqrt2 gamma_2 chi2
    double doubling_drift = -1.0;  // max relative change of chi1, chi2 under N -> 2N; -1 if not checked
};

// Everything that depends on (s, setup, N, M) but not on the load.
class KernelTable {
  public:
    KernelTable(cplx s, const CrackSetup& cs, const SolverOptions& opt = {});

    cplx s() const { return s_; }
    const CrackSetup& setup() const { return cs_; }
    const DiagonalFactor& factor() const { return factor_; }
    const Collocation& nodes() const { return col_; }
    // k_j in scaled variables at scaled X
    cplx kernel_scaled(int j, double X) const;
    const Eigen::MatrixXcd& kernel_matrix(int j) const { return kmat_[j - 1]; }
    double p_max() const { return p_max_; }
    double p_step() const { return dp_; }

    SifTransformRecord solve(const LoadSpec& load) const;
    // both point loads at x0 = 0; [i][j]: i = K_I/K_II, j = normal/shear
    std::array<std::array<cplx, 2>, 2> unit_responses() const;

  private:
    std::array<cplx, 2> point_solve(int loaded, double x0) const;

    cplx s_;
    CrackSetup cs_;
    DiagonalFactor factor_;
    Collocation col_;
    double p_max_ = 0.0, dp_ = 0.0;
    std::vector<double> P_;
    std::array<Eigen::VectorXcd, 2> sym_;   // off-diagonal symbols on the P grid
    Eigen::MatrixXcd phase_;                // e^{-i P X_n}, last row X = 0
    std::array<Eigen::MatrixXcd, 2> kmat_;  // (N+1) x N
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu_;
    std::array<std::array<cplx, 2>, 2> chi_unit_{};
};

// k_j*(x, s) in physical units (1/m), any sign of x.
cplx kernel_kstar(int j, double x, const KernelTable& table);

// q_j*(x, s) for point loads; x <= 0 in metres.
cplx rhs_qstar(int j, double x, const LoadSpec& load, const KernelTable& table);

SifTransformRecord solve_system(cplx s, const LoadSpec& load, const CrackSetup& cs,
                                const SolverOptions& opt = {});

// int sigma(x) e^{-s x / V} dx over the tabulated grid (cubic interpolation, Gauss panels).
cplx load_moment(const std::vector<double>& x, const std::vector<double>& sigma, cplx s, double V);

}  // namespace dynfrac
