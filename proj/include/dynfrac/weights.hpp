#pragma once

#include <array>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "dynfrac/laplace.hpp"
#include "dynfrac/material.hpp"
#include "dynfrac/solver.hpp"

namespace dynfrac {

// [i][j]: i = 0 for K_I, 1 for K_II; j = 0 for the normal load, 1 for the shear load.
template <class T>
using Quad = std::array<std::array<T, 2>, 2>;

struct ReflectionTiming {
    double t_l = 0.0;    // first arrival of the wave reflected from the boundary
    double theta = 0.0;  // incidence angle
};

ReflectionTiming reflection_timing(const CrackSetup& cs);

class WeightModel {
  public:
    explicit WeightModel(const CrackSetup& cs, const SolverOptions& opt = {},
                         const InversionConfig& inv = {}, unsigned threads = 0);

    const CrackSetup& setup() const { return cs_; }
    const SolverOptions& options() const { return opt_; }
    const InversionConfig& inversion() const { return inv_; }

    Quad<cplx> transform(double x0, cplx s) const;
    // W_{i,j}(x0, t)
    Quad<double> function(double x0, double t) const;
    // sqrt(pi (V t - x0) / 2) W_{i,j}(x0, t)
    Quad<double> dimensionless(double x0, double t) const;
    double normalization(double x0, double t) const;

    // evaluates the origin transforms at all abscissae, in parallel
    std::vector<Quad<cplx>> transforms(const std::vector<cplx>& s) const;
    std::size_t cache_size() const;

  private:
    Quad<cplx> origin(cplx s) const;

    CrackSetup cs_;
    SolverOptions opt_;
    InversionConfig inv_;
    unsigned threads_;
    std::array<double, 2> plane_{};
    mutable std::mutex mu_;
    mutable std::map<std::pair<double, double>, Quad<cplx>> cache_;
};

// i, j in {1, 2} (1 = I, 2 = II)
cplx weight_transform(int i, int j, double x0, cplx s, const CrackSetup& cs, const SolverOptions& opt = {});
double weight_function(int i, int j, double x0, double t, const CrackSetup& cs, const SolverOptions& opt = {},
                       const InversionConfig& inv = {});

enum class SweepAxis { Time, Speed, Depth };

struct WeightSample {
    double coordinate = 0.0;
    Quad<double> w{};  // dimensionless
    Quad<double> W{};
};

struct WeightTable {
    SweepAxis axis = SweepAxis::Time;
    CrackSetup setup;  // base setup; V or delta vary along the speed/depth axes
    double t = 0.0;    // fixed time for speed and depth sweeps
    std::vector<WeightSample> samples;
};

// Time axis: coordinate is t. Speed axis: coordinate is V/c_R at time t.
// Depth axis: coordinate is delta at time t. Weights are taken at x0 = 0.
WeightTable sweep(SweepAxis axis, const std::vector<double>& coords, const CrackSetup& base, double t,
                  const SolverOptions& opt = {}, const InversionConfig& inv = {}, unsigned threads = 0);

std::vector<double> linspace_step(double a, double b, double step);

}  // namespace dynfrac
