#pragma once

#include <array>
#include <functional>
#include <memory>
#include <vector>

#include "dynfrac/laplace.hpp"
#include "dynfrac/material.hpp"
#include "dynfrac/solver.hpp"
#include "dynfrac/weights.hpp"

namespace dynfrac {

// Stress pairs are ordered {sigma22, sigma12}, matching the weight columns
// (normal load first).
using StressPair = std::array<double, 2>;

// Polygonal crack-length history l(t) through the vertices (t_k, l_k).
struct SpeedSchedule {
    std::vector<double> t;
    std::vector<double> l;

    std::size_t stages() const { return t.empty() ? 0 : t.size() - 1; }
    double speed(std::size_t k) const { return (l[k + 1] - l[k]) / (t[k + 1] - t[k]); }
    void validate(const Material& m) const;
};

struct PointStress {
    double x = 0.0;
    double sigma12 = 0.0;
    double sigma22 = 0.0;
};

// Pre-existing stresses on the crack line: a piecewise-linear table plus
// concentrated loads. Zero outside the table.
struct StressProfile {
    std::vector<double> x, sigma12, sigma22;
    std::vector<PointStress> points;

    void validate() const;
    bool has_table() const { return !x.empty(); }
    StressPair at(double x1) const;
};

// Time-domain weight functions W_{i,j}(0, t; V) on [0, t_max].
class TimeWeights {
  public:
    TimeWeights(const WeightModel& model, double t_max, int points);

    double speed() const { return V_; }
    double t_max() const { return t_max_; }
    Quad<double> W(double t) const;
    Quad<double> w(double t) const;

  private:
    CrackSetup cs_;
    double V_, t_max_, t_start_ = 0.0, dt_ = 0.0;
    Quad<double> plane_{};
    std::vector<Quad<double>> grid_;
};

// Stresses radiated ahead of a stopped tip: sigma(x1) = pi((x1 - origin)/V), x1 > origin.
struct RadiatedStress {
    double origin = 0.0;
    double V = 1.0;
    double tau_max = 0.0;
    std::vector<double> tau;
    std::array<std::vector<double>, 2> scaled;  // sqrt(tau) * pi on tau, uniform in sqrt(tau)

    bool empty() const { return tau.empty(); }
    StressPair pi(double tau_prime) const;
    StressPair at(double x1) const;
};

struct GrowthOptions {
    SolverOptions solver;
    InversionConfig inversion;
    int weight_points = 48;     // time grid for half-plane W
    int radiated_points = 40;   // tau' grid for each radiated stress
    int omega_points = 400;     // tabulation of omega
    int sif_points = 40;        // SIF samples per stage
    double det_tol = 1e-10;     // relative |det W| threshold
    unsigned threads = 0;
};

struct StageResult {
    std::size_t k = 0;
    double V = 0.0;
    double t_start = 0.0, t_end = 0.0, l_start = 0.0, l_end = 0.0;
    RadiatedStress radiated;  // empty for the last stage
    std::vector<double> t;    // global time
    std::vector<StressPair> K;  // {K_I, K_II}
    double driving_scale = 0.0;     // max |K'| over the stage window
    double roundtrip_error = 0.0;   // max |omega - W * pi| / max |omega|
    double negation_residual = 0.0; // max |K| after the stop / driving_scale
    double min_det = 0.0;           // smallest relative |det W| on the abscissae
    int flagged = 0;                // abscissae skipped as near-singular
};

// omega_i(tau) = sum_j int_0^b W_ij(tau + u) sigma_j(l_end - V u) du
// plus concentrated loads; b = (l_end - l_start)/V.
class DrivingTerm {
  public:
    DrivingTerm(const TimeWeights& W, std::function<StressPair(double)> sigma, std::vector<PointStress> points,
                double l_start, double l_end);

    StressPair omega(double tau) const;
    // stage SIF before the stop, tau in [0, b]: K_i = V sum_j int_0^tau W_ij(tau-u) sigma_j(l_start+Vu) du
    StressPair sif(double tau) const;
    double span() const { return b_; }

  private:
    const TimeWeights& W_;
    std::function<StressPair(double)> sigma_;
    std::vector<PointStress> points_;
    double l0_, l1_, V_, b_;
};

// pi from int_0^tau W(tau - tau') pi(tau') dtau' = omega(tau), inverted on a
// tau' grid over (0, tau_max]. omega_hat is evaluated at the requested abscissae.
struct VolterraSolution {
    RadiatedStress radiated;
    double min_det = 0.0;
    int flagged = 0;
};

VolterraSolution solve_volterra_pair(const WeightModel& model,
                                     const std::function<std::array<cplx, 2>(cplx)>& omega_hat,
                                     double origin, double tau_max, int points, double det_tol);

// int_0^tau W(tau - tau') pi(tau') dtau'
StressPair reconvolve(const TimeWeights& W, const RadiatedStress& r, double tau);

// int_a^b f(u) du for f with possible inverse-square-root endpoint singularities
double endpoint_singular_integral(const std::function<double(double)>& f, double a, double b);

class CrackGrowth {
  public:
    CrackGrowth(const Material& mat, double delta, SpeedSchedule schedule, StressProfile initial,
                GrowthOptions opt = {});

    bool done() const { return next_ >= schedule_.stages(); }
    std::size_t next_stage() const { return next_; }
    // advances one stage; the last stage only produces SIFs
    const StageResult& advance();
    void run();

    const std::vector<StageResult>& stages() const { return results_; }
    // sigma^k: initial stresses plus every radiated increment installed so far
    StressPair stress(double x1) const;
    // SIFs of the current (last advanced) stage at global times t
    std::vector<StressPair> final_sifs(const std::vector<double>& t) const;
    std::size_t model_count() const { return models_.size(); }

  private:
    const WeightModel& model_for(double V);
    const TimeWeights& weights_for(double V, double t_max);

    Material mat_;
    double delta_;
    SpeedSchedule schedule_;
    StressProfile initial_;
    GrowthOptions opt_;
    std::size_t next_ = 0;
    std::vector<RadiatedStress> radiated_;
    std::vector<StageResult> results_;
    std::vector<std::unique_ptr<WeightModel>> models_;
    std::vector<std::unique_ptr<TimeWeights>> weights_;
};

}  // namespace dynfrac
