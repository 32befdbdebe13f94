#include "dynfrac/weights.hpp"

#include <cmath>
#include <numbers>

#include "dynfrac/errors.hpp"
#include "dynfrac/parallel.hpp"
#include "dynfrac/plane.hpp"

namespace dynfrac {

ReflectionTiming reflection_timing(const CrackSetup& cs) {
    const double c = cs.mat.c_l;
    if (!(cs.V >= 0.0 && cs.V < c)) throw DomainError("reflection_timing: need 0 <= V < c_l");
    ReflectionTiming r;
    r.t_l = cs.delta / std::sqrt(c * c - cs.V * cs.V);
    const double v = cs.V / c;
    r.theta = std::numbers::pi / 2 + (v > 0.0 ? std::atan(1.0 / std::sqrt(1.0 / (v * v) - 1.0)) : 0.0);
    return r;
}

WeightModel::WeightModel(const CrackSetup& cs, const SolverOptions& opt, const InversionConfig& inv,
                         unsigned threads)
    : cs_(cs), opt_(opt), inv_(inv), threads_(threads) {
    inv_.validate();
    if (cs_.is_plane()) plane_ = {plane_weight_scalar(Mode::I, cs_), plane_weight_scalar(Mode::II, cs_)};
}

Quad<cplx> WeightModel::origin(cplx s) const {
    const auto key = std::make_pair(s.real(), s.imag());
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    Quad<cplx> w{};
    if (cs_.is_plane()) {
        if (!(s.real() > 0.0)) throw DomainError("weight transform: need Re s > 0");
        const cplx root = std::sqrt(2.0 / (cs_.V * s));
        w[0][0] = plane_[0] * root;
        w[1][1] = plane_[1] * root;
    } else {
        w = KernelTable(s, cs_, opt_).unit_responses();
    }
    std::lock_guard<std::mutex> lock(mu_);
    cache_.emplace(key, w);
    return w;
}

Quad<cplx> WeightModel::transform(double x0, cplx s) const {
    Quad<cplx> w = origin(s);
    const cplx shift = std::exp(-s * x0 / cs_.V);
    for (auto& row : w)
        for (auto& v : row) v *= shift;
    return w;
}

std::vector<Quad<cplx>> WeightModel::transforms(const std::vector<cplx>& s) const {
    std::vector<Quad<cplx>> out(s.size());
    parallel_for(s.size(), [&](std::size_t k) { out[k] = origin(s[k]); }, threads_);
    return out;
}

Quad<double> WeightModel::function(double x0, double t) const {
    // W(x0, t) = W(0, t - x0/V)
    const double tau = t - x0 / cs_.V;
    if (!(tau > 0.0)) throw DomainError("weight_function: need t > x0/V");
    const std::vector<cplx> s = euler_abscissae(tau, inv_);
    const std::vector<Quad<cplx>> F = transforms(s);
    Quad<double> out{};
    std::vector<cplx> v(s.size());
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            for (std::size_t k = 0; k < s.size(); ++k) v[k] = F[k][i][j];
            out[i][j] = euler_sum(v, tau, inv_);
        }
    return out;
}

double WeightModel::normalization(double x0, double t) const {
    return std::sqrt(0.5 * std::numbers::pi * (cs_.V * t - x0));
}

Quad<double> WeightModel::dimensionless(double x0, double t) const {
    Quad<double> W = function(x0, t);
    const double f = normalization(x0, t);
    for (auto& row : W)
        for (auto& v : row) v *= f;
    return W;
}

std::size_t WeightModel::cache_size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return cache_.size();
}

namespace {
void check_index(int i) {
    if (i != 1 && i != 2) throw InputError("weight index must be 1 (I) or 2 (II)");
}
}  // namespace

cplx weight_transform(int i, int j, double x0, cplx s, const CrackSetup& cs, const SolverOptions& opt) {
    check_index(i);
    check_index(j);
    return WeightModel(cs, opt, {}, 1).transform(x0, s)[i - 1][j - 1];
}

double weight_function(int i, int j, double x0, double t, const CrackSetup& cs, const SolverOptions& opt,
                       const InversionConfig& inv) {
    check_index(i);
    check_index(j);
    return WeightModel(cs, opt, inv).function(x0, t)[i - 1][j - 1];
}

WeightTable sweep(SweepAxis axis, const std::vector<double>& coords, const CrackSetup& base, double t,
                  const SolverOptions& opt, const InversionConfig& inv, unsigned threads) {
    WeightTable table;
    table.axis = axis;
    table.setup = base;
    table.t = t;
    table.samples.resize(coords.size());
    if (axis != SweepAxis::Time && !(t > 0.0)) throw InputError("sweep: fixed time must be positive");

    auto fill = [&](const WeightModel& model, double time, WeightSample& out) {
        out.W = model.function(0.0, time);
        out.w = out.W;
        const double f = model.normalization(0.0, time);
        for (auto& row : out.w)
            for (auto& v : row) v *= f;
    };

    if (axis == SweepAxis::Time) {
        const WeightModel model(base, opt, inv, threads);
        for (std::size_t k = 0; k < coords.size(); ++k) {
            table.samples[k].coordinate = coords[k];
            fill(model, coords[k], table.samples[k]);
        }
        return table;
    }
    parallel_for(
        coords.size(),
        [&](std::size_t k) {
            const double c = coords[k];
            const CrackSetup cs = axis == SweepAxis::Speed ? make_setup(base.mat, c * base.mat.c_R, base.delta)
                                                           : make_setup(base.mat, base.V, c);
            table.samples[k].coordinate = c;
            fill(WeightModel(cs, opt, inv, 1), t, table.samples[k]);
        },
        threads);
    return table;
}

std::vector<double> linspace_step(double a, double b, double step) {
    if (!(step > 0.0) || !(b >= a)) throw InputError("range: need A <= B and STEP > 0");
    const auto n = static_cast<std::size_t>(std::floor((b - a) / step + 1e-9));
    std::vector<double> out(n + 1);
    for (std::size_t k = 0; k <= n; ++k) out[k] = a + static_cast<double>(k) * step;
    return out;
}

}  // namespace dynfrac
