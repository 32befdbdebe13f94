#include "dynfrac/growth.hpp"

#include <algorithm>
#include <boost/math/interpolators/cardinal_cubic_b_spline.hpp>
#include <cmath>
#include <numbers>
#include <sstream>

#include "dynfrac/errors.hpp"
#include "dynfrac/log.hpp"
#include "dynfrac/parallel.hpp"
#include "dynfrac/plane.hpp"
#include "dynfrac/quadrature.hpp"

namespace dynfrac {

namespace {

constexpr double kPi = std::numbers::pi;

double interp_linear(const std::vector<double>& x, const std::vector<double>& y, double v) {
    if (v < x.front() || v > x.back()) return 0.0;
    auto it = std::upper_bound(x.begin(), x.end(), v);
    if (it == x.end()) return y.back();
    const std::size_t i = static_cast<std::size_t>(it - x.begin());
    if (i == 0) return y.front();
    const double f = (v - x[i - 1]) / (x[i] - x[i - 1]);
    return y[i - 1] + f * (y[i] - y[i - 1]);
}

// 4-point Lagrange interpolation of values on the uniform grid 0, h, 2h, ...
double lagrange4(const std::vector<double>& v, double h, double r) {
    const int n = static_cast<int>(v.size());
    if (n < 4) throw InputError("interpolation table too short");
    const double u = r / h;
    int i = std::clamp(static_cast<int>(std::floor(u)) - 1, 0, n - 4);
    const double x = u - i;
    const double l0 = -(x - 1) * (x - 2) * (x - 3) / 6.0;
    const double l1 = x * (x - 2) * (x - 3) / 2.0;
    const double l2 = -x * (x - 1) * (x - 3) / 2.0;
    const double l3 = x * (x - 1) * (x - 2) / 6.0;
    return l0 * v[i] + l1 * v[i + 1] + l2 * v[i + 2] + l3 * v[i + 3];
}

// stage speeds come from vertex differences, so equal speeds may differ in the last bits
bool same_speed(double a, double b) { return std::abs(a - b) <= 1e-10 * std::max(std::abs(a), std::abs(b)); }

}  // namespace

void SpeedSchedule::validate(const Material& m) const {
    if (t.size() != l.size() || t.size() < 2) throw InputError("schedule: need at least two (t, l) vertices");
    if (t.front() != 0.0 || l.front() != 0.0) throw InputError("schedule: first vertex must be (0, 0)");
    for (std::size_t k = 0; k + 1 < t.size(); ++k) {
        if (!(t[k + 1] > t[k])) throw InputError("schedule: times must increase");
        if (!(l[k + 1] >= l[k])) throw InputError("schedule: crack length must not decrease");
        const double V = speed(k);
        if (!(V > 0.0 && V < m.c_R)) {
            std::ostringstream os;
            os << "schedule: stage " << k << " speed " << V << " outside (0, c_R)";
            throw InputError(os.str());
        }
    }
}

void StressProfile::validate() const {
    if (x.size() != sigma12.size() || x.size() != sigma22.size())
        throw InputError("stress profile: column lengths differ");
    if (x.size() == 1) throw InputError("stress profile: need at least two samples");
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!std::isfinite(x[i]) || !std::isfinite(sigma12[i]) || !std::isfinite(sigma22[i]))
            throw InputError("stress profile: non-finite sample");
        if (i > 0 && !(x[i] > x[i - 1])) throw InputError("stress profile: abscissae must increase");
    }
    for (const auto& p : points)
        if (!std::isfinite(p.x) || !std::isfinite(p.sigma12) || !std::isfinite(p.sigma22))
            throw InputError("stress profile: non-finite point load");
}

StressPair StressProfile::at(double x1) const {
    if (x.empty()) return {0.0, 0.0};
    return {interp_linear(x, sigma22, x1), interp_linear(x, sigma12, x1)};
}

TimeWeights::TimeWeights(const WeightModel& model, double t_max, int points)
    : cs_(model.setup()), V_(model.setup().V), t_max_(t_max) {
    if (!(t_max > 0.0)) throw InputError("time weights: t_max must be positive");
    plane_[0][0] = plane_weight_scalar(Mode::I, cs_);
    plane_[1][1] = plane_weight_scalar(Mode::II, cs_);
    if (cs_.is_plane()) return;
    // before the reflected wave arrives the weights equal the plane ones
    t_start_ = std::min(0.95 * 2.0 * reflection_timing(cs_).t_l, t_max);
    if (t_max <= t_start_) return;
    if (points < 2) throw InputError("time weights: need at least two grid points");
    dt_ = (t_max - t_start_) / points;
    grid_.resize(points + 1);
    grid_[0] = plane_;
    parallel_for(static_cast<std::size_t>(points),
                 [&](std::size_t n) { grid_[n + 1] = model.dimensionless(0.0, t_start_ + (n + 1) * dt_); });
}

Quad<double> TimeWeights::w(double t) const {
    if (grid_.empty() || t <= t_start_) return plane_;
    if (t > t_max_ * (1 + 1e-12)) throw DomainError("time weights: t beyond the tabulated range");
    const double u = std::min((t - t_start_) / dt_, static_cast<double>(grid_.size() - 1));
    const std::size_t i = std::min(static_cast<std::size_t>(u), grid_.size() - 2);
    const double f = u - static_cast<double>(i);
    Quad<double> out{};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) out[a][b] = (1 - f) * grid_[i][a][b] + f * grid_[i + 1][a][b];
    return out;
}

Quad<double> TimeWeights::W(double t) const {
    if (!(t > 0.0)) return {};
    Quad<double> out = w(t);
    const double f = 1.0 / std::sqrt(0.5 * kPi * V_ * t);
    for (auto& row : out)
        for (auto& v : row) v *= f;
    return out;
}

StressPair RadiatedStress::pi(double tau_prime) const {
    if (empty() || !(tau_prime > 0.0)) return {0.0, 0.0};
    const double h = std::sqrt(tau_max) / static_cast<double>(tau.size() - 1);
    const double r = std::sqrt(tau_prime);
    StressPair out{};
    for (int j = 0; j < 2; ++j) {
        // beyond the table pi keeps its last sqrt-scaled value
        const double p = r >= std::sqrt(tau_max) ? scaled[j].back() : lagrange4(scaled[j], h, r);
        out[j] = p / r;
    }
    return out;
}

StressPair RadiatedStress::at(double x1) const { return pi((x1 - origin) / V); }

double endpoint_singular_integral(const std::function<double(double)>& f, double a, double b) {
    if (!(b > a)) return 0.0;
    const double m = 0.5 * (a + b);
    const double ra = std::sqrt(m - a), rb = std::sqrt(b - m);
    auto left = [&](double v) { return v == 0.0 ? 0.0 : 2.0 * v * f(a + v * v); };
    auto right = [&](double v) { return v == 0.0 ? 0.0 : 2.0 * v * f(b - v * v); };
    return integrate(RealFn(left), 0.0, ra, 1e-10, 12) + integrate(RealFn(right), 0.0, rb, 1e-10, 12);
}

DrivingTerm::DrivingTerm(const TimeWeights& W, std::function<StressPair(double)> sigma,
                         std::vector<PointStress> points, double l_start, double l_end)
    : W_(W), sigma_(std::move(sigma)), points_(std::move(points)), l0_(l_start), l1_(l_end), V_(W.speed()) {
    b_ = (l1_ - l0_) / V_;
}

StressPair DrivingTerm::omega(double tau) const {
    StressPair out{};
    for (int i = 0; i < 2; ++i) {
        out[i] = endpoint_singular_integral(
            [&](double u) {
                const Quad<double> w = W_.W(tau + u);
                const StressPair s = sigma_(l1_ - V_ * u);
                return w[i][0] * s[0] + w[i][1] * s[1];
            },
            0.0, b_);
    }
    for (const auto& p : points_) {
        if (!(p.x > l0_ && p.x < l1_)) continue;
        const Quad<double> w = W_.W(tau + (l1_ - p.x) / V_);
        for (int i = 0; i < 2; ++i) out[i] += (w[i][0] * p.sigma22 + w[i][1] * p.sigma12) / V_;
    }
    return out;
}

StressPair DrivingTerm::sif(double tau) const {
    StressPair out{};
    for (int i = 0; i < 2; ++i) {
        out[i] = V_ * endpoint_singular_integral(
                          [&](double u) {
                              const Quad<double> w = W_.W(tau - u);
                              const StressPair s = sigma_(l0_ + V_ * u);
                              return w[i][0] * s[0] + w[i][1] * s[1];
                          },
                          0.0, tau);
    }
    for (const auto& p : points_) {
        if (!(p.x > l0_)) continue;
        const Quad<double> w = W_.W(tau - (p.x - l0_) / V_);
        for (int i = 0; i < 2; ++i) out[i] += w[i][0] * p.sigma22 + w[i][1] * p.sigma12;
    }
    return out;
}

VolterraSolution solve_volterra_pair(const WeightModel& model,
                                     const std::function<std::array<cplx, 2>(cplx)>& omega_hat, double origin,
                                     double tau_max, int points, double det_tol) {
    if (points < 4) throw InputError("volterra: need at least four grid points");
    if (!(tau_max > 0.0)) throw InputError("volterra: tau_max must be positive");
    VolterraSolution out;
    RadiatedStress& r = out.radiated;
    r.origin = origin;
    r.V = model.setup().V;
    r.tau_max = tau_max;
    r.tau.resize(points + 1);
    for (auto& v : r.scaled) v.assign(points + 1, 0.0);
    const double h = std::sqrt(tau_max) / points;
    out.min_det = INFINITY;

    for (int n = 1; n <= points; ++n) {
        const double tp = (n * h) * (n * h);
        r.tau[n] = tp;
        const std::vector<cplx> s = euler_abscissae(tp, model.inversion());
        const std::vector<Quad<cplx>> Wh = model.transforms(s);
        std::vector<std::array<cplx, 2>> om(s.size());
        parallel_for(s.size(), [&](std::size_t k) { om[k] = omega_hat(s[k]); });

        std::array<std::vector<cplx>, 2> ph;
        ph[0].resize(s.size());
        ph[1].resize(s.size());
        std::vector<bool> bad(s.size(), false);
        for (std::size_t k = 0; k < s.size(); ++k) {
            const auto& w = Wh[k];
            const cplx det = w[0][0] * w[1][1] - w[0][1] * w[1][0];
            const double scale = std::abs(w[0][0] * w[1][1]) + std::abs(w[0][1] * w[1][0]);
            const double rel = scale > 0.0 ? std::abs(det) / scale : 0.0;
            out.min_det = std::min(out.min_det, rel);
            if (rel < det_tol) {
                bad[k] = true;
                continue;
            }
            ph[0][k] = (w[1][1] * om[k][0] - w[0][1] * om[k][1]) / det;
            ph[1][k] = (w[0][0] * om[k][1] - w[1][0] * om[k][0]) / det;
        }
        for (std::size_t k = 0; k < s.size(); ++k) {
            if (!bad[k]) continue;
            ++out.flagged;
            std::ostringstream os;
            os << "near-singular weight matrix at s = " << s[k] << ", interpolating";
            log_warning(os.str());
            for (int j = 0; j < 2; ++j) {
                cplx acc = 0.0;
                int cnt = 0;
                if (k > 0 && !bad[k - 1]) acc += ph[j][k - 1], ++cnt;
                if (k + 1 < s.size() && !bad[k + 1]) acc += ph[j][k + 1], ++cnt;
                ph[j][k] = cnt ? acc / static_cast<double>(cnt) : cplx(0.0);
            }
        }
        for (int j = 0; j < 2; ++j) r.scaled[j][n] = std::sqrt(tp) * euler_sum(ph[j], tp, model.inversion());
    }
    for (auto& v : r.scaled) v[0] = 3.0 * v[1] - 3.0 * v[2] + v[3];
    return out;
}

StressPair reconvolve(const TimeWeights& W, const RadiatedStress& r, double tau) {
    StressPair out{};
    for (int i = 0; i < 2; ++i) {
        out[i] = endpoint_singular_integral(
            [&](double tp) {
                const Quad<double> w = W.W(tau - tp);
                const StressPair p = r.pi(tp);
                return w[i][0] * p[0] + w[i][1] * p[1];
            },
            0.0, tau);
    }
    return out;
}

CrackGrowth::CrackGrowth(const Material& mat, double delta, SpeedSchedule schedule, StressProfile initial,
                         GrowthOptions opt)
    : mat_(mat), delta_(delta), schedule_(std::move(schedule)), initial_(std::move(initial)), opt_(opt) {
    schedule_.validate(mat_);
    initial_.validate();
    opt_.inversion.validate();
    if (!(delta_ > 0.0)) throw InputError("crack growth: delta must be positive");
    if (initial_.has_table() && (initial_.x.front() > schedule_.l[0] || initial_.x.back() < schedule_.l[1]))
        throw InputError("stress profile does not cover the first stage [l_0, l_1]");
    for (const auto& p : initial_.points)
        for (double l : schedule_.l)
            if (std::abs(p.x - l) < 1e-12 * std::max(1.0, std::abs(l)))
                throw InputError("point load coincides with a schedule vertex");
}

const WeightModel& CrackGrowth::model_for(double V) {
    for (const auto& m : models_)
        if (same_speed(m->setup().V, V)) return *m;
    models_.push_back(
        std::make_unique<WeightModel>(make_setup(mat_, V, delta_), opt_.solver, opt_.inversion, opt_.threads));
    return *models_.back();
}

const TimeWeights& CrackGrowth::weights_for(double V, double t_max) {
    for (const auto& w : weights_)
        if (same_speed(w->speed(), V) && w->t_max() >= t_max) return *w;
    weights_.push_back(std::make_unique<TimeWeights>(model_for(V), t_max, opt_.weight_points));
    return *weights_.back();
}

StressPair CrackGrowth::stress(double x1) const {
    StressPair s = initial_.at(x1);
    for (const auto& r : radiated_) {
        const StressPair d = r.at(x1);
        s[0] += d[0];
        s[1] += d[1];
    }
    return s;
}

const StageResult& CrackGrowth::advance() {
    if (done()) throw InputError("crack growth: schedule exhausted");
    const std::size_t k = next_;
    const bool last = k + 1 == schedule_.stages();
    StageResult res;
    res.k = k;
    res.V = schedule_.speed(k);
    res.t_start = schedule_.t[k];
    res.t_end = schedule_.t[k + 1];
    res.l_start = schedule_.l[k];
    res.l_end = schedule_.l[k + 1];
    const double V = res.V;
    const double b = res.t_end - res.t_start;

    // radiated stresses are needed up to the final crack extent
    const double tau_max = last ? 0.0 : (schedule_.l.back() - res.l_end) / V;
    const double T = 4.0 * tau_max;
    const WeightModel& model = model_for(V);
    const TimeWeights& W = weights_for(V, b + T);
    const DrivingTerm drive(W, [this](double x) { return stress(x); }, initial_.points, res.l_start, res.l_end);

    const int ns = std::max(1, opt_.sif_points);
    res.t.resize(ns);
    res.K.resize(ns);
    parallel_for(static_cast<std::size_t>(ns), [&](std::size_t n) {
        const double tau = b * static_cast<double>(n + 1) / ns;
        res.t[n] = res.t_start + tau;
        res.K[n] = drive.sif(tau);
    });
    for (const auto& K : res.K) res.driving_scale = std::max({res.driving_scale, std::abs(K[0]), std::abs(K[1])});

    if (!last && tau_max > 0.0) {
        const int no = std::max(8, opt_.omega_points);
        const double h = std::sqrt(T) / no;
        std::array<std::vector<double>, 2> tab;
        tab[0].resize(no + 1);
        tab[1].resize(no + 1);
        parallel_for(static_cast<std::size_t>(no + 1), [&](std::size_t n) {
            const double r = static_cast<double>(n) * h;
            const StressPair o = drive.omega(r * r);
            tab[0][n] = o[0];
            tab[1][n] = o[1];
        });
        double omega_scale = 0.0;
        for (const auto& v : tab)
            for (double x : v) omega_scale = std::max(omega_scale, std::abs(x));
        res.driving_scale = std::max(res.driving_scale, V * omega_scale);

        using Spline = boost::math::interpolators::cardinal_cubic_b_spline<double>;
        const Spline sp0(tab[0].begin(), tab[0].end(), 0.0, h), sp1(tab[1].begin(), tab[1].end(), 0.0, h);
        auto f0 = [&](double t) { return sp0(std::sqrt(std::min(t, T))); };
        auto f1 = [&](double t) { return sp1(std::sqrt(std::min(t, T))); };
        auto omega_hat = [&](cplx s) -> std::array<cplx, 2> {
            return {forward_laplace(f0, T, s), forward_laplace(f1, T, s)};
        };

        VolterraSolution sol = solve_volterra_pair(model, omega_hat, res.l_end, tau_max,
                                                   opt_.radiated_points, opt_.det_tol);
        res.radiated = sol.radiated;
        res.min_det = sol.min_det;
        res.flagged = sol.flagged;

        // residual of the stop condition on the radiated grid
        const int nc = 20;
        std::vector<double> diff(nc), mag(nc);
        parallel_for(static_cast<std::size_t>(nc), [&](std::size_t n) {
            const double f = static_cast<double>(n + 1) / nc;
            const double tau = tau_max * f * f;
            const StressPair o = drive.omega(tau);
            const StressPair c = reconvolve(W, res.radiated, tau);
            diff[n] = std::max(std::abs(o[0] - c[0]), std::abs(o[1] - c[1]));
            mag[n] = std::max(std::abs(o[0]), std::abs(o[1]));
        });
        const double dmax = *std::max_element(diff.begin(), diff.end());
        const double omax = *std::max_element(mag.begin(), mag.end());
        res.roundtrip_error = omax > 0.0 ? dmax / omax : dmax;
        res.negation_residual = res.driving_scale > 0.0 ? V * dmax / res.driving_scale : V * dmax;
        radiated_.push_back(res.radiated);
    }
    results_.push_back(std::move(res));
    ++next_;
    return results_.back();
}

void CrackGrowth::run() {
    while (!done()) advance();
}

std::vector<StressPair> CrackGrowth::final_sifs(const std::vector<double>& t) const {
    if (results_.empty()) throw InputError("crack growth: no stage advanced yet");
    const StageResult& st = results_.back();
    const TimeWeights* W = nullptr;
    for (const auto& w : weights_)
        if (same_speed(w->speed(), st.V) && w->t_max() >= st.t_end - st.t_start) W = w.get();
    if (!W) throw NumericalError("crack growth: weights for the current stage are missing");
    const DrivingTerm drive(*W, [this](double x) { return stress(x); }, initial_.points, st.l_start, st.l_end);
    std::vector<StressPair> out(t.size());
    for (std::size_t n = 0; n < t.size(); ++n) {
        if (!(t[n] > st.t_start && t[n] <= st.t_end * (1 + 1e-12)))
            throw DomainError("final_sifs: t outside the current stage window");
        out[n] = drive.sif(t[n] - st.t_start);
    }
    return out;
}

}  // namespace dynfrac
