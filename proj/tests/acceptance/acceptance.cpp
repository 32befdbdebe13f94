// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dynfrac/factor.hpp"
#include "dynfrac/growth.hpp"
#include "dynfrac/laplace.hpp"
#include "dynfrac/material.hpp"
#include "dynfrac/plane.hpp"
#include "dynfrac/quadrature.hpp"
#include "dynfrac/solver.hpp"
#include "dynfrac/weights.hpp"

using namespace dynfrac;
using C = std::complex<double>;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double max_seconds, const std::function<Outcome()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = fn();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::string detail = o.detail;
    if (max_seconds > 0 && sec > max_seconds) {
        o.pass = false;
        detail += " [over time budget " + std::to_string(max_seconds) + " s]";
    }
    if (!o.pass) ++failures;
    std::printf("%s %2d %-28s %8.2fs  %s\n", o.pass ? "PASS" : "FAIL", id, name, sec, detail.c_str());
    std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

const Material kMat = Material::from_speed(0.3, 1.0);
const double kV = 0.5 * kMat.c_R;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

int main() {
    criterion(1, "rayleigh-speed", 1.0, [] {
        const Material m = Material::from_speed(0.3, 1.0);
        const bool ok = std::abs(m.c_s - 0.5345) <= 5e-4 && std::abs(m.c_R - 0.4957) <= 5e-4;
        return Outcome{ok, fmt("c_s=%.10f c_R=%.10f", m.c_s, m.c_R)};
    });

    const CrackSetup plane = make_setup(kMat, kV, INFINITY);
    double wI = 0.0, wII = 0.0;
    criterion(2, "plane-weight-scalars", 10.0, [&] {
        wI = plane_weight_scalar(Mode::I, plane);
        wII = plane_weight_scalar(Mode::II, plane);
        const bool ok = std::abs(wI - 0.781473) <= 1e-3 && std::abs(wII - 0.659882) <= 1e-3;
        return Outcome{ok, fmt("w_I=%.6f w_II=%.6f (expected 0.781473, 0.659882)", wI, wII)};
    });
    std::printf("INFO    swapped labels: |w_II-0.781473|=%.2e |w_I-0.659882|=%.2e\n", std::abs(wII - 0.781473),
                std::abs(wI - 0.659882));

    criterion(3, "plane-limits", 60.0, [] {
        const double lo = plane_weight_scalar(Mode::I, make_setup(kMat, 0.02 * kMat.c_R, INFINITY));
        const double hi = plane_weight_scalar(Mode::I, make_setup(kMat, 0.98 * kMat.c_R, INFINITY));
        return Outcome{std::abs(lo - 1.0) <= 0.02 && hi < 0.1, fmt("w_I(0.02c_R)=%.6f w_I(0.98c_R)=%.6f", lo, hi)};
    });

    criterion(4, "boundary-delay", 1800.0, [&] {
        const WeightModel model(make_setup(kMat, kV, 1.0));
        const double ref[2] = {wI, wII};
        double off = 0.0, diag = 0.0;
        for (double t : {0.5, 1.0, 1.5, 2.0}) {
            const Quad<double> w = model.dimensionless(0.0, t);
            off = std::max({off, std::abs(w[0][1]), std::abs(w[1][0])});
            diag = std::max({diag, rel(w[0][0], ref[0]), rel(w[1][1], ref[1])});
        }
        double late = 0.0, late_t = 0.0;
        for (double t : {2.5, 3.0, 3.5}) {
            const Quad<double> w = model.dimensionless(0.0, t);
            const double d = std::max({rel(w[0][0], ref[0]), rel(w[1][1], ref[1]), std::abs(w[0][1]) / ref[0],
                                       std::abs(w[1][0]) / ref[1]});
            if (d > late) late = d, late_t = t;
            if (late > 0.02) break;
        }
        const bool ok = off <= 5e-3 && diag <= 0.02 && late > 0.02;
        return Outcome{ok, fmt("t<=2: max|off|=%.2e max diag dev=%.2e; late dev=%.3f at t=%.1f", off, diag, late,
                               late_t)};
    });

    criterion(5, "plane-consistency", 600.0, [&] {
        const WeightModel model(make_setup(kMat, kV, 20.0));
        const Quad<double> w = model.dimensionless(0.0, 10.0);
        const double err = std::max({rel(w[0][0], wI), rel(w[1][1], wII), std::abs(w[0][1]) / wI,
                                     std::abs(w[1][0]) / wII});
        return Outcome{err <= 0.01, fmt("w=(%.6f %.2e %.2e %.6f) max dev=%.2e", w[0][0], w[0][1], w[1][0],
                                        w[1][1], err)};
    });

    criterion(6, "contour-invariance", 0.0, [&] {
        const PlaneFactorization pf(plane, 400);
        const double cases[5][3] = {{2, 0.0, 1.0}, {2, -0.5, 0.5}, {1, 0.0, 2.0}, {1, -0.3, 1.0}, {2, -1.0, 3.0}};
        double err = 0.0;
        for (const auto& c : cases) {
            const auto q = point_load_transform(c[1], c[2], plane);
            err = std::max(err, contour_crosscheck(static_cast<int>(c[0]), q, c[2], pf).rel_diff());
        }
        return Outcome{err <= 1e-6, fmt("max rel diff=%.2e over 5 cases", err)};
    });

    criterion(7, "inversion-pipeline", 0.0, [&] {
        const InversionConfig inv;
        double err = 0.0;
        for (Mode m : {Mode::I, Mode::II})
            for (double t : linspace_step(0.2, 10.0, 0.2)) {
                const double num =
                    invert_euler([&](C s) { return plane_weight_transform(m, 0.0, s, plane); }, t, inv);
                err = std::max(err, rel(num, plane_weight_function(m, 0.0, t, plane)));
            }
        return Outcome{err <= 1e-3, fmt("max rel err=%.2e on t in [0.2, 10]", err)};
    });

    criterion(8, "quadrature-oracles", 0.0, [] {
        double gauss = 0.0;
        for (int n : {8, 16, 32}) {
            double sum = 0.0;
            for (double w : gauss_legendre(n).w) sum += w;
            gauss = std::max(gauss, std::abs(sum - 2.0));
        }
        const int M = 200;
        std::vector<C> inside, outside;
        for (double th : circle_nodes(M)) {
            inside.push_back(std::polar(1.0, th));
            outside.push_back(std::polar(1.0, -th));
        }
        double pv = 0.0;
        for (double th : {0.1, 1.3, -2.7, 3.0, 0.0123}) {
            const C e = std::polar(1.0, th);
            pv = std::max(pv, std::abs(cauchy_pv_circle(inside, th, M) - 0.5 * e));
            pv = std::max(pv, std::abs(cauchy_pv_circle(outside, th, M) + 0.5 / e));
        }
        const CircleFactor f([](double p) { return C((p * p + 4) / (p * p + 1)); }, 400);
        const C I(0, 1);
        double fac = 0.0;
        for (double p : {-50.0, -3.0, -0.2, 0.0, 0.5, 1.0, 7.0, 1e3}) {
            const auto [fp, fm] = f.boundary(p);
            fac = std::max({fac, std::abs(fp - (p + 2.0 * I) / (p + I)), std::abs(fm - (p - I) / (p - 2.0 * I))});
        }
        const bool ok = gauss <= 1e-12 && pv <= 1e-8 && fac <= 1e-6;
        return Outcome{ok, fmt("gauss=%.1e pv=%.1e factor=%.1e", gauss, pv, fac)};
    });

    double major_drift = 0.0, cross_drift = 0.0;
    C cross_s;
    criterion(9, "collocation-convergence", 0.0, [&] {
        const int N = 32;
        const Collocation c = collocation(N, 1.0);
        auto u1 = [](double x) { return std::exp(x) / (3 + x); };
        auto u2 = [](double x) { return std::cos(2 * x); };
        auto k1 = [](double x, double y) { return 1.0 / (2 + x * y); };
        auto k2 = [](double x, double y) { return 0.7 * std::exp(-(x - y) * (x - y)); };
        auto jac = [](double y) { return 2.0 / ((1 + y) * (1 + y)); };
        const GaussRule fine = gauss_legendre(64);
        CoupledSystem sys;
        sys.gamma = {1.0, 1.5};
        sys.weight = Eigen::Map<const Eigen::VectorXd>(c.weight.data(), N);
        std::vector<double> x = c.xi;
        x.push_back(1.0);
        for (int j = 0; j < 2; ++j) {
            sys.kernel[j].resize(N + 1, N);
            sys.rhs[j].resize(N + 1);
            for (int n = 0; n <= N; ++n) {
                auto kj = [&](double y) { return j == 0 ? k1(x[n], y) : k2(x[n], y); };
                for (int m = 0; m < N; ++m) sys.kernel[j](n, m) = kj(c.xi[m]) / jac(c.xi[m]);
                double conv = 0.0;
                for (int i = 0; i < 64; ++i)
                    conv += fine.w[i] * kj(fine.x[i]) * (j == 0 ? u2(fine.x[i]) : u1(fine.x[i]));
                sys.rhs[j](n) = sys.gamma[j] * (j == 0 ? u1(x[n]) : u2(x[n])) + conv;
            }
        }
        const CoupledSolution sol = solve_coupled(sys);
        double man = std::max(std::abs(sol.endpoint[0] - u1(1.0)), std::abs(sol.endpoint[1] - u2(1.0)));
        for (int m = 0; m < N; ++m)
            man = std::max({man, std::abs(sol.nodes[0](m) - u1(c.xi[m])), std::abs(sol.nodes[1](m) - u2(c.xi[m]))});

        // real s and Euler abscissae of the t = 1 and t = 10 contours
        const CrackSetup cs = make_setup(kMat, kV, 1.0);
        const InversionConfig inv;
        std::vector<C> abscissae = {C(1.0)};
        for (auto [t, k] : {std::pair{1.0, 10}, std::pair{10.0, 5}, std::pair{10.0, 20}, std::pair{10.0, 50}})
            abscissae.push_back(euler_abscissae(t, inv)[k]);
        for (C s : abscissae)
            for (const LoadSpec& load : {LoadSpec::normal(), LoadSpec::shear()}) {
                SolverOptions a, b;
                a.N = 16;
                b.N = 32;
                const auto ra = solve_system(s, load, cs, a);
                const auto rb = solve_system(s, load, cs, b);
                const bool normal = load.mode == LoadMode::NormalPoint;
                const double d1 = std::abs(ra.chi1 - rb.chi1) / std::abs(rb.chi1);
                const double d2 = std::abs(ra.chi2 - rb.chi2) / std::abs(rb.chi2);
                major_drift = std::max(major_drift, normal ? d2 : d1);
                if (std::abs(ra.chi1 - rb.chi1) + std::abs(ra.chi2 - rb.chi2) > 0.0) {
                    const double d = normal ? d1 : d2;
                    if (d > cross_drift) cross_drift = d, cross_s = s;
                }
            }
        const double drift = std::max(major_drift, cross_drift);
        return Outcome{man <= 1e-8 && drift < 1e-5, fmt("manufactured err=%.2e, N 16->32 drift=%.2e", man, drift)};
    });

    std::printf("INFO    N 16->32: loaded component drift=%.2e, cross component drift=%.2e at s=(%.3f,%.3f)\n",
                major_drift, cross_drift, cross_s.real(), cross_s.imag());

    criterion(10, "crack-growth-roundtrip", 0.0, [] {
        CrackGrowth g(kMat, INFINITY, SpeedSchedule{{0.0, 2.0, 4.0}, {0.0, 2 * kV, 4 * kV}},
                      StressProfile{{}, {}, {}, {{0.2, 0.0, 1.0}}});
        const StageResult& r = g.advance();
        const bool ok = r.roundtrip_error <= 1e-2 && r.negation_residual <= 1e-2;
        return Outcome{ok, fmt("round trip=%.2e negation residual=%.2e", r.roundtrip_error, r.negation_residual)};
    });

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
