#include "dynfrac/checks.hpp"

#include <cmath>
#include <sstream>

#include "dynfrac/errors.hpp"
#include "dynfrac/factor.hpp"
#include "dynfrac/kernel.hpp"
#include "dynfrac/laplace.hpp"
#include "dynfrac/plane.hpp"
#include "dynfrac/quadrature.hpp"
#include "dynfrac/weights.hpp"

namespace dynfrac {

namespace {

CheckResult make(const std::string& name, double value, double limit, const std::string& detail = {}) {
    return {name, std::isfinite(value) && value <= limit, value, limit, detail};
}

template <class Fn>
CheckResult guarded(const std::string& name, double limit, Fn&& fn) {
    try {
        return fn();
    } catch (const std::exception& e) {
        return {name, false, INFINITY, limit, e.what()};
    }
}

}  // namespace

std::vector<CheckResult> run_checks(const RunConfig& cfg, bool include_slow) {
    cfg.validate();
    const CrackSetup cs = cfg.setup();
    const int M = cfg.integer("M");
    std::vector<CheckResult> out;

    out.push_back(guarded("branch-signs", 0.0, [&] {
        int bad = 0;
        for (cplx s : {cplx(1.0), cplx(0.3, 5.0), cplx(2.0, -40.0)})
            for (double p : {-50.0, -1.0, -1e-3, 0.0, 1e-3, 0.7, 50.0}) {
                const auto [a, b] = alpha_beta(p, s, cs);
                if (!(a.real() > 0.0) || !(b.real() > 0.0)) ++bad;
            }
        return make("branch-signs", bad, 0.0, "count of samples with Re sqrt <= 0");
    }));

    out.push_back(guarded("gauss-weights", 1e-12, [&] {
        double err = 0.0;
        for (int n : {8, 16, 32}) {
            double sum = 0.0;
            for (double w : gauss_legendre(n).w) sum += w;
            err = std::max(err, std::abs(sum - 2.0));
        }
        return make("gauss-weights", err, 1e-12);
    }));

    out.push_back(guarded("factorization-identity", 1e-6, [&] {
        const CircleFactor f([](double p) { return cplx((p * p + 4.0) / (p * p + 1.0)); }, M);
        const cplx I(0.0, 1.0);
        double err = 0.0;
        for (double p : {-30.0, -2.0, -0.5, 0.0, 0.3, 1.0, 4.0, 100.0}) {
            const auto [fp, fm] = f.boundary(p);
            err = std::max(err, std::abs(fp - (p + 2.0 * I) / (p + I)));
            err = std::max(err, std::abs(fm - (p - I) / (p - 2.0 * I)));
        }
        return make("factorization-identity", err, 1e-6, "rational symbol at M from config");
    }));

    out.push_back(guarded("kernel-factor-resolution", 1e-6, [&] {
        const DiagonalFactor a(cplx(1.0, 3.0), cs, M), b(cplx(1.0, 3.0), cs, 4 * M);
        double err = 0.0;
        for (int j = 1; j <= 2; ++j)
            for (double P : {-20.0, -3.0, -0.4, 0.0, 0.5, 2.0, 15.0}) {
                const cplx ref = b.boundary(j, P).first;
                err = std::max(err, std::abs(a.boundary(j, P).first - ref) / std::abs(ref));
            }
        return make("kernel-factor-resolution", err, 1e-6, "M against 4M at s = 1+3i");
    }));

    out.push_back(guarded("contour-invariance", 1e-6, [&] {
        const PlaneFactorization pf(cs, M);
        double err = 0.0;
        const double cases[5][3] = {{2, 0.0, 1.0}, {2, -0.5, 0.5}, {1, 0.0, 2.0}, {1, -0.3, 1.0}, {2, -1.0, 3.0}};
        for (const auto& c : cases) {
            const auto q = point_load_transform(c[1], c[2], cs);
            err = std::max(err, contour_crosscheck(static_cast<int>(c[0]), q, c[2], pf).rel_diff());
        }
        return make("contour-invariance", err, 1e-6, "5 (load, s') cases");
    }));

    out.push_back(guarded("inversion-roundtrip", 1e-3, [&] {
        const InversionConfig inv = cfg.inversion();
        double err = 0.0;
        for (Mode m : {Mode::I, Mode::II})
            for (double t : {0.2, 1.0, 3.0, 10.0}) {
                const double num =
                    invert_euler([&](cplx s) { return plane_weight_transform(m, 0.0, s, cs); }, t, inv);
                const double ref = plane_weight_function(m, 0.0, t, cs);
                err = std::max(err, std::abs(num - ref) / std::abs(ref));
            }
        for (double t : {0.5, 2.0}) {
            const double num = invert_euler([](cplx s) { return 1.0 / (s + 1.0); }, t, inv);
            err = std::max(err, std::abs(num - std::exp(-t)) / std::exp(-t));
        }
        return make("inversion-roundtrip", err, 1e-3);
    }));

    if (include_slow) {
        out.push_back(guarded("plane-consistency", 1e-2, [&] {
            CrackSetup deep = cs;
            deep.delta = 20.0;
            const WeightModel model(deep, cfg.solver(), cfg.inversion(), cfg.threads());
            const Quad<double> w = model.dimensionless(0.0, 10.0);
            const double wI = plane_weight_scalar(Mode::I, cs), wII = plane_weight_scalar(Mode::II, cs);
            const double err = std::max({std::abs(w[0][0] - wI) / wI, std::abs(w[1][1] - wII) / wII,
                                         std::abs(w[0][1]) / wI, std::abs(w[1][0]) / wII});
            std::ostringstream os;
            os << "delta = 20, t = 10: " << w[0][0] << ' ' << w[0][1] << ' ' << w[1][0] << ' ' << w[1][1];
            return make("plane-consistency", err, 1e-2, os.str());
        }));
    }
    return out;
}

}  // namespace dynfrac
