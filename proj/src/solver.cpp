#include "dynfrac/solver.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "dynfrac/errors.hpp"
#include "dynfrac/log.hpp"
#include "dynfrac/plane.hpp"
#include "dynfrac/quadrature.hpp"

namespace dynfrac {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx kI(0.0, 1.0);

Eigen::MatrixXcd assemble(const std::array<double, 2>& gamma,
                          const std::array<Eigen::MatrixXcd, 2>& kernel, const Eigen::VectorXd& w) {
    const int N = static_cast<int>(w.size());
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(2 * N, 2 * N);
    A.topLeftCorner(N, N).diagonal().setConstant(gamma[0]);
    A.bottomRightCorner(N, N).diagonal().setConstant(gamma[1]);
    A.topRightCorner(N, N) = kernel[0].topRows(N) * w.asDiagonal();
    A.bottomLeftCorner(N, N) = kernel[1].topRows(N) * w.asDiagonal();
    return A;
}

void check_solution(const Eigen::VectorXcd& u) {
    if (!u.allFinite()) throw NumericalError("collocation system is singular");
}

CoupledSolution finish(const Eigen::VectorXcd& u, const std::array<double, 2>& gamma,
                       const std::array<Eigen::MatrixXcd, 2>& kernel,
                       const std::array<Eigen::VectorXcd, 2>& rhs, const Eigen::VectorXd& w) {
    check_solution(u);
    const int N = static_cast<int>(w.size());
    CoupledSolution r;
    r.nodes[0] = u.head(N);
    r.nodes[1] = u.tail(N);
    for (int j = 0; j < 2; ++j) {
        const Eigen::VectorXcd& other = r.nodes[1 - j];
        const cplx conv = (kernel[j].row(N).transpose().array() * w.array() * other.array()).sum();
        r.endpoint[j] = (rhs[j](N) - conv) / gamma[j];
    }
    return r;
}

}  // namespace

Collocation collocation(int N, double L) {
    if (N < 2) throw InputError("collocation: N must be at least 2");
    if (!(L > 0.0)) throw InputError("collocation: L must be positive");
    const GaussRule g = gauss_legendre(N);
    Collocation c;
    c.xi = g.x;
    c.X.resize(N);
    c.weight.resize(N);
    for (int k = 0; k < N; ++k) {
        const double xp = g.x[k];
        c.X[k] = L * (xp - 1.0) / (xp + 1.0);
        c.weight[k] = g.w[k] * 2.0 * L / ((xp + 1.0) * (xp + 1.0));
    }
    return c;
}

CoupledSolution solve_coupled(const CoupledSystem& sys) {
    const int N = static_cast<int>(sys.weight.size());
    for (int j = 0; j < 2; ++j) {
        if (sys.kernel[j].rows() != N + 1 || sys.kernel[j].cols() != N || sys.rhs[j].size() != N + 1)
            throw InputError("solve_coupled: inconsistent dimensions");
    }
    const Eigen::MatrixXcd A = assemble(sys.gamma, sys.kernel, sys.weight);
    Eigen::VectorXcd b(2 * N);
    b << sys.rhs[0].head(N), sys.rhs[1].head(N);
    const Eigen::VectorXcd u = A.partialPivLu().solve(b);
    return finish(u, sys.gamma, sys.kernel, sys.rhs, sys.weight);
}

KernelTable::KernelTable(cplx s, const CrackSetup& cs, const SolverOptions& opt)
    : s_(s), cs_(cs), factor_(factorize_diagonal(s, cs, opt.M, opt.refine_M)),
      col_(collocation(opt.N, opt.L)) {
    const int N = opt.N;
    const SpectralScale& sc = factor_.scale();

    double xmax = 0.0;
    for (double X : col_.X) xmax = std::max(xmax, std::abs(X));
    dp_ = 2.0 * kPi / (2.0 * xmax + 200.0);

    const bool coupled = !cs.is_plane();
    p_max_ = 5.0;
    if (coupled) {
        while (std::max(std::abs(coupling_entry(p_max_, sc, cs)), std::abs(coupling_entry(-p_max_, sc, cs))) >= 1e-16) {
            p_max_ *= 1.5;
            if (p_max_ > 2000.0) {
                std::ostringstream os;
                os << "coupling symbol still large at |P| = " << p_max_ << " for s = " << s;
                log_warning(os.str());
                break;
            }
        }
    }

    const int nP = coupled ? static_cast<int>(std::floor(2.0 * p_max_ / dp_)) + 1 : 0;
    P_.resize(nP);
    sym_[0].resize(nP);
    sym_[1].resize(nP);
    for (int k = 0; k < nP; ++k) {
        P_[k] = -p_max_ + k * dp_;
        std::tie(sym_[0](k), sym_[1](k)) = off_diagonal_symbols(P_[k], cs, factor_);
    }
    phase_.resize(N + 1, nP);
    for (int n = 0; n <= N; ++n) {
        const double X = n < N ? col_.X[n] : 0.0;
        for (int k = 0; k < nP; ++k) phase_(n, k) = std::polar(1.0, -P_[k] * X);
    }
    const double scale = dp_ / (2.0 * kPi);
    for (int j = 0; j < 2; ++j) {
        if (nP == 0) {
            kmat_[j] = Eigen::MatrixXcd::Zero(N + 1, N);
            continue;
        }
        kmat_[j] = (phase_ * sym_[j].asDiagonal()) * phase_.topRows(N).adjoint() * scale;
    }
    Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(col_.weight.data(), N);
    lu_ = assemble({cs.gamma(1), cs.gamma(2)}, kmat_, w).partialPivLu();

    chi_unit_[0] = point_solve(2, 0.0);  // normal load
    chi_unit_[1] = point_solve(1, 0.0);  // shear load
}

cplx KernelTable::kernel_scaled(int j, double X) const {
    if (j != 1 && j != 2) throw InputError("kernel index must be 1 or 2");
    cplx acc = 0.0;
    for (std::size_t k = 0; k < P_.size(); ++k) acc += sym_[j - 1](k) * std::polar(1.0, -P_[k] * X);
    return acc * dp_ / (2.0 * kPi);
}

// chi_1, chi_2 at the tip (physical scaling) for a point load on symbol `loaded`
std::array<cplx, 2> KernelTable::point_solve(int loaded, double x0) const {
    const int N = static_cast<int>(col_.X.size());
    const SpectralScale& sc = factor_.scale();
    const int j = loaded - 1, o = 1 - j;
    const double gj = cs_.gamma(loaded);
    const cplx Z = kI * sc.s_hat / cs_.V;
    const cplx c = std::exp(-s_ * x0 / cs_.V) /
                   (cs_.V * coth_factors(Z).first * factor_.interior(loaded, Z));
    const cplx a = sc.s_hat / cs_.V;

    // forcing of the unloaded component by the exact first-order term
    Eigen::VectorXcd f = Eigen::VectorXcd::Zero(N + 1);
    if (!P_.empty()) {
        Eigen::VectorXcd h(P_.size());
        for (std::size_t k = 0; k < P_.size(); ++k) h(k) = sym_[o](k) * c / (a + kI * P_[k]);
        f = phase_ * h * (dp_ / (2.0 * kPi) / gj);
    }
    std::array<Eigen::VectorXcd, 2> rhs;
    rhs[o] = f;
    rhs[j] = Eigen::VectorXcd::Zero(N + 1);
    Eigen::VectorXcd b(2 * N);
    b << rhs[0].head(N), rhs[1].head(N);
    const Eigen::VectorXcd u = lu_.solve(b);
    Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(col_.weight.data(), N);
    const std::array<double, 2> gamma{cs_.gamma(1), cs_.gamma(2)};
    CoupledSolution sol = finish(u, gamma, kmat_, rhs, w);
    std::array<cplx, 2> chi = sol.endpoint;
    chi[j] -= c / gj;
    const double root = std::sqrt(sc.ell);
    return {chi[0] / root, chi[1] / root};
}

namespace {

SifTransformRecord make_record(cplx s, const std::array<cplx, 2>& chi, const CrackSetup& cs) {
    SifTransformRecord r;
    r.s = s;
    r.chi1 = chi[0];
    r.chi2 = chi[1];
    r.K_I = -std::sqrt(2.0) * cs.gamma(2) * chi[1];
    r.K_II = -std::sqrt(2.0) * cs.gamma(1) * chi[0];
    return r;
}

}  // namespace

SifTransformRecord KernelTable::solve(const LoadSpec& load) const {
    switch (load.mode) {
        case LoadMode::NormalPoint:
            return make_record(s_, point_solve(2, load.x0), cs_);
        case LoadMode::ShearPoint:
            return make_record(s_, point_solve(1, load.x0), cs_);
        case LoadMode::Tabulated: {
            const cplx m22 = load_moment(load.x, load.sigma22, s_, cs_.V);
            const cplx m12 = load_moment(load.x, load.sigma12, s_, cs_.V);
            std::array<cplx, 2> chi;
            for (int k = 0; k < 2; ++k) chi[k] = chi_unit_[0][k] * m22 + chi_unit_[1][k] * m12;
            return make_record(s_, chi, cs_);
        }
    }
    throw InputError("unknown load mode");
}

std::array<std::array<cplx, 2>, 2> KernelTable::unit_responses() const {
    std::array<std::array<cplx, 2>, 2> W;
    for (int col = 0; col < 2; ++col) {
        const SifTransformRecord r = make_record(s_, chi_unit_[col], cs_);
        W[0][col] = r.K_I;
        W[1][col] = r.K_II;
    }
    return W;
}

cplx kernel_kstar(int j, double x, const KernelTable& table) {
    const double ell = table.factor().scale().ell;
    return ell * table.kernel_scaled(j, ell * x);
}

cplx rhs_qstar(int j, double x, const LoadSpec& load, const KernelTable& table) {
    if (j != 1 && j != 2) throw InputError("rhs index must be 1 or 2");
    if (x > 0.0) throw DomainError("rhs_qstar: x must be <= 0");
    const CrackSetup& cs = table.setup();
    const SpectralScale& sc = table.factor().scale();
    const cplx s = table.s();
    const cplx Z = kI * sc.s_hat / cs.V;
    const cplx base = std::exp(s * x / cs.V) /
                      (cs.V * coth_factors(Z).first * table.factor().interior(j, Z) * std::sqrt(sc.ell));
    switch (load.mode) {
        case LoadMode::NormalPoint:
            return j == 2 ? base * std::exp(-s * load.x0 / cs.V) : 0.0;
        case LoadMode::ShearPoint:
            return j == 1 ? base * std::exp(-s * load.x0 / cs.V) : 0.0;
        case LoadMode::Tabulated:
            return base * load_moment(load.x, j == 2 ? load.sigma22 : load.sigma12, s, cs.V);
    }
    return 0.0;
}

SifTransformRecord solve_system(cplx s, const LoadSpec& load, const CrackSetup& cs,
                                const SolverOptions& opt) {
    if (opt.N < 8) throw InputError("solve_system: N must be at least 8");
    SifTransformRecord r = KernelTable(s, cs, opt).solve(load);
    if (!opt.check_doubling) return r;
    SolverOptions fine = opt;
    fine.N = 2 * opt.N;
    fine.check_doubling = false;
    const SifTransformRecord f = KernelTable(s, cs, fine).solve(load);
    auto change = [](cplx a, cplx b) { return b == 0.0 ? std::abs(a) : std::abs(a - b) / std::abs(b); };
    r.doubling_drift = std::max(change(r.chi1, f.chi1), change(r.chi2, f.chi2));
    if (r.doubling_drift > opt.doubling_tol) {
        std::ostringstream os;
        os << "solve_system: tip unknowns change by " << r.doubling_drift << " from N = " << opt.N << " to "
           << fine.N << " at s = " << s;
        log_warning(os.str());
    }
    return r;
}

cplx load_moment(const std::vector<double>& x, const std::vector<double>& sigma, cplx s, double V) {
    if (x.size() != sigma.size()) throw InputError("load table: abscissae and values differ in length");
    if (x.size() < 2) return 0.0;
    static const GaussRule g = gauss_legendre(8);
    const cplx k = s / V;
    cplx acc = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double a = x[i], b = x[i + 1];
        if (!(b > a)) throw InputError("load table: abscissae must increase");
        const int panels = 1 + static_cast<int>(std::abs(k) * (b - a) / 2.0);
        const double h = (b - a) / panels;
        for (int q = 0; q < panels; ++q) {
            const double lo = a + q * h;
            for (std::size_t n = 0; n < g.x.size(); ++n) {
                const double xx = lo + 0.5 * h * (g.x[n] + 1.0);
                const double val = sigma[i] + (sigma[i + 1] - sigma[i]) * (xx - a) / (b - a);
                acc += 0.5 * h * g.w[n] * val * std::exp(-k * xx);
            }
        }
    }
    return acc;
}

}  // namespace dynfrac
