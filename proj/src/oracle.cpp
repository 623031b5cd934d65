#include "ncosc/oracle.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

namespace ncosc {

namespace {

void check_effective(const EffectiveParams& e) {
    if (!(e.M_eff > 0.0) || !(e.Omega > 0.0) || !(e.hbar > 0.0))
        throw DomainError("effective parameters must be positive");
}

}  // namespace

Tridiagonal fd_radial_matrix(const EffectiveParams& e, int m_l, RadialGrid grid) {
    check_effective(e);
    if (grid.n_points < 3 || !(grid.r_max > 0.0))
        throw DomainError("fd_radial_matrix: need n_points >= 3 and r_max > 0");
    const int n = grid.n_points;
    const double h = grid.spacing();
    const double kin = e.hbar * e.hbar / (2.0 * e.M_eff);
    const double spring = 0.5 * e.M_eff * e.Omega * e.Omega;
    const double p = std::abs(m_l) + 0.5;

    Tridiagonal t;
    t.diag.resize(n);
    t.off.assign(n - 1, -kin / (h * h));
    for (int i = 1; i <= n; ++i) {
        const double r = i * h;
        // second-difference of r^p divided by r^p: equals (m^2 - 1/4)/r^2 + O(h^2)
        // and is exact on the singular factor itself (grid powers of the index,
        // the h^p factors cancel)
        const double ip = std::pow(static_cast<double>(i), p);
        const double cent =
            (std::pow(i - 1.0, p) - 2.0 * ip + std::pow(i + 1.0, p)) / (h * h * ip);
        t.diag[i - 1] = 2.0 * kin / (h * h) + kin * cent + spring * r * r;
    }
    return t;
}

namespace {

// Eigenvalues of T strictly below x (Sturm sequence of the LDL^T pivots).
int count_below(const std::vector<double>& d, const std::vector<double>& e, double x,
                double pivmin) {
    int count = 0;
    double q = d[0] - x;
    for (std::size_t i = 0;; ++i) {
        if (std::abs(q) < pivmin) q = -pivmin;
        if (q < 0.0) ++count;
        if (i + 1 == d.size()) break;
        q = d[i + 1] - x - e[i] * e[i] / q;
    }
    return count;
}

}  // namespace

std::vector<double> tridiag_lowest_eigenvalues(const Tridiagonal& t, int n_eig) {
    const int n = static_cast<int>(t.diag.size());
    if (n < 1 || static_cast<int>(t.off.size()) != n - 1)
        throw DomainError("tridiag_lowest_eigenvalues: inconsistent matrix");
    if (n_eig < 1 || n_eig > n)
        throw DomainError("tridiag_lowest_eigenvalues: bad n_eig");

    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    double emax2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double left = i > 0 ? std::abs(t.off[i - 1]) : 0.0;
        const double right = i < n - 1 ? std::abs(t.off[i]) : 0.0;
        lo = std::min(lo, t.diag[i] - left - right);
        hi = std::max(hi, t.diag[i] + left + right);
        if (i < n - 1) emax2 = std::max(emax2, t.off[i] * t.off[i]);
    }
    const double pivmin = std::numeric_limits<double>::min() * std::max(1.0, emax2);
    const double scale = std::max(std::abs(lo), std::abs(hi));

    std::vector<double> out(n_eig);
    for (int k = 0; k < n_eig; ++k) {
        double a = lo, b = hi;
        for (int iter = 0; iter < 200; ++iter) {
            const double mid = 0.5 * (a + b);
            if (b - a <= 4.0 * std::numeric_limits<double>::epsilon() * scale) break;
            if (count_below(t.diag, t.off, mid, pivmin) > k)
                b = mid;
            else
                a = mid;
        }
        if (b - a > 1e-9 * scale)
            throw ConvergenceFailure("tridiagonal bisection failed to localize an eigenvalue");
        out[k] = 0.5 * (a + b);
    }
    return out;
}

std::vector<double> fd_radial_eigenvalues(const EffectiveParams& e, int m_l, RadialGrid grid,
                                          int n_eig) {
    check_effective(e);
    if (n_eig < 1) throw DomainError("fd_radial_eigenvalues: n_eig must be positive");
    if (n_eig > grid.n_points / 4)
        throw DomainError("fd_radial_eigenvalues: n_eig must not exceed n_points/4");
    const double ls = std::sqrt(e.hbar / (e.M_eff * e.Omega));
    if (grid.r_max < 8.0 * ls * std::sqrt(2.0 * n_eig + std::abs(m_l)))
        throw GridTooCoarse("fd_radial_eigenvalues: r_max too small for the requested states");
    std::vector<double> evals = tridiag_lowest_eigenvalues(fd_radial_matrix(e, m_l, grid), n_eig);
    for (double& v : evals) v -= m_l * e.hbar * e.gamma;
    return evals;
}

std::vector<double> fd_radial_eigenvalues_richardson(const EffectiveParams& e, int m_l,
                                                     double r_max, int n_coarse, int n_fine,
                                                     int n_eig) {
    if (n_coarse >= n_fine)
        throw DomainError("fd_radial_eigenvalues_richardson: need n_coarse < n_fine");
    const auto coarse = fd_radial_eigenvalues(e, m_l, {n_coarse, r_max}, n_eig);
    const auto fine = fd_radial_eigenvalues(e, m_l, {n_fine, r_max}, n_eig);
    const double hc = r_max / (n_coarse + 1.0);
    const double hf = r_max / (n_fine + 1.0);
    const double hc2 = hc * hc, hf2 = hf * hf;
    std::vector<double> out(n_eig);
    for (int i = 0; i < n_eig; ++i)
        out[i] = (fine[i] * hc2 - coarse[i] * hf2) / (hc2 - hf2);
    return out;
}

NcOperators build_nc_operators(const PhysicalParams& p, int n_1d) {
    if (n_1d < 4) throw DomainError("build_nc_operators: n_1d must be at least 4");
    if (!(p.mass > 0.0) || !(p.omega > 0.0) || !(p.hbar > 0.0))
        throw DomainError("build_nc_operators: mass, omega, hbar must be positive");
    if (p.theta < 0.0 || p.B < 0.0)
        throw DomainError("build_nc_operators: theta and B must be nonnegative");
    if (p.B * p.theta > p.hbar * (1.0 + default_case_tolerance))
        throw ConstraintViolation("build_nc_operators: B*theta exceeds hbar");

    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_1d, n_1d);
    for (int i = 1; i < n_1d; ++i) a(i - 1, i) = std::sqrt(static_cast<double>(i));
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n_1d, n_1d);
    const Eigen::MatrixXd a1 = Eigen::kroneckerProduct(a, id);
    const Eigen::MatrixXd a2 = Eigen::kroneckerProduct(id, a);

    const double s = std::sqrt(p.hbar / (p.mass * p.omega));
    const double xs = s / std::numbers::sqrt2;
    const double ps = p.hbar / (s * std::numbers::sqrt2);
    const std::complex<double> i1(0.0, 1.0);

    NcOperators ops;
    ops.n_1d = n_1d;
    ops.mass = p.mass;
    ops.omega = p.omega;
    ops.hbar = p.hbar;
    ops.theta = p.theta;
    ops.B = p.B;
    ops.x = (xs * (a1 + a1.transpose())).cast<std::complex<double>>();
    ops.y = (xs * (a2 + a2.transpose())).cast<std::complex<double>>();
    ops.px = i1 * ps * (a1.transpose() - a1).cast<std::complex<double>>();
    ops.py = i1 * ps * (a2.transpose() - a2).cast<std::complex<double>>();

    const double root = std::sqrt(std::max(0.0, p.hbar * (p.hbar - p.B * p.theta)));
    const double c_B = p.hbar * p.B / (p.hbar + root);      // B at saturation, 0 at B = 0
    const double c_p = (p.hbar + root) / (2.0 * p.hbar);    // 1/2 at saturation, 1 at B = 0
    const double bopp = p.theta / (2.0 * p.hbar);
    ops.X = ops.x - bopp * ops.py;
    ops.Y = ops.y + bopp * ops.px;
    ops.Pix = c_B * ops.y + c_p * ops.px;
    ops.Piy = -c_B * ops.x + c_p * ops.py;
    return ops;
}

namespace {

std::vector<int> kept_indices(int n_1d, int margin) {
    const int cut = n_1d - margin;  // max kept total excitation n1 + n2
    std::vector<int> kept;
    for (int n1 = 0; n1 < n_1d; ++n1)
        for (int n2 = 0; n2 < n_1d; ++n2)
            if (n1 + n2 <= cut) kept.push_back(n1 * n_1d + n2);
    return kept;
}

double projected_max_norm(const Eigen::MatrixXcd& m, const std::vector<int>& kept) {
    double worst = 0.0;
    for (int i : kept)
        for (int j : kept) worst = std::max(worst, std::abs(m(i, j)));
    return worst;
}

}  // namespace

std::map<std::string, double> commutator_residuals(const NcOperators& ops,
                                                   const PhysicalParams& p, int margin) {
    if (margin < 2) throw DomainError("commutator_residuals: margin must be at least 2");
    if (margin >= ops.n_1d) throw DomainError("commutator_residuals: margin exceeds basis size");
    const std::vector<int> kept = kept_indices(ops.n_1d, margin);
    const std::complex<double> i1(0.0, 1.0);
    const auto resid = [&](const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B,
                           std::complex<double> target) {
        Eigen::MatrixXcd c = A * B - B * A;
        c.diagonal().array() -= target;
        return projected_max_norm(c, kept);
    };
    return {
        {"XY", resid(ops.X, ops.Y, i1 * p.theta)},
        {"PixPiy", resid(ops.Pix, ops.Piy, i1 * p.hbar * p.B)},
        {"XPix", resid(ops.X, ops.Pix, i1 * p.hbar)},
        {"YPiy", resid(ops.Y, ops.Piy, i1 * p.hbar)},
        {"XPiy", resid(ops.X, ops.Piy, 0.0)},
        {"YPix", resid(ops.Y, ops.Pix, 0.0)},
    };
}

Eigen::MatrixXcd assemble_hamiltonian(const NcOperators& ops) {
    const double m = ops.mass, w = ops.omega;
    return (ops.Pix * ops.Pix + ops.Piy * ops.Piy) / (2.0 * m) +
           0.5 * m * w * w * (ops.X * ops.X + ops.Y * ops.Y);
}

std::vector<double> truncated_spectrum(const NcOperators& ops, int margin, int n_eig) {
    if (margin < 2) throw DomainError("truncated_spectrum: margin must be at least 2");
    const std::vector<int> kept = kept_indices(ops.n_1d, margin);
    if (n_eig < 1 || n_eig > static_cast<int>(kept.size()))
        throw DomainError("truncated_spectrum: bad n_eig");
    const Eigen::MatrixXcd h = assemble_hamiltonian(ops);
    const int dim = static_cast<int>(kept.size());
    Eigen::MatrixXcd block(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) block(i, j) = h(kept[i], kept[j]);
    block = 0.5 * (block + block.adjoint().eval());
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(block);
    if (solver.info() != Eigen::Success)
        throw ConvergenceFailure("truncated_spectrum: eigensolver failed");
    return {solver.eigenvalues().data(), solver.eigenvalues().data() + n_eig};
}

std::vector<double> analytic_lowest_energies(const EffectiveParams& e, int count) {
    check_effective(e);
    if (count < 1) throw DomainError("analytic_lowest_energies: count must be positive");
    const double ratio = e.gamma / e.Omega;
    const int m_box = std::min(
        4096, std::max(count + 8, static_cast<int>((2.0 * count + 8.0) / std::max(0.02, 1.0 - ratio))));
    std::vector<double> all;
    all.reserve(static_cast<std::size_t>(count + 3) * (2 * m_box + 1));
    for (int n_r = 0; n_r <= count + 2; ++n_r)
        for (int m_l = -m_box; m_l <= m_box; ++m_l)
            all.push_back(energy(e, {n_r, m_l}));
    std::sort(all.begin(), all.end());
    all.resize(count);
    return all;
}

namespace {

long double laguerre_ld(int n, long double alpha, long double x) {
    if (n == 0) return 1.0L;
    long double prev = 1.0L;
    long double cur = 1.0L + alpha - x;
    for (int j = 2; j <= n; ++j) {
        const long double next = ((2.0L * j - 1.0L + alpha - x) * cur - (j - 1.0L + alpha) * prev) / j;
        prev = cur;
        cur = next;
    }
    return cur;
}

// v(r) = sqrt(r) R(r) up to a constant: the function the substituted operator acts on
struct SubstitutedRadial {
    int n, a;
    long double mo_h;     // M Omega / hbar
    long double lognorm;  // log of n!/(n+a)!

    long double operator()(long double r) const {
        const long double u = mo_h * r * r;
        if (u == 0.0L && a > 0) return 0.0L;
        long double logmag = 0.5L * (lognorm - u);
        if (a > 0) logmag += 0.5L * a * std::log(u);
        return std::sqrt(r) * std::exp(logmag) * laguerre_ld(n, a, u);
    }
};

}  // namespace

double hamiltonian_residual(const EffectiveParams& e, QuantumNumbers q,
                            const std::vector<double>& sample_r, double step_scale) {
    check_effective(e);
    if (!(step_scale > 0.0) || step_scale > 1e-2)
        throw DomainError("hamiltonian_residual: step_scale out of range");
    const int n = q.n_r;
    const int a = std::abs(q.m_l);
    const long double hbar = e.hbar, M = e.M_eff, Om = e.Omega;
    const long double ls = std::sqrt(hbar / (M * Om));
    const long double h = step_scale * ls;
    const long double E = (2.0L * n + a + 1.0L) * hbar * Om;  // radial operator eigenvalue
    const double r_cut = static_cast<double>(ls) * std::sqrt(2.0 * (2.0 * n + a) + 40.0);

    const SubstitutedRadial v{n, a, M * Om / hbar,
                              std::lgamma(n + 1.0L) - std::lgamma(n + a + 1.0L)};

    // guard band: reject samples where |v| falls below 1e-3 of its profile maximum
    long double v_max = 0.0L;
    for (int j = 1; j <= 512; ++j)
        v_max = std::max(v_max, std::abs(v(r_cut * j / 512.0L)));
    const long double guard = 1e-3L * v_max;

    std::vector<long double> samples;
    if (!sample_r.empty()) {
        for (const double r : sample_r) {
            if (!(r > 0.0) || r >= r_cut)
                throw DomainError("hamiltonian_residual: sample out of (0, r_cut)");
            if (std::abs(v(r)) < guard)
                throw SingularSample("hamiltonian_residual: sample too close to a node");
            samples.push_back(r);
        }
    } else {
        const long double r_rms = ls * std::sqrt(2.0L * n + a + 1.0L);
        for (const double frac : {0.45, 0.8, 1.15, 1.5}) {
            // walk outward (then inward) to the nearest radius clear of nodes
            long double r = frac * r_rms;
            bool ok = false;
            for (long double t = r; t < r_cut; t *= 1.01L)
                if (std::abs(v(t)) >= guard) { r = t; ok = true; break; }
            if (!ok)
                for (long double t = r; t > 16.0L * h; t /= 1.01L)
                    if (std::abs(v(t)) >= guard) { r = t; ok = true; break; }
            if (ok) samples.push_back(r);
        }
        if (samples.empty())
            throw SingularSample("hamiltonian_residual: no usable default sample");
    }

    const long double kin = hbar * hbar / (2.0L * M);
    const long double spring = 0.5L * M * Om * Om;
    const long double m2 = (static_cast<long double>(a) * a - 0.25L);
    long double worst = 0.0L;
    for (const long double r : samples) {
        const long double d2 =
            (-v(r - 2.0L * h) + 16.0L * v(r - h) - 30.0L * v(r) + 16.0L * v(r + h) -
             v(r + 2.0L * h)) /
            (12.0L * h * h);
        const long double vr = v(r);
        const long double hv = -kin * d2 + (kin * m2 / (r * r) + spring * r * r) * vr;
        worst = std::max(worst, std::abs(hv - E * vr) / (E * std::abs(vr)));
    }
    return static_cast<double>(worst);
}

}  // namespace ncosc
