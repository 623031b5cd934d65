#include "ncosc/wavefunctions.hpp"

#include "ncosc/parallel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>

namespace ncosc {

double laguerre(int n, double alpha, double x) {
    if (n < 0) throw DomainError("laguerre: n must be nonnegative");
    if (x < 0.0) throw DomainError("laguerre: x must be nonnegative");
    if (n == 0) return 1.0;
    double prev = 1.0;
    double cur = 1.0 + alpha - x;
    for (int j = 2; j <= n; ++j) {
        const double next = ((2.0 * j - 1.0 + alpha - x) * cur - (j - 1.0 + alpha) * prev) / j;
        prev = cur;
        cur = next;
    }
    return cur;
}

double Eigenstate::length_scale() const {
    return std::sqrt(params.hbar / (params.M_eff * params.Omega));
}

namespace {

// log of the normalization ratio n_r! / (n_r + |m_l|)!
double log_factorial_ratio(int n, int a) {
    return std::lgamma(n + 1.0) - std::lgamma(n + a + 1.0);
}

}  // namespace

double psi_squared(const Eigenstate& s, double r, double /*phi*/) {
    if (r < 0.0) throw DomainError("psi_squared: r must be nonnegative");
    const int n = s.q.n_r;
    const int a = std::abs(s.q.m_l);
    const double mo_h = s.params.M_eff * s.params.Omega / s.params.hbar;
    const double u = mo_h * r * r;
    if (u == 0.0 && a > 0) return 0.0;
    double logmag = log_factorial_ratio(n, a) - u;
    if (a > 0) logmag += a * std::log(u);
    const double L = laguerre(n, a, u);
    return mo_h / std::numbers::pi * std::exp(logmag) * L * L;
}

double radial_amplitude(const Eigenstate& s, double r) {
    if (r < 0.0) throw DomainError("radial_amplitude: r must be nonnegative");
    const int n = s.q.n_r;
    const int a = std::abs(s.q.m_l);
    const double mo_h = s.params.M_eff * s.params.Omega / s.params.hbar;
    const double u = mo_h * r * r;
    if (u == 0.0 && a > 0) return 0.0;
    double logmag = 0.5 * (log_factorial_ratio(n, a) - u);
    if (a > 0) logmag += 0.5 * a * std::log(u);
    return std::sqrt(2.0 * mo_h) * std::exp(logmag) * laguerre(n, a, u);
}

namespace {

// 64-point Gauss-Legendre rule on [-1, 1]; nodes by Newton iteration on P_64.
struct GaussLegendre64 {
    std::array<double, 32> node;    // positive half
    std::array<double, 32> weight;

    GaussLegendre64() {
        constexpr int n = 64;
        for (int i = 0; i < 32; ++i) {
            double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int iter = 0; iter < 100; ++iter) {
                double p0 = 1.0, p1 = x;
                for (int j = 2; j <= n; ++j) {
                    const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-16) break;
            }
            node[i] = x;
            weight[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
    }
};

const GaussLegendre64& gl64() {
    static const GaussLegendre64 rule;
    return rule;
}

double gl_panel(const std::function<double(double)>& f, double a, double b) {
    const auto& rule = gl64();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < 32; ++i)
        sum += rule.weight[i] * (f(mid - half * rule.node[i]) + f(mid + half * rule.node[i]));
    return sum * half;
}

double composite(const std::function<double(double)>& f, double a, double b, int panels) {
    const double step = (b - a) / panels;
    double sum = 0.0;
    for (int k = 0; k < panels; ++k)
        sum += gl_panel(f, a + k * step, a + (k + 1) * step);
    return sum;
}

// Doubles the panel count until two successive composite rules agree.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, double abs_floor) {
    double prev = composite(f, a, b, 8);
    for (int panels = 16; panels <= 1024; panels *= 2) {
        const double cur = composite(f, a, b, panels);
        if (std::abs(cur - prev) <= std::max(abs_floor, rel_tol * std::abs(cur)))
            return cur;
        prev = cur;
    }
    throw QuadratureFailure("adaptive Gauss-Legendre did not converge");
}

// Quadrature cut in the scaled variable u = M Omega r^2 / hbar, extended until
// the integrand u^a e^-u L^2 provably decays at least like e^{-u/4}:
// d/du log(...) = a/u + 2 sum 1/(u - z_i) - 1 <= a/u + 2n/(u - z_max) - 1,
// with z_max = 4n + 2a + 2 an upper bound on the largest Laguerre zero.
double tail_safe_cut(int n, int a) {
    const double z_max = 4.0 * n + 2.0 * a + 2.0;
    double u_hi = std::max(2.0 * (2.0 * n + a) + 100.0, z_max + 40.0);
    while (a / u_hi + 2.0 * n / (u_hi - z_max) > 0.75) u_hi += 40.0;
    return u_hi;
}

}  // namespace

double normalization_check(const Eigenstate& s) {
    const int n = s.q.n_r;
    const int a = std::abs(s.q.m_l);
    const double ls = s.length_scale();
    const double u_hi = tail_safe_cut(n, a);
    const double r_hi = ls * std::sqrt(u_hi);
    const double integral = integrate_adaptive(
        [&](double r) { return 2.0 * std::numbers::pi * r * psi_squared(s, r); }, 0.0, r_hi,
        1e-11, 1e-12);
    // remaining mass <= 4 * (u-space integrand at the cut) by the decay bound
    const double tail_bound = 4.0 * std::numbers::pi * ls * ls * psi_squared(s, r_hi);
    return integral + tail_bound;
}

double orthogonality_check(const Eigenstate& a, const Eigenstate& b) {
    const auto& pa = a.params;
    const auto& pb = b.params;
    if (pa.M_eff != pb.M_eff || pa.Omega != pb.Omega || pa.gamma != pb.gamma ||
        pa.hbar != pb.hbar)
        throw DomainError("orthogonality_check: states must share effective parameters");
    if (a.q == b.q) throw DomainError("orthogonality_check: states must differ");
    if (a.q.m_l != b.q.m_l) return 0.0;  // angular integration kills the overlap exactly
    const int n = std::max(a.q.n_r, b.q.n_r);
    const double r_hi = a.length_scale() * std::sqrt(tail_safe_cut(n, std::abs(a.q.m_l)));
    return integrate_adaptive(
        [&](double r) { return r * radial_amplitude(a, r) * radial_amplitude(b, r); }, 0.0,
        r_hi, 1e-11, 1e-12);
}

double density_spread_metric(const Eigenstate& s) {
    return s.length_scale() * std::sqrt(2.0 * s.q.n_r + std::abs(s.q.m_l) + 1.0);
}

double auto_density_radius(const Eigenstate& s) {
    return 5.0 * density_spread_metric(s);
}

DensityGrid density_grid(const Eigenstate& s, double radius, int resolution, int resolution_cap) {
    if (resolution < 2) throw DomainError("density_grid: resolution must be at least 2");
    if (resolution > resolution_cap) throw BudgetExceeded("density_grid: resolution above cap");
    if (!(radius > 0.0)) throw DomainError("density_grid: radius must be positive");

    DensityGrid grid;
    grid.radius = radius;
    grid.resolution = resolution;
    grid.q = s.q;
    grid.length_scale = s.length_scale();
    grid.values.resize(static_cast<std::size_t>(resolution) * resolution);

    const double step = 2.0 * radius / resolution;
    parallel_chunks(resolution, [&](int, int row_begin, int row_end) {
        for (int i = row_begin; i < row_end; ++i) {
            const double y = radius - (i + 0.5) * step;
            double* row = grid.values.data() + static_cast<std::size_t>(i) * resolution;
            for (int j = 0; j < resolution; ++j) {
                const double x = -radius + (j + 0.5) * step;
                row[j] = psi_squared(s, std::hypot(x, y));
            }
        }
    });
    grid.max_value = *std::max_element(grid.values.begin(), grid.values.end());
    return grid;
}

int count_density_rings(const Eigenstate& s, int n_samples) {
    if (n_samples < 16) throw DomainError("count_density_rings: too few samples");
    const int n = s.q.n_r;
    const int a = std::abs(s.q.m_l);
    const double r_cut = s.length_scale() * std::sqrt(2.0 * (2.0 * n + a) + 40.0);
    std::vector<double> prof(n_samples + 1);
    for (int j = 0; j <= n_samples; ++j)
        prof[j] = psi_squared(s, r_cut * j / n_samples);
    const double floor = 1e-14 * *std::max_element(prof.begin(), prof.end());
    int rings = 0;
    if (prof[0] > prof[1] && prof[0] > floor) ++rings;  // central antinode (m_l = 0)
    for (int j = 1; j < n_samples; ++j)
        if (prof[j] > prof[j - 1] && prof[j] > prof[j + 1] && prof[j] > floor) ++rings;
    return rings;
}

}  // namespace ncosc
