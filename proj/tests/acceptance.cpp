// End-to-end acceptance gate: eleven independent checks, one line each.
// Exit code is the number of failed checks.

#include "ncosc/core.hpp"
#include "ncosc/degeneracy.hpp"
#include "ncosc/oracle.hpp"
#include "ncosc/wavefunctions.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace ncosc;

namespace {

int failures = 0;

void report(int index, bool pass, const std::string& what) {
    std::printf("%s — criterion %2d: %s\n", pass ? "PASS" : "FAIL", index, what.c_str());
    if (!pass) ++failures;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::string fmt(const char* format, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, format, a, b);
    return buf;
}

const EnergyLevel* find_level(const std::vector<EnergyLevel>& levels, const Rational& c) {
    for (const auto& l : levels)
        if (l.coefficient == c) return &l;
    return nullptr;
}

void criterion_1_equal_pair_kappa() {
    const auto t0 = std::chrono::steady_clock::now();
    bool exact = true;
    for (const std::int64_t n : {std::int64_t{1}, std::int64_t{7}, std::int64_t{12345},
                                 std::int64_t{999983}})
        exact = exact && kappa_from_pair(n, n) == Rational(1, 3);
    const double kf = kappa_from_params({1.0, 1.0, 0.0, theta_d_case1(1, 1, 1, 1, 1), 1.0});
    const double float_err = std::abs(kf - 1.0 / 3.0);
    const double elapsed = ms_since(t0);
    report(1, exact && float_err <= 1e-12 && elapsed < 1.0,
           "n = k gives kappa = 1/3 exactly; float path off by " + fmt("%.2e", float_err) +
               fmt("; %.3f ms", elapsed));
}

void criterion_2_theta_d_electron() {
    const double td = theta_d_case1(9.109e-31, 1.518e16, default_hbar_si, 1, 1);
    const double rel = std::abs(td - 5.395e-21) / 5.395e-21;
    report(2, rel <= 1e-3,
           "electron theta_d = " + fmt("%.4e m^2", td) + fmt(" (%.2e relative off 5.395e-21)", rel));
}

void criterion_3_positive_table_row() {
    const auto levels = group_levels(Rational(1, 3), 3, 0, 11);
    const auto* l7 = find_level(levels, Rational(7));
    const auto* l1 = find_level(levels, Rational(1));
    const bool pass =
        l7 && l7->states == std::vector<QuantumNumbers>{{0, 9}, {1, 6}, {2, 3}, {3, 0}} &&
        l1 && l1->states == std::vector<QuantumNumbers>{{0, 0}};
    report(3, pass, "kappa = 1/3 grouping: level 7 = {(3,0),(2,3),(1,6),(0,9)}, level 1 = {(0,0)}");
}

void criterion_4_negative_table_row() {
    const auto levels = group_levels(Rational(1, 3), 6, -12, 0);
    const auto* l17 = find_level(levels, Rational(17));
    const bool pass =
        l17 && l17->states == std::vector<QuantumNumbers>{{0, -12}, {2, -9}, {4, -6}, {6, -3}};
    report(4, pass, "kappa = 1/3 grouping: level 17 = {(0,-12),(2,-9),(4,-6),(6,-3)}");
}

void criterion_5_exact_case3_example() {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try {
        const auto gs = g_candidates(Rational(1, 10000), 20001, 20000);
        const bool g_ok = gs.size() == 1 && gs[0] == Rational(1, 400020000);
        const auto xi = xi_exact(Rational(1, 10000), gs.at(0));
        const bool xi_ok = xi.exact && *xi.exact == Rational(40003, 800040001);
        const BigInt a = 400020000, b = 40001, c = 800040001;
        const bool identity_ok = 4 * a * a + b * b == c * c;
        pass = g_ok && xi_ok && identity_ok;
        detail = "f = 1/10000, (20001,20000): g = 1/400020000, xi = 40003/800040001";
    } catch (const std::exception& e) {
        detail = std::string("threw: ") + e.what();
    }
    const double elapsed = ms_since(t0);
    pass = pass && elapsed < 10.0;
    report(5, pass, detail + fmt("; %.3f ms", elapsed));
}

void criterion_6_landau_coefficients() {
    const auto narrow = group_levels(Rational(1), 5, -5, 5);
    const auto wide = group_levels(Rational(1), 5, -8, 8);
    std::set<Rational> want;
    for (int c = 1; c <= 21; c += 2) want.insert(Rational(c));
    std::set<Rational> got;
    bool counts_grow = true;
    for (const auto& level : narrow) {
        got.insert(level.coefficient);
        const auto* wider = find_level(wide, level.coefficient);
        counts_grow =
            counts_grow && wider != nullptr && wider->states.size() > level.states.size();
    }
    report(6, got == want && counts_grow,
           "saturated coefficients are exactly the odd ladder 1..21 and every count grows "
           "with the m_l box");
}

void criterion_7_fd_oracle() {
    const auto t0 = std::chrono::steady_clock::now();
    const PhysicalParams cases[] = {{1.0, 1.0, 0.0, std::sqrt(0.5), 1.0},
                                    {1.0, 1.0, 1.0, 1.0, 1.0},
                                    {1.0, 1.0, 0.1, 0.1, 1.0}};
    double worst = 0.0;
    for (const auto& p : cases) {
        const auto e = effective_params(p);
        const double ls = std::sqrt(e.hbar / (e.M_eff * e.Omega));
        for (const int m_l : {-2, 0, 3}) {
            const double r_max = 9.5 * ls * std::sqrt(8.0 + std::abs(m_l));
            const auto fd = fd_radial_eigenvalues_richardson(e, m_l, r_max, 2000, 4000, 4);
            for (int j = 0; j < 4; ++j) {
                const double exact = energy(e, {j, m_l});
                worst = std::max(worst, std::abs(fd[j] - exact) / exact);
            }
        }
    }
    const double elapsed = ms_since(t0);
    report(7, worst <= 1e-6 && elapsed < 30000.0,
           "finite-difference eigenvalues across all cases/m_l: worst " +
               fmt("%.2e relative; %.0f ms", worst, elapsed));
}

void criterion_8_commutator_suite() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20250813);
    std::uniform_real_distribution<double> theta_draw(0.1, 2.0);
    std::uniform_real_distribution<double> fill_draw(0.0, 0.95);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        PhysicalParams p{1.0, 1.0, 0.0, theta_draw(rng), 1.0};
        p.B = fill_draw(rng) / p.theta;
        const auto residuals = commutator_residuals(build_nc_operators(p, 16), p, 4);
        for (const auto& [name, value] : residuals) worst = std::max(worst, value);
    }
    const double elapsed = ms_since(t0);
    report(8, worst <= 1e-10 && elapsed < 10000.0,
           "six commutator residuals over 10 draws (N=16, margin=4): worst " +
               fmt("%.2e; %.0f ms", worst, elapsed));
}

void criterion_9_normalization() {
    const auto t0 = std::chrono::steady_clock::now();
    const PhysicalParams cases[] = {{1.0, 1.0, 0.0, std::sqrt(0.5), 1.0},
                                    {1.0, 1.0, 1.0, 1.0, 1.0},
                                    {1.0, 1.0, 0.1, 0.1, 1.0}};
    double worst_norm = 0.0, worst_overlap = 0.0;
    for (const auto& p : cases) {
        const auto e = effective_params(p);
        for (int m = -10; m <= 10; ++m) {
            for (int n = 0; n <= 10; ++n)
                worst_norm =
                    std::max(worst_norm, std::abs(normalization_check({e, {n, m}}) - 1.0));
            for (int n = 0; n <= 10; ++n)
                for (int n2 = n + 1; n2 <= 10; ++n2)
                    worst_overlap = std::max(
                        worst_overlap, std::abs(orthogonality_check({e, {n, m}}, {e, {n2, m}})));
        }
    }
    const double elapsed = ms_since(t0);
    report(9, worst_norm <= 1e-8 && worst_overlap <= 1e-8 && elapsed < 60000.0,
           "all states n_r <= 10, |m_l| <= 10, three cases: worst norm defect " +
               fmt("%.2e, worst overlap %.2e", worst_norm, worst_overlap) +
               fmt("; %.0f ms", elapsed));
}

void criterion_10_spread_monotonicity() {
    bool increasing = true, decreasing = true;
    double prev = 0.0;
    for (int i = 1; i <= 10; ++i) {
        const double theta = 0.2 * i;
        const double s = density_spread_metric({effective_params({1, 1, 0.0, theta, 1}), {0, 0}});
        if (i > 1 && s <= prev) increasing = false;
        prev = s;
    }
    for (int i = 1; i <= 10; ++i) {
        const double B = 0.5 * i;
        const double s = density_spread_metric({effective_params({1, 1, B, 1.0 / B, 1}), {0, 0}});
        if (i > 1 && s >= prev) decreasing = false;
        prev = s;
    }
    report(10, increasing && decreasing,
           "spread metric strictly grows over a 10-point theta sweep (B = 0) and strictly "
           "shrinks over a 10-point B sweep (B theta = hbar)");
}

void criterion_11_partner_property() {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<std::int64_t> nk_draw(1, 8);
    std::uniform_int_distribution<int> nr_draw(0, 12);
    std::uniform_int_distribution<int> ml_draw(-12, 12);

    struct LevelIndex {
        std::map<std::pair<int, int>, Rational> coefficient_of;
    };
    std::map<Rational, LevelIndex> cache;
    const int box_nr = 30, box_ml = 40;

    const auto index_for = [&](const Rational& kappa) -> const LevelIndex& {
        auto it = cache.find(kappa);
        if (it == cache.end()) {
            LevelIndex idx;
            for (const auto& level : group_levels(kappa, box_nr, -box_ml, box_ml))
                for (const auto& q : level.states)
                    idx.coefficient_of.emplace(std::pair{q.n_r, q.m_l}, level.coefficient);
            it = cache.emplace(kappa, std::move(idx)).first;
        }
        return it->second;
    };

    int kept = 0;
    bool pass = true;
    for (int i = 0; i < 10000 && pass; ++i) {
        const std::int64_t n = nk_draw(rng), k = nk_draw(rng);
        const Rational kappa = kappa_from_pair(n, k);
        const QuantumNumbers q{nr_draw(rng), ml_draw(rng)};
        const Rational coeff = energy_coefficient_exact(kappa, q);
        const auto& idx = index_for(kappa);

        std::vector<QuantumNumbers> partners;
        const auto collect = [&](const DegeneratePartners& dp) {
            if (dp.m_raised) partners.push_back(*dp.m_raised);
            if (dp.m_lowered) partners.push_back(*dp.m_lowered);
        };
        if (q.m_l >= 0) collect(partners_case_positive(q, n, k));
        if (q.m_l <= 0) collect(partners_case_negative(q, n, k));

        for (const auto& partner : partners) {
            ++kept;
            if (energy_coefficient_exact(kappa, partner) != coeff) pass = false;
            const auto found = idx.coefficient_of.find({partner.n_r, partner.m_l});
            if (found == idx.coefficient_of.end() || found->second != coeff) pass = false;
        }
    }
    report(11, pass && kept > 1000,
           "10^4 random (q,n,k) draws: " + std::to_string(kept) +
               " kept partners all share the exact coefficient and co-occur in the "
               "brute-force grouping");
}

}  // namespace

int main() {
    criterion_1_equal_pair_kappa();
    criterion_2_theta_d_electron();
    criterion_3_positive_table_row();
    criterion_4_negative_table_row();
    criterion_5_exact_case3_example();
    criterion_6_landau_coefficients();
    criterion_7_fd_oracle();
    criterion_8_commutator_suite();
    criterion_9_normalization();
    criterion_10_spread_monotonicity();
    criterion_11_partner_property();
    if (failures == 0)
        std::printf("all 11 acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria FAILED\n", failures);
    return failures;
}
