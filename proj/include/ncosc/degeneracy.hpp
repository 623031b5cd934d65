#pragma once

#include "ncosc/core.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace ncosc {

inline constexpr std::uint64_t default_state_budget = 10'000'000;
inline constexpr int max_box_bound = 10'000;  // sanity limit on quantum-number boxes

// kappa = k / (2n + k), always rational in (0, 1).
Rational kappa_from_pair(std::int64_t n, std::int64_t k);

// Degenerate noncommutativity values at B = 0: theta_d = (hbar/(m omega)) * k / sqrt(n(n+k)).
double theta_d_case1(double mass, double omega, double hbar, std::int64_t n, std::int64_t k);

// gamma/Omega at B = 0: sqrt(1 - 4 hbar^2 / (4 hbar^2 + m^2 omega^2 theta^2)).
// CaseMismatch unless B == 0.
double kappa_from_params(const PhysicalParams& p);

// gamma/Omega for 0 < B*theta < hbar. CaseMismatch otherwise.
double xi_from_params(const PhysicalParams& p);

// xi = (f+g)/sqrt(4+(f-g)^2). `exact` is set iff the radicand is a perfect
// square of a rational; `value` is always the float evaluation.
struct XiValue {
    std::optional<Rational> exact;
    double value;
};

XiValue xi_exact(const Rational& f, const Rational& g);

// The two candidate g values { f - 4nk/(n^2-k^2), f - (n^2-k^2)/(nk) } that
// keep xi rational, filtered to g > 0 and f*g < 1, in that order.
// Requires n > k >= 1, gcd(n,k) = 1, n and k not both odd (DomainError),
// and throws EmptyResult when the filter removes both.
std::vector<Rational> g_candidates(const Rational& f_exp, std::int64_t n, std::int64_t k);

// Candidate degenerate partners of q under kappa = k/(2n+k). The ladder
// formulas assume a fixed sign regime for m_l, so every candidate is
// re-verified by exact coefficient equality and dropped when it fails or
// when its n_r would be negative.
struct DegeneratePartners {
    std::optional<QuantumNumbers> m_raised;   // m_l + (2n+k)
    std::optional<QuantumNumbers> m_lowered;  // m_l - (2n+k)
};

DegeneratePartners partners_case_positive(QuantumNumbers q, std::int64_t n, std::int64_t k);
DegeneratePartners partners_case_negative(QuantumNumbers q, std::int64_t n, std::int64_t k);

struct EnergyLevel {
    Rational coefficient;                // energy in units of hbar*Omega
    std::vector<QuantumNumbers> states;  // sorted by (n_r, m_l)
};

// Brute-force grouping of the box n_r in [0, n_r_max], m_l in [m_l_min, m_l_max]
// by exact rational coefficient, sorted by coefficient. Never compares floats.
std::vector<EnergyLevel> group_levels(const Rational& kappa, int n_r_max, int m_l_min,
                                      int m_l_max, std::uint64_t budget = default_state_budget);

// Level sizes for every coefficient <= coefficient_max, enumerated over the
// provably sufficient box n_r <= (c-1)/2, |m_l| <= (c-1)/(1-kappa).
// kappa = 1 has no finite sufficient box (Landau degeneracy) -> BudgetExceeded.
std::map<Rational, std::uint64_t> degeneracy_count_profile(
    const Rational& kappa, const Rational& coefficient_max, bool nonnegative_m_only = false,
    std::uint64_t budget = default_state_budget);

}  // namespace ncosc
