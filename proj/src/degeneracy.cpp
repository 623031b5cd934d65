#include "ncosc/degeneracy.hpp"

#include "ncosc/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ncosc {

namespace {

void check_ratio_pair(std::int64_t n, std::int64_t k) {
    if (n < 1 || k < 1) throw DomainError("ratio pair requires n >= 1 and k >= 1");
    // exact arithmetic is O(1) in (n, k); only guard the int64 expressions
    if (n > (std::int64_t{1} << 40) || k > (std::int64_t{1} << 40))
        throw DomainError("ratio pair out of supported range");
}

}  // namespace

Rational kappa_from_pair(std::int64_t n, std::int64_t k) {
    check_ratio_pair(n, k);
    return Rational(k, 2 * n + k);
}

double theta_d_case1(double mass, double omega, double hbar, std::int64_t n, std::int64_t k) {
    check_ratio_pair(n, k);
    if (!(mass > 0.0) || !(omega > 0.0) || !(hbar > 0.0))
        throw DomainError("theta_d_case1 requires positive mass, omega, hbar");
    const double c = static_cast<double>(k) /
                     std::sqrt(static_cast<double>(n) * static_cast<double>(n + k));
    return hbar / (mass * omega) * c;
}

double kappa_from_params(const PhysicalParams& p) {
    validate(p);
    if (p.B != 0.0) throw CaseMismatch("kappa is defined for B = 0 only");
    const double mwt = p.mass * p.omega * p.theta;
    const double h2 = 4.0 * p.hbar * p.hbar;
    return std::sqrt(1.0 - h2 / (h2 + mwt * mwt));
}

double xi_from_params(const PhysicalParams& p) {
    if (classify_case(p) != CaseLabel::intermediate)
        throw CaseMismatch("xi is defined for 0 < B*theta < hbar only");
    const EffectiveParams e = effective_params(p);
    return e.gamma / e.Omega;
}

XiValue xi_exact(const Rational& f, const Rational& g) {
    if (!(f > 0) || !(g > 0)) throw DomainError("xi_exact requires f > 0 and g > 0");
    if (!(f * g < 1)) throw DomainError("xi_exact requires f*g < 1");
    const Rational diff = f - g;
    const Rational radicand = 4 + diff * diff;
    if (auto root = exact_sqrt(radicand))
        return XiValue{(f + g) / *root, to_double((f + g) / *root)};
    return XiValue{std::nullopt, to_double(f + g) / std::sqrt(to_double(radicand))};
}

std::vector<Rational> g_candidates(const Rational& f_exp, std::int64_t n, std::int64_t k) {
    check_ratio_pair(n, k);
    if (n <= k) throw DomainError("g_candidates requires n > k");
    if (std::gcd(n, k) != 1) throw DomainError("g_candidates requires gcd(n, k) = 1");
    if (n % 2 == 1 && k % 2 == 1) throw DomainError("g_candidates requires n, k not both odd");
    if (!(f_exp > 0)) throw DomainError("g_candidates requires f > 0");

    const BigInt bn = n, bk = k;
    const BigInt n2k2 = bn * bn - bk * bk;
    // the admissible differences f - g; either one makes 4 + (f-g)^2 a perfect rational square
    const Rational diffs[2] = {Rational(4 * bn * bk, n2k2), Rational(n2k2, bn * bk)};

    std::vector<Rational> out;
    for (const Rational& d : diffs) {
        const Rational g = f_exp - d;
        if (g > 0 && f_exp * g < 1) out.push_back(g);
    }
    if (out.empty())
        throw EmptyResult("no positive g with f*g < 1 for this (f, n, k)");
    return out;
}

namespace {

std::optional<QuantumNumbers> verified_partner(QuantumNumbers q, QuantumNumbers candidate,
                                               const Rational& kappa) {
    if (candidate.n_r < 0) return std::nullopt;
    if (energy_coefficient_exact(kappa, candidate) != energy_coefficient_exact(kappa, q))
        return std::nullopt;
    return candidate;
}

}  // namespace

DegeneratePartners partners_case_positive(QuantumNumbers q, std::int64_t n, std::int64_t k) {
    if (q.n_r < 0) throw DomainError("n_r must be nonnegative");
    const Rational kappa = kappa_from_pair(n, k);
    const int dn = static_cast<int>(n);
    const int dm = static_cast<int>(2 * n + k);
    return DegeneratePartners{
        verified_partner(q, {q.n_r - dn, q.m_l + dm}, kappa),
        verified_partner(q, {q.n_r + dn, q.m_l - dm}, kappa),
    };
}

DegeneratePartners partners_case_negative(QuantumNumbers q, std::int64_t n, std::int64_t k) {
    if (q.n_r < 0) throw DomainError("n_r must be nonnegative");
    const Rational kappa = kappa_from_pair(n, k);
    const int dn = static_cast<int>(n + k);
    const int dm = static_cast<int>(2 * n + k);
    return DegeneratePartners{
        verified_partner(q, {q.n_r + dn, q.m_l + dm}, kappa),
        verified_partner(q, {q.n_r - dn, q.m_l - dm}, kappa),
    };
}

namespace {

// Grouping key: with kappa = p/q the coefficient is ((2n + |m| + 1) q - m p) / q,
// so states share a level iff they share the integer numerator.
BigInt coefficient_numerator(const BigInt& kp, const BigInt& kq, int n_r, int m_l) {
    return (2 * n_r + std::abs(m_l) + 1) * kq - m_l * kp;
}

void check_kappa_range(const Rational& kappa) {
    if (!(kappa > 0 && kappa <= 1))
        throw DomainError("kappa must lie in (0, 1]");
}

}  // namespace

std::vector<EnergyLevel> group_levels(const Rational& kappa, int n_r_max, int m_l_min,
                                      int m_l_max, std::uint64_t budget) {
    check_kappa_range(kappa);
    if (n_r_max < 0 || m_l_min > m_l_max)
        return {};
    if (n_r_max > max_box_bound || std::abs(m_l_min) > max_box_bound || std::abs(m_l_max) > max_box_bound)
        throw DomainError("quantum-number box out of supported range");
    const std::uint64_t rows = static_cast<std::uint64_t>(n_r_max) + 1;
    const std::uint64_t cols = static_cast<std::uint64_t>(m_l_max - m_l_min) + 1;
    if (rows * cols > budget)
        throw BudgetExceeded("state box exceeds the enumeration budget");

    const BigInt kp = numerator(kappa);
    const BigInt kq = denominator(kappa);

    using Bucket = std::map<BigInt, std::vector<QuantumNumbers>>;
    std::vector<Bucket> partial(parallel_chunk_count(static_cast<int>(rows)));
    parallel_chunks(static_cast<int>(rows), [&](int chunk, int row_begin, int row_end) {
        Bucket& local = partial[chunk];
        for (int n_r = row_begin; n_r < row_end; ++n_r)
            for (int m_l = m_l_min; m_l <= m_l_max; ++m_l)
                local[coefficient_numerator(kp, kq, n_r, m_l)].push_back({n_r, m_l});
    });

    // merge in chunk order: chunks are ascending n_r ranges, and within a chunk the
    // enumeration is ascending (n_r, m_l), so each level's state list stays sorted
    Bucket merged;
    for (Bucket& local : partial)
        for (auto& [key, states] : local) {
            auto& dst = merged[key];
            dst.insert(dst.end(), states.begin(), states.end());
        }

    std::vector<EnergyLevel> levels;
    levels.reserve(merged.size());
    for (auto& [key, states] : merged)
        levels.push_back(EnergyLevel{Rational(key, kq), std::move(states)});
    return levels;
}

std::map<Rational, std::uint64_t> degeneracy_count_profile(const Rational& kappa,
                                                           const Rational& coefficient_max,
                                                           bool nonnegative_m_only,
                                                           std::uint64_t budget) {
    check_kappa_range(kappa);
    std::map<Rational, std::uint64_t> profile;
    const Rational reach = coefficient_max - 1;
    if (reach < 0) return profile;
    if (kappa == 1)
        throw BudgetExceeded("kappa = 1: every level is infinitely degenerate, no finite box suffices");

    // coefficient >= 2 n_r + 1 and coefficient >= (1 - kappa)|m_l| + 1 bound the box
    const Rational n_reach = Rational(reach) / 2;
    const Rational m_reach = Rational(reach) / (1 - kappa);
    const BigInt n_max_big = numerator(n_reach) / denominator(n_reach);
    const BigInt m_max_big = numerator(m_reach) / denominator(m_reach);
    if (n_max_big > max_box_bound || m_max_big > max_box_bound)
        throw BudgetExceeded("sufficient box for this coefficient bound is out of range");
    const int n_max = n_max_big.convert_to<int>();
    const int m_max = m_max_big.convert_to<int>();
    const int m_min = nonnegative_m_only ? 0 : -m_max;
    const std::uint64_t rows = static_cast<std::uint64_t>(n_max) + 1;
    const std::uint64_t cols = static_cast<std::uint64_t>(m_max - m_min) + 1;
    if (rows * cols > budget)
        throw BudgetExceeded("state box exceeds the enumeration budget");

    const BigInt kp = numerator(kappa);
    const BigInt kq = denominator(kappa);
    const BigInt cutoff = numerator(coefficient_max) * kq;  // compare c*kq <= cmax*kq via cross-multiplication
    const BigInt cden = denominator(coefficient_max);

    std::map<BigInt, std::uint64_t> counts;
    for (int n_r = 0; n_r <= n_max; ++n_r)
        for (int m_l = m_min; m_l <= m_max; ++m_l) {
            const BigInt num = coefficient_numerator(kp, kq, n_r, m_l);
            if (num * cden <= cutoff) ++counts[num];
        }
    for (const auto& [num, count] : counts)
        profile.emplace(Rational(num, kq), count);
    return profile;
}

}  // namespace ncosc
