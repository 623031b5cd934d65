#include "ncosc/core.hpp"
#include "ncosc/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace ncosc;

namespace {

PhysicalParams dimensionless(double B, double theta) {
    return {1.0, 1.0, B, theta, 1.0};
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("validate rejects nonphysical parameters") {
    CHECK_THROWS_AS(validate({0.0, 1.0, 0.0, 1.0, 1.0}), DomainError);
    CHECK_THROWS_AS(validate({-1.0, 1.0, 0.0, 1.0, 1.0}), DomainError);
    CHECK_THROWS_AS(validate({1.0, 0.0, 0.0, 1.0, 1.0}), DomainError);
    CHECK_THROWS_AS(validate({1.0, 1.0, 0.0, 0.0, 1.0}), DomainError);  // theta = 0 excluded
    CHECK_THROWS_AS(validate({1.0, 1.0, 0.0, -0.5, 1.0}), DomainError);
    CHECK_THROWS_AS(validate({1.0, 1.0, -0.1, 1.0, 1.0}), DomainError);
    CHECK_THROWS_AS(validate({1.0, 1.0, 0.0, 1.0, 0.0}), DomainError);
    CHECK_THROWS_AS(validate(dimensionless(1.0, 1.5)), ConstraintViolation);
    CHECK_NOTHROW(validate(dimensionless(0.0, 1.0)));
    CHECK_NOTHROW(validate(dimensionless(1.0, 1.0)));  // saturation is allowed
}

TEST_CASE("case classification") {
    CHECK(classify_case(dimensionless(0.0, 0.7)) == CaseLabel::no_field);
    CHECK(classify_case(dimensionless(1.0, 1.0)) == CaseLabel::saturated);
    CHECK(classify_case(dimensionless(0.5, 1.0)) == CaseLabel::intermediate);
    // the saturation test is a relative tolerance band
    CHECK(classify_case(dimensionless(1.0, 1.0 + 5e-13)) == CaseLabel::saturated);
    CHECK(classify_case(dimensionless(1.0, 1.0 - 1e-10)) == CaseLabel::intermediate);
    CHECK(classify_case(dimensionless(1.0, 1.0 - 1e-10), 1e-9) == CaseLabel::saturated);
    CHECK_THROWS_AS(classify_case(dimensionless(2.0, 1.0)), ConstraintViolation);
}

TEST_CASE("effective parameters at the no-field point theta = 1/sqrt(2)") {
    const auto e = effective_params(dimensionless(0.0, std::sqrt(0.5)));
    CHECK(e.M_eff == doctest::Approx(8.0 / 9.0).epsilon(1e-14));
    CHECK(e.Omega == doctest::Approx(1.0606601717798212).epsilon(1e-14));
    CHECK(e.gamma == doctest::Approx(0.35355339059327373).epsilon(1e-14));
    CHECK(e.L_factor == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(e.hbar == 1.0);
}

TEST_CASE("effective parameters at saturation") {
    const auto e = effective_params(dimensionless(1.0, 1.0));
    CHECK(e.M_eff == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(e.Omega == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(e.gamma == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(e.L_factor == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("L_factor endpoints") {
    CHECK(effective_params(dimensionless(0.0, 0.3)).L_factor == doctest::Approx(4.0));
    CHECK(effective_params(dimensionless(2.0, 0.5)).L_factor == doctest::Approx(1.0));
}

TEST_CASE("no-field frequency closed form") {
    // B = 0: Omega = omega sqrt(1 + c^2/4), gamma = omega c / 2, c = m omega theta / hbar
    const double c = 0.8;
    const auto e = effective_params(dimensionless(0.0, c));
    CHECK(e.Omega == doctest::Approx(std::sqrt(1.0 + c * c / 4.0)).epsilon(1e-14));
    CHECK(e.gamma == doctest::Approx(c / 2.0).epsilon(1e-14));
}

TEST_CASE("frequency identity Omega^2 - gamma^2 = omega^2 (1 - B theta / hbar)") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> theta_draw(0.05, 3.0);
    std::uniform_real_distribution<double> fill_draw(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const double theta = theta_draw(rng);
        const double B = fill_draw(rng) / theta;
        const auto e = effective_params(dimensionless(B, theta));
        const double lhs = e.Omega * e.Omega - e.gamma * e.gamma;
        const double rhs = 1.0 - B * theta;
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("frequency identity holds on SI scales") {
    const double m = 9.109e-31, w = 1.518e16, hb = default_hbar_si;
    const double theta = 0.4 * hb / (m * w);
    const double B = 0.6 * m * w;
    const auto e = effective_params({m, w, B, theta, hb});
    const double lhs = e.Omega * e.Omega - e.gamma * e.gamma;
    const double rhs = w * w * (1.0 - B * theta / hb);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
}

TEST_CASE("energies") {
    const auto e = effective_params(dimensionless(0.0, std::sqrt(0.5)));
    CHECK(energy(e, {0, 0}) == doctest::Approx(e.hbar * e.Omega).epsilon(1e-14));
    CHECK(energy(e, {0, 1}) == doctest::Approx(2.0 * e.Omega - e.gamma).epsilon(1e-14));
    CHECK(energy(e, {0, -1}) == doctest::Approx(2.0 * e.Omega + e.gamma).epsilon(1e-14));
    // opposite angular momenta split by 2 m hbar gamma
    for (int m = 1; m <= 7; ++m)
        CHECK(energy(e, {2, -m}) - energy(e, {2, m}) ==
              doctest::Approx(2.0 * m * e.gamma).epsilon(1e-12));
}

TEST_CASE("energies stay positive across the box") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> theta_draw(0.05, 3.0);
    std::uniform_real_distribution<double> fill_draw(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        const double theta = theta_draw(rng);
        const auto e = effective_params(dimensionless(fill_draw(rng) / theta, theta));
        for (int n = 0; n <= 10; ++n)
            for (int m = -50; m <= 50; m += 5) CHECK(energy(e, {n, m}) > 0.0);
    }
}

TEST_CASE("exact energy coefficients at kappa = 1/3") {
    const Rational k(1, 3);
    CHECK(energy_coefficient_exact(k, {0, 0}) == Rational(1));
    CHECK(energy_coefficient_exact(k, {3, 0}) == Rational(7));
    CHECK(energy_coefficient_exact(k, {2, 3}) == Rational(7));
    CHECK(energy_coefficient_exact(k, {1, 6}) == Rational(7));
    CHECK(energy_coefficient_exact(k, {0, 9}) == Rational(7));
    CHECK(energy_coefficient_exact(k, {0, -12}) == Rational(17));
    CHECK(energy_coefficient_exact(k, {2, -9}) == Rational(17));
    CHECK(energy_coefficient_exact(k, {4, -6}) == Rational(17));
    CHECK(energy_coefficient_exact(k, {6, -3}) == Rational(17));
    CHECK(energy_coefficient_exact(k, {0, 1}) == Rational(5, 3));
    CHECK(energy_coefficient_exact(k, {1, -1}) == Rational(13, 3));
}

TEST_CASE("minimal spectral gaps") {
    const auto steps = min_energy_steps(Rational(1, 3));
    CHECK(steps.raise_m_positive == Rational(2, 3));
    CHECK(steps.raise_m_negative == Rational(4, 3));
    CHECK(steps.raise_n_r == Rational(2));
    CHECK_THROWS_AS(min_energy_steps(Rational(0)), DomainError);
    CHECK_THROWS_AS(min_energy_steps(Rational(1)), DomainError);
    CHECK_THROWS_AS(min_energy_steps(Rational(3, 2)), DomainError);
}

TEST_CASE("dimensionless reduction round-trips the physics") {
    const double m = 9.109e-31, w = 1.518e16, hb = default_hbar_si;
    const PhysicalParams p{m, w, 0.3 * m * w, 0.4 * hb / (m * w), hb};
    const auto dim = to_dimensionless(p);
    CHECK(dim.params.mass == 1.0);
    CHECK(dim.params.omega == 1.0);
    CHECK(dim.params.hbar == 1.0);
    CHECK(dim.params.B == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(dim.params.theta == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(dim.energy_unit == doctest::Approx(hb * w).epsilon(1e-14));
    CHECK(dim.length_unit == doctest::Approx(std::sqrt(hb / (m * w))).epsilon(1e-14));

    const auto e_si = effective_params(p);
    const auto e_dim = effective_params(dim.params);
    CHECK(e_si.Omega == doctest::Approx(w * e_dim.Omega).epsilon(1e-12));
    CHECK(e_si.gamma == doctest::Approx(w * e_dim.gamma).epsilon(1e-12));
    CHECK(e_si.M_eff == doctest::Approx(m * e_dim.M_eff).epsilon(1e-12));
    for (const QuantumNumbers q : {QuantumNumbers{0, 0}, {2, 5}, {3, -4}})
        CHECK(energy(e_si, q) ==
              doctest::Approx(dim.energy_unit * energy(e_dim, q)).epsilon(1e-12));
}

TEST_CASE("case names") {
    CHECK(std::string(case_name(CaseLabel::no_field)).find("CaseI") == 0);
    CHECK(std::string(case_name(CaseLabel::saturated)).find("CaseII") == 0);
    CHECK(std::string(case_name(CaseLabel::intermediate)).find("CaseIII") == 0);
}

}  // TEST_SUITE
