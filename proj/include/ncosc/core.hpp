#pragma once

#include "ncosc/errors.hpp"
#include "ncosc/rational.hpp"

#include <compare>

namespace ncosc {

// CODATA values; overridable through the CLI configuration.
inline constexpr double default_hbar_si = 1.054571817e-34;       // J*s
inline constexpr double electron_charge_si = 1.602176634e-19;    // C
inline constexpr double default_case_tolerance = 1e-12;

enum class UnitsMode { si, dimensionless };

// Model parameters of the oscillator on the noncommutative plane.
// B carries the unit charge (kg/s); theta is the noncommutativity scale (m^2).
struct PhysicalParams {
    double mass = 1.0;   // kg
    double omega = 1.0;  // 1/s
    double B = 0.0;      // kg/s
    double theta = 1.0;  // m^2
    double hbar = 1.0;   // J*s
};

// DomainError on nonpositive mass/omega/theta or negative B;
// ConstraintViolation when B*theta exceeds hbar.
void validate(const PhysicalParams& p, double tol = default_case_tolerance);

// The three field regimes: B = 0, B*theta = hbar, and everything between.
enum class CaseLabel { no_field, saturated, intermediate };

const char* case_name(CaseLabel c);

// Parameters of the equivalent commutative oscillator:
//   H = P^2/2M + M Omega^2 R^2 / 2 - gamma L_z.
struct EffectiveParams {
    double M_eff;     // kg
    double Omega;     // 1/s
    double gamma;     // 1/s
    double L_factor;  // J^2, the radical combination 2h^2 + 2h*sqrt(h^2-h*B*theta) - h*B*theta
    double hbar;      // J*s, carried along for energy evaluation
};

EffectiveParams effective_params(const PhysicalParams& p);

CaseLabel classify_case(const PhysicalParams& p, double tol = default_case_tolerance);

struct QuantumNumbers {
    int n_r = 0;  // radial quantum number, >= 0
    int m_l = 0;  // angular momentum quantum number, either sign

    friend auto operator<=>(const QuantumNumbers&, const QuantumNumbers&) = default;
};

// E = (2 n_r + |m_l| + 1) hbar Omega - m_l hbar gamma, strictly positive.
double energy(const EffectiveParams& e, QuantumNumbers q);

// Energy in units of hbar*Omega, exact: (2 n_r + |m_l| + 1) - m_l * kappa.
Rational energy_coefficient_exact(const Rational& kappa_or_xi, QuantumNumbers q);

// Minimal spectral gaps in units of hbar*Omega, strictly increasing for 0 < kappa < 1.
struct MinEnergySteps {
    Rational raise_m_positive;  // 1 - kappa
    Rational raise_m_negative;  // 1 + kappa
    Rational raise_n_r;         // 2
};

MinEnergySteps min_energy_steps(const Rational& kappa);

// Reduction to hbar = m = omega = 1. All float-heavy computation runs in this
// form; SI quantities are recovered through the two scale factors.
struct DimensionlessForm {
    PhysicalParams params;  // mass = omega = hbar = 1; B, theta pure numbers
    double energy_unit;     // J per dimensionless energy   (hbar * omega)
    double length_unit;     // m per dimensionless length   (sqrt(hbar / (m omega)))
};

DimensionlessForm to_dimensionless(const PhysicalParams& p);

}  // namespace ncosc
