#include "ncosc/core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace ncosc {

void validate(const PhysicalParams& p, double tol) {
    if (!(p.mass > 0.0)) throw DomainError("mass must be positive");
    if (!(p.omega > 0.0)) throw DomainError("omega must be positive");
    if (!(p.hbar > 0.0)) throw DomainError("hbar must be positive");
    if (!(p.theta > 0.0)) throw DomainError("theta must be positive (theta = 0 is outside the model)");
    if (p.B < 0.0) throw DomainError("B must be nonnegative");
    if (p.B * p.theta > p.hbar * (1.0 + tol))
        throw ConstraintViolation("B*theta exceeds hbar: effective mass would be complex");
}

const char* case_name(CaseLabel c) {
    switch (c) {
        case CaseLabel::no_field: return "CaseI (B = 0)";
        case CaseLabel::saturated: return "CaseII (B*theta = hbar)";
        case CaseLabel::intermediate: return "CaseIII (0 < B*theta < hbar)";
    }
    return "?";
}

EffectiveParams effective_params(const PhysicalParams& p) {
    validate(p);
    // dimensionless field/noncommutativity scales: B = f*m*omega, theta = g*hbar/(m*omega)
    const double f = p.B / (p.mass * p.omega);
    const double g = p.theta * p.mass * p.omega / p.hbar;
    // fg = B*theta/hbar; validated <= 1 up to tolerance, clamp the rounding spill
    const double fg = std::min(f * g, 1.0);
    const double s = std::sqrt(1.0 - fg);
    const double L = 2.0 + 2.0 * s - fg;  // in (1, 4]: 4 at B = 0, 1 at B*theta = hbar
    const double M = 4.0 / (L + g * g);
    const double Omega = std::sqrt((f * f + L) * (L + g * g) / (4.0 * L));
    const double gamma = 0.5 * (f + g);
    return EffectiveParams{
        M * p.mass,
        Omega * p.omega,
        gamma * p.omega,
        L * p.hbar * p.hbar,
        p.hbar,
    };
}

CaseLabel classify_case(const PhysicalParams& p, double tol) {
    validate(p, tol);
    const double ratio = p.B * p.theta / p.hbar;
    if (std::abs(ratio - 1.0) <= tol) return CaseLabel::saturated;
    if (p.B == 0.0) return CaseLabel::no_field;
    return CaseLabel::intermediate;
}

double energy(const EffectiveParams& e, QuantumNumbers q) {
    const double coeff = 2.0 * q.n_r + std::abs(q.m_l) + 1.0;
    return e.hbar * (coeff * e.Omega - q.m_l * e.gamma);
}

Rational energy_coefficient_exact(const Rational& kappa_or_xi, QuantumNumbers q) {
    return Rational(2 * q.n_r + std::abs(q.m_l) + 1) - q.m_l * kappa_or_xi;
}

MinEnergySteps min_energy_steps(const Rational& kappa) {
    if (!(kappa > 0 && kappa < 1))
        throw DomainError("min_energy_steps requires 0 < kappa < 1");
    return MinEnergySteps{1 - kappa, 1 + kappa, Rational(2)};
}

DimensionlessForm to_dimensionless(const PhysicalParams& p) {
    validate(p);
    PhysicalParams d;
    d.mass = 1.0;
    d.omega = 1.0;
    d.hbar = 1.0;
    d.B = p.B / (p.mass * p.omega);
    d.theta = p.theta * p.mass * p.omega / p.hbar;
    return DimensionlessForm{d, p.hbar * p.omega, std::sqrt(p.hbar / (p.mass * p.omega))};
}

}  // namespace ncosc
