#pragma once

#include "ncosc/core.hpp"

#include <vector>

namespace ncosc {

inline constexpr int default_resolution_cap = 4096;

// Associated Laguerre polynomial L_n^alpha(x) by the downward-stable
// three-term recurrence L_j = ((2j-1+alpha-x) L_{j-1} - (j-1+alpha) L_{j-2}) / j.
double laguerre(int n, double alpha, double x);

struct Eigenstate {
    EffectiveParams params;
    QuantumNumbers q;

    double length_scale() const;  // sqrt(hbar / (M Omega))
};

// |Psi|^2 in m^-2; independent of phi (rotationally symmetric states).
// Combined closed form (M Omega / pi hbar) (n_r!/(n_r+|m_l|)!) u^|m_l| e^-u L^2,
// u = M Omega r^2 / hbar, with the factorial ratio taken in log space.
double psi_squared(const Eigenstate& s, double r, double phi = 0.0);

// Signed radial factor R(r) with normalization  integral R^2 r dr = 1,
// so that |Psi|^2 = R^2 / (2 pi).
double radial_amplitude(const Eigenstate& s, double r);

// integral |Psi|^2 dA by adaptive Gauss-Legendre quadrature on
// [0, length_scale * sqrt(2(2 n_r + |m_l|) + 40)] plus an analytic bound on the
// remaining exponential tail. Contract: within 1e-8 of 1 (target 1e-10).
double normalization_check(const Eigenstate& s);

// Radial overlap of two states sharing EffectiveParams. Exactly 0 without
// quadrature when m_l differ (angular integration); otherwise |result| <= 1e-8
// for distinct n_r.
double orthogonality_check(const Eigenstate& a, const Eigenstate& b);

struct DensityGrid {
    double radius = 0.0;        // half-width of the sampled square (m)
    int resolution = 0;         // pixels per side
    QuantumNumbers q;
    double length_scale = 0.0;  // m
    double max_value = 0.0;     // m^-2
    bool outside_disc_masked = false;
    std::vector<double> values;  // row-major, y increases downward, pixel centers
};

// Samples |Psi|^2 over the bounding square of the disc of the given radius.
// The corners outside the inscribed disc are evaluated, not masked (masking is
// a presentation choice). For odd resolutions the central pixel sits at r = 0.
DensityGrid density_grid(const Eigenstate& s, double radius, int resolution,
                         int resolution_cap = default_resolution_cap);

// Default raster extent: 5 * rms radius.
double auto_density_radius(const Eigenstate& s);

// rms radius sqrt(<r^2>) = length_scale * sqrt(2 n_r + |m_l| + 1); grows with
// theta at B = 0 and shrinks with B on the B*theta = hbar branch.
double density_spread_metric(const Eigenstate& s);

// Number of local maxima of |Psi|^2 along a radius (antinode rings); n_r + 1
// for every eigenstate.
int count_density_rings(const Eigenstate& s, int n_samples = 4096);

}  // namespace ncosc
