#pragma once

#include "ncosc/core.hpp"

#include <Eigen/Dense>

#include <map>
#include <string>
#include <vector>

namespace ncosc {

// Uniform radial grid with Dirichlet endpoints; interior nodes r_i = i * spacing.
struct RadialGrid {
    int n_points = 0;
    double r_max = 0.0;

    double spacing() const { return r_max / (n_points + 1); }
};

struct Tridiagonal {
    std::vector<double> diag;
    std::vector<double> off;  // size n - 1
};

// Discretization of the substituted radial operator acting on v = sqrt(r) R:
//   -hbar^2/(2M) v'' + [hbar^2 (m^2 - 1/4)/(2M r^2) + M Omega^2 r^2 / 2] v.
// The centrifugal diagonal uses the stencil that is exact on r^(|m|+1/2), which
// removes the anomalous O(1) error the plain 1/r^2 sampling suffers at m_l = 0.
Tridiagonal fd_radial_matrix(const EffectiveParams& e, int m_l, RadialGrid grid);

// Lowest n_eig eigenvalues of a symmetric tridiagonal matrix by Sturm-sequence
// bisection (deterministic, no iterative-solver nondeterminism).
std::vector<double> tridiag_lowest_eigenvalues(const Tridiagonal& t, int n_eig);

// Lowest n_eig finite-difference eigenvalues, shifted by -m_l hbar gamma; each
// converges to (2j + |m_l| + 1) hbar Omega - m_l hbar gamma as the grid refines.
// GridTooCoarse when r_max < 8 * length_scale * sqrt(2 n_eig + |m_l|).
std::vector<double> fd_radial_eigenvalues(const EffectiveParams& e, int m_l, RadialGrid grid,
                                          int n_eig);

// Two-grid Richardson extrapolation of the O(h^2) discretization error.
std::vector<double> fd_radial_eigenvalues_richardson(const EffectiveParams& e, int m_l,
                                                     double r_max, int n_coarse, int n_fine,
                                                     int n_eig);

// Ladder-operator matrices on the truncated two-mode number basis
// (N = n_1d^2, index = n1 * n_1d + n2). The 1D ladder length scale is the
// physical oscillator's sqrt(hbar/(m omega)); the coordinate transformation is
// basis-independent, one scale just has to be fixed.
struct NcOperators {
    int n_1d = 0;
    double mass = 1.0, omega = 1.0, hbar = 1.0, theta = 0.0, B = 0.0;
    Eigen::MatrixXcd x, y, px, py;    // commutative auxiliary phase space
    Eigen::MatrixXcd X, Y, Pix, Piy;  // noncommutative coordinates / kinetic momenta
};

// theta = 0 and B = 0 are allowed here (limit checks of the matrix identities);
// B*theta <= hbar still applies.
NcOperators build_nc_operators(const PhysicalParams& p, int n_1d);

// Max-norm residuals of the six canonical relations, restricted to the block
// of total excitation <= n_1d - margin (truncation corrupts only discarded
// shells, so these are exact up to rounding): [X,Y] = i theta, [Pix,Piy] =
// i hbar B, [X,Pix] = [Y,Piy] = i hbar, [X,Piy] = [Y,Pix] = 0.
std::map<std::string, double> commutator_residuals(const NcOperators& ops,
                                                   const PhysicalParams& p, int margin);

// H = (Pix^2 + Piy^2)/(2m) + m omega^2 (X^2 + Y^2)/2 on the truncated basis.
Eigen::MatrixXcd assemble_hamiltonian(const NcOperators& ops);

// Lowest n_eig eigenvalues of H restricted to total excitation <= n_1d - margin.
std::vector<double> truncated_spectrum(const NcOperators& ops, int margin, int n_eig);

// Lowest closed-form energies, sorted ascending (with multiplicity), from a
// quantum-number box wide enough for nondegenerate-to-moderate gamma/Omega.
std::vector<double> analytic_lowest_energies(const EffectiveParams& e, int count);

// Applies the radial operator to the analytic eigenfunction with a 5-point
// fourth-order stencil (step h = step_scale * length_scale, evaluated in long
// double) and returns max |(H - E) v| / (|E| |v|) over the samples. Default
// samples are chosen near the probability peak; explicit samples falling in
// the guard band of a wavefunction node raise SingularSample.
double hamiltonian_residual(const EffectiveParams& e, QuantumNumbers q,
                            const std::vector<double>& sample_r = {},
                            double step_scale = 1e-5);

}  // namespace ncosc
