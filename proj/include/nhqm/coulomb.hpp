#pragma once

#include <complex>
#include <string>
#include <vector>

namespace nhqm {

using cdc = std::complex<double>;

// Generalized Laguerre L^(1)_k by three-term recurrence; stable for the
// tested range k <= ~50.
cdc laguerre1(int k, cdc y);

// Phi_n(x; a) = exp(-a x / (2n)) * (a x / n) * L^(1)_{n-1}(a x / n).
// The half-line bound state for coupling a > 0; coupling a = i*alpha gives
// the rotated branch.
cdc coulomb_eigenfunction(int n, cdc a, cdc x);

// -(a/2n)^2 for the attractive half-line problem.
double coulomb_spectrum_hermitian(int n, double a);
// +(alpha/2n)^2 after the i*alpha rotation; positive and decreasing in n.
double coulomb_spectrum_rotated(int n, double alpha);

enum class CoulombBranch { hermitian, rotated };

// Max-norm residual of (p^2 + potential - E) Phi_n on the interior of a
// uniform grid (x0, x1], p^2 by 4th-order finite differences of the exact
// eigenfunction values.
double schrodinger_residual(int n, double coupling, CoulombBranch branch,
                            double x0, double x1, double h);

struct CanonicalEquivalence {
  double residual;                 // |(-pc^2 + alpha/x - E_n) Phi_n|_max
  bool unphysical_kinetic_sign;    // kinetic term enters with the wrong sign
  std::vector<double> rotated_spectrum;
  std::vector<double> minus_hermitian_spectrum;  // identical by construction
};

// Applies H(xc,pc) = -(pc)^2 + alpha/xc to Phi_n(s; alpha) and verifies the
// eigenvalue is the rotated one, i.e. the canonical model is minus the
// ordinary attractive Coulomb problem. The model carries no new physics:
// flagged unphysical.
CanonicalEquivalence canonical_equivalence_report(int n, double alpha);

// L2 overlap of two Hermitian-branch eigenfunctions over (0, X] by
// composite Gauss-Legendre panels.
double coulomb_overlap(int n, int m, double a, double X);

// |Phi_n(|x| e^{i theta}; i alpha)| along a ray; decays on the anti-Stokes
// ray theta = 3 pi/2 and grows at pi/2.
double rotated_magnitude_on_ray(int n, double alpha, double theta, double r);

}  // namespace nhqm
