#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "nhqm/core.hpp"

namespace nhqm {

// Asymmetric-hopping chain, 2ma^2 = 1 convention: diagonal V_j + 2t,
// hopping -t e^{-g} to the right and -t e^{+g} to the left, so that
// diag(e^{-g j}) conjugates H(g) to H(0) under open boundaries.
struct LatticeModel {
  int L = 0;
  double t = 1.0;
  double g = 0.0;
  RVec V;
  bool periodic = false;
  Eigen::MatrixXd H;
};

LatticeModel build_lattice(int L, double t, double g, const RVec& V,
                           bool periodic);

RVec random_potential(int L, double W, std::uint64_t seed);

// Open-boundary spectrum through the exact diagonal similarity. A direct
// dense eigensolve of H(g) is hopelessly ill-conditioned already at
// moderate g*L; the conjugated matrix equals H(0) entrywise to roundoff
// and its eigenvalues are the honest answer.
std::vector<cd> open_spectrum_via_gauge(const LatticeModel& m);
// Spectrum as the scan sees it: gauge route for open bc, direct dense
// solve for periodic.
std::vector<cd> lattice_spectrum(const LatticeModel& m);

struct BiorthogonalSystem {
  std::vector<cd> E;
  Mat right;   // columns psi^R_n
  Mat left;    // columns psi^L_n, <L_n, R_m> = delta_nm
  std::vector<bool> exceptional;  // |<L,R>| < 1e-10 before normalization
};

BiorthogonalSystem biorthogonal_eigensystem(const Mat& H);

// Open-boundary construction through the diagonal similarity: right
// vectors e^{g j} psi_n(0), left vectors e^{-g j} psi_n(0), pairing 1 by
// the orthonormality of the g = 0 eigenbasis. The dense solver above loses
// biorthogonality like e^{g L} on these models; this route does not.
BiorthogonalSystem biorthogonal_eigensystem_gauge(const LatticeModel& m);

double biorthogonality_defect(const BiorthogonalSystem& s);
double completeness_defect(const BiorthogonalSystem& s);

// rho_j = conj(psi^L_n(j)) psi^R_n(j); sums to 1.
Vec density_profile(const BiorthogonalSystem& s, int n);

struct PairingDefect {
  double cross;        // spec(H(-g)) vs conj spec(H(g))
  double closure;      // spec(H(g)) vs its own conjugate
};
PairingDefect pairing_defect(int L, double t, double g, const RVec& V,
                             bool periodic);

struct DelocalizationScan {
  std::vector<double> g_grid;
  std::vector<double> max_im;
  double g_c = 0.0;
  bool infinite = false;  // threshold never exceeded
  double tau = 0.0;
};

// g_c = smallest g with max_n |Im E_n| > tau, bisected to width 1e-4;
// tau defaults to 1e-8 times the spectral radius when passed as <= 0.
DelocalizationScan critical_g_scan(const RVec& V, bool periodic,
                                   const std::vector<double>& g_grid,
                                   double tau = -1.0, double t = 1.0);

struct GaugeCheckReport {
  double entrywise;      // |D H(g) D^-1 - H(0)|_max
  double spectral;       // multiset distance of the two spectra
  double eigvec_residual;  // |H(g) D^-1 psi0 - E D^-1 psi0| / |D^-1 psi0|
  double center_shift;   // right-eigenvector mass center minus g=0 center
};

GaugeCheckReport imaginary_gauge_check(int L, double t, double g,
                                       const RVec& V);

struct MetricReport {
  double metric_vs_exponential;  // |M_g - diag(e^{-2gj})|_max
  double inverse_defect;         // |M_g M_{-g} - I|_max
  double x_defect;               // |x^ddagger - x|_max
  double exact_lattice_relation; // p^ddagger vs cosh(2g) p + i sinh(2g) avg
};

// M_g built from the gauge-continued eigenfunctions psi_n(g) = e^{g j}
// psi_n(0): the inverse eigenvector matrix is then available analytically
// through the orthogonality of the g = 0 basis, which is what keeps
// M_g M_{-g} - I at roundoff level.
MetricReport metric_adjoint_relation(int L, double g, const RVec& V);

struct ContinuumReport {
  double p_adjoint_defect;   // p^ddagger - (p + 2ig) on a bulk plane wave
  double rejected_branch;    // p^ddagger + p on the same state (large)
  double pc_hermiticity;     // kinetic momentum p + ig as a quadratic form
  double velocity_im_ratio;  // |Im <v>| / |<v>| under the metric product
  double velocity_plain_re;  // |Re <v>| / |<v>| in the plain product,
                             // real standing state: <v> purely imaginary
};

// The adjoint relation p^ddagger = p + 2ig and the Hermiticity of the
// kinetic momentum are continuum statements with O(g^2) lattice
// corrections; they are checked at small g on smooth states.
ContinuumReport continuum_identity_check(int L, double g, double k);

struct CanonicalField {
  double max_A;              // A(x; g) from the gauge factor; identically 0
  double anticommutator;     // |{pc, A}| with A = 0
  double g_independence;     // canonical spectrum distance across g values
  std::string step_form;     // the symbolic Theta(g - g_c) factor, g_c = inf
};

CanonicalField canonical_field_A(int L, double t, double g, bool periodic);

}  // namespace nhqm
