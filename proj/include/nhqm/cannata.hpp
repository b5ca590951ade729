#pragma once

#include <Eigen/LU>

#include "nhqm/core.hpp"

namespace nhqm {

// Coefficient-space algebra of the exactly solvable model with spectrum
// E_n = (n + 1/2)^2 / 2. Everything lives in the orthonormal hat basis;
// the model-defining scalar product on hat coefficients carries weights
// gamma_n = n + 1/2 (only ratios enter adjoints, so the overall scale is
// immaterial).
struct CannataAlgebra {
  int N = 0;
  Mat Mexp;    // matrix of exp(-ix)
  Mat Mexpp;   // matrix of exp(-ix) p
  Mat Pc;      // canonical momentum, exactly Hermitian
  Mat Xc;      // canonical position, inverse of the truncated Mexp
  Mat S;       // columns xi_1 .. xi_{N-1} in hat coordinates
  Eigen::PartialPivLU<Mat> lu;  // factors Mexp; Xc applied through solves

  int bulk_end() const { return N - 1 - default_bulk_buffer(N); }
  Vec xi(int n) const;                   // exact two-entry column
  Vec apply_xc(const Vec& v) const { return lu.solve(v); }
  Mat apply_xc(const Mat& v) const { return lu.solve(v); }
};

CannataAlgebra build_cannata(int N);

// Weights of the model scalar product expressed on hat coefficients.
RVec hat_weights(int N);

struct XiPartialSum {
  Vec f;          // sum_{k=0}^{K} (-1)^k xi_{n+2k+1}
  Vec closed;     // psi_n/sqrt(n+1/2) + (-1)^K psi_{n+2K+2}/sqrt(n+2K+5/2)
  double remainder;  // 1/sqrt(n + 2(K+1) + 1/2)
};
XiPartialSum xi_partial_sum(const CannataAlgebra& alg, int n, int K);

enum class HamiltonianForm { grouped, naive };

// grouped: H = (1/2)[Xc (Xc (1 - Pc^2) + 2i Pc) + 1/4], with Xc applied
// through LU solves of Mexp (an explicit inverse loses one digit too many).
// naive: the rearranged polynomial form whose individual terms diverge;
// provided only to demonstrate that.
Mat canonical_hamiltonian(const CannataAlgebra& alg, HamiltonianForm form);

// (Xc (1 - Pc^2) + 2i Pc) psi_n = n(n+1)/(2 sqrt(n+1/2)) xi_n on the bulk.
double inner_bracket_defect(const CannataAlgebra& alg, int n);

// Largest singular value of Pc.
double momentum_norm(int N);
double momentum_norm(const CannataAlgebra& alg);

struct DivergenceWitness {
  std::vector<int> n_values;            // truncations tried
  std::vector<double> xc_psi_norms;     // |Xc psi_n| at each truncation
  bool strictly_increasing;
  bool super_constant;                  // last/first ratio well above 1
  double xc_mexp_xi2_defect;            // Xc Mexp xi_2 = xi_2 (bulk)
  double mexp_xc_defect;                // Mexp Xc xi_n = xi_n, all bulk n
  std::vector<double> series_partial_norms;  // term-by-term image of xi_1
};

// Records the two sides of the domain pathology: the truncated inverse is
// stable on the bulk and Mexp Xc xi_n = xi_n for all n, yet applying Xc to
// the series expansion of exp(-ix) xi_1 term by term produces partial sums
// of linearly growing norm, and |Xc psi_n| grows without bound in N.
DivergenceWitness divergence_witness(int n, const std::vector<int>& N_list);

struct TildeReport {
  Mat xt;    // -(exp(ix) + adjoint)/2
  Mat xtp;   // i (exp(ix) - adjoint)/2
  Mat pt;    // i exp(-ix) p
  double herm_pt;          // weighted Hermiticity defect of pt (bulk)
  double herm_xt;          // of xt, zero by construction up to roundoff
  double comm_defect;      // weak-form [xt, pt] = i on xi vectors
  double comm_zero_defect; // weak-form [xtp, pt] = 0 on xi vectors
};

// The commutators hold as quadratic forms on the dense xi domain with the
// adjoint moved onto the left argument; as truncated matrix products they
// are meaningless (the adjoint of Xc applied to a xi vector is the
// divergent series).
TildeReport tilde_canonical_pair(int N);

struct GaugeShiftReport {
  double comm_defect;  // [Xb, Pb + f(Xb)] - i on bulk xi vectors
  double pi_norm;      // largest singular value of the shifted momentum
  double xb_norm;      // of the bulk position block; finite
};

// pi = Pc + f(Xc) with f a small cubic polynomial, on the bulk-restricted
// blocks; the shift leaves the commutator and the boundedness intact.
GaugeShiftReport gauge_shift_check(const CannataAlgebra& alg,
                                   double coeff = 1e-5);

// sqrt((2n+1)/pi) j_n(x), the L2 position realization of mode n.
double position_wavefunction(int n, double x);

// Overlap (phi_nu, phi_mu) in closed form, both half-axes included through
// the reflection phase of the above-the-cut continuation. Requires
// Re(conj(nu) + mu) > -1.
cd overlap_closed_form(cd nu, cd mu);
// |phi_nu|^2 from the specialization of the closed form; the Im nu -> 0
// limit is taken analytically.
double norm_phi_squared(cd nu);
// Quadrature oracle: Gauss-Legendre panels on (0, X] for the positive
// half-axis, reflection phase for the negative one.
cd overlap_quadrature(cd nu, cd mu, double X);

}  // namespace nhqm
