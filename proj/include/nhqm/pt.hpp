#pragma once

#include "nhqm/core.hpp"

namespace nhqm {

// Antilinear Theta = P followed by complex conjugation; Theta^2 = 1.
struct AntilinearOp {
  Eigen::MatrixXd P;  // permutation (orthogonal) parity matrix

  Vec apply(const Vec& v) const { return P.cast<cd>() * v.conjugate(); }
  int dim() const { return static_cast<int>(P.rows()); }
};

// parity as a permutation given by perm[j] = image of site j
AntilinearOp build_pt_operator(const std::vector<int>& perm);
AntilinearOp lattice_reflection(int L);  // j -> L-1-j

// |P conj(H) P - H|_max; zero iff [H, Theta] = 0.
double pt_defect(const Mat& H, const AntilinearOp& theta);

struct PtMode {
  cd eigenvalue;
  bool unbroken;   // Theta psi proportional to psi
  int partner;     // index of the conjugate partner when broken, else -1
};

struct PtSpectrumReport {
  std::vector<PtMode> modes;
  double closure_defect;      // spectrum vs its conjugate multiset
  int unbroken_count = 0;
  int broken_count = 0;
};

// Requires pt_defect < 1e-10. Classifies each eigenvector as unbroken
// (Theta psi ~ psi, eigenvalue real) or broken (Theta maps it onto the
// partner with conjugate eigenvalue).
PtSpectrumReport spectrum_pair_analysis(const Mat& H, const AntilinearOp& theta);

// Linear-symmetry contrast: for [H, A] = 0 with non-degenerate spectrum,
// every eigenvector of H is an eigenvector of A. Returns the worst
// eigenvector residual under A.
double linear_symmetry_shared_eigenvectors(const Mat& H, const Mat& A);

// Random matrix with P conj(H) P = H built as B + P conj(B) P.
Mat random_pt_symmetric(int L, std::uint64_t seed);

}  // namespace nhqm
