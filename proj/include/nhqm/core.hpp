#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <vector>

namespace nhqm {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;

// Basis a coefficient matrix lives in. Mixing representations in binary
// operations is a bookkeeping error and gets rejected.
enum class BasisTag { hat_psi, xi, grid, lattice };

inline int default_bulk_buffer(int N) { return std::max(2, N / 4); }

// Coefficient space with inner product (u,v) = sum_n gamma_n conj(u_n) v_n.
// Identities proved for the untruncated operators are only asserted on the
// bulk index range [0, N-1-B]; banded truncations corrupt the last rows.
struct WeightedBasisSpace {
  int N = 0;
  RVec gamma;
  std::optional<Vec> labels;
  int bulk_buffer = 0;

  cd inner(const Vec& u, const Vec& v) const;
  double norm(const Vec& u) const;
  int bulk_end() const { return N - 1 - bulk_buffer; }  // inclusive
};

WeightedBasisSpace build_weighted_space(int N, const RVec& gamma, int B);
WeightedBasisSpace orthonormal_space(int N, int B = 0);

struct OperatorRep {
  Mat m;
  BasisTag tag = BasisTag::hat_psi;
  std::optional<int> bandwidth;

  int dim() const { return static_cast<int>(m.rows()); }
};

OperatorRep make_op(Mat m, BasisTag tag = BasisTag::hat_psi,
                    std::optional<int> bandwidth = std::nullopt);

// (A^x)_{mk} = (gamma_k / gamma_m) conj(a_{km}), the adjoint w.r.t. the
// weighted product; an involution for any positive weights.
OperatorRep adjoint_in_space(const OperatorRep& A, const WeightedBasisSpace& S);

// max over tested pairs of |(e_n, A e_m) - (A e_n, e_m)|
// = max |gamma_n a_{nm} - gamma_m conj(a_{mn})|.
double hermiticity_defect(const OperatorRep& A, const WeightedBasisSpace& S,
                          bool bulk_only);

OperatorRep commutator(const OperatorRep& A, const OperatorRep& B);

// Diagonal similarity induced by re-declaring the basis weights,
// c_n = sqrt(gamma_old_n / gamma_new_n); spectra are preserved exactly.
OperatorRep rescale_basis(const OperatorRep& A, const RVec& gamma_old,
                          const RVec& gamma_new);

// Dense complex eigenvalues (LAPACK zgeev). Throws on non-convergence.
std::vector<cd> spectrum(const Mat& A);

// Dense eigenpairs: values plus right eigenvectors as columns.
struct EigPairs {
  std::vector<cd> values;
  Mat vectors;
};
EigPairs eig_right(const Mat& A);

// Greedy nearest-neighbor max-pairing distance, ties broken by index order.
double spectral_distance(const std::vector<cd>& s1, const std::vector<cd>& s2);

}  // namespace nhqm
