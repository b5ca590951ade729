#include "nhqm/pt.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace nhqm {

AntilinearOp build_pt_operator(const std::vector<int>& perm) {
  const int L = static_cast<int>(perm.size());
  std::vector<bool> seen(L, false);
  for (int v : perm) {
    if (v < 0 || v >= L || seen[v])
      throw std::invalid_argument("invalid permutation");
    seen[v] = true;
  }
  AntilinearOp op;
  op.P = Eigen::MatrixXd::Zero(L, L);
  for (int j = 0; j < L; ++j) op.P(perm[j], j) = 1.0;
  return op;
}

AntilinearOp lattice_reflection(int L) {
  std::vector<int> perm(L);
  for (int j = 0; j < L; ++j) perm[j] = L - 1 - j;
  return build_pt_operator(perm);
}

double pt_defect(const Mat& H, const AntilinearOp& theta) {
  if (H.rows() != theta.dim()) throw std::invalid_argument("dimension mismatch");
  Mat p = theta.P.cast<cd>();
  return (p * H.conjugate() * p - H).lpNorm<Eigen::Infinity>();
}

PtSpectrumReport spectrum_pair_analysis(const Mat& H,
                                        const AntilinearOp& theta) {
  if (pt_defect(H, theta) >= 1e-10)
    throw std::invalid_argument("matrix is not PT-symmetric");
  auto pairs = eig_right(H);
  const int N = static_cast<int>(pairs.values.size());
  PtSpectrumReport rep;
  std::vector<cd> conj_spec(N);
  for (int n = 0; n < N; ++n) conj_spec[n] = std::conj(pairs.values[n]);
  rep.closure_defect = spectral_distance(pairs.values, conj_spec);
  for (int n = 0; n < N; ++n) {
    PtMode mode;
    mode.eigenvalue = pairs.values[n];
    Vec psi = pairs.vectors.col(n);
    Vec tpsi = theta.apply(psi);
    const double overlap =
        std::abs(psi.dot(tpsi)) / (psi.norm() * tpsi.norm());
    mode.unbroken = (1.0 - overlap) < 1e-8;
    mode.partner = -1;
    if (!mode.unbroken) {
      // Theta psi is an eigenvector at the conjugate eigenvalue; find it
      double bd = 1e300;
      for (int j = 0; j < N; ++j) {
        if (j == n) continue;
        double d = std::abs(pairs.values[j] - std::conj(mode.eigenvalue));
        if (d < bd) {
          bd = d;
          mode.partner = j;
        }
      }
      rep.broken_count++;
    } else {
      rep.unbroken_count++;
    }
    rep.modes.push_back(mode);
  }
  return rep;
}

double linear_symmetry_shared_eigenvectors(const Mat& H, const Mat& A) {
  if ((H * A - A * H).lpNorm<Eigen::Infinity>() > 1e-10)
    throw std::invalid_argument("operators do not commute");
  auto pairs = eig_right(H);
  const int N = static_cast<int>(pairs.values.size());
  double worst = 0.0;
  for (int n = 0; n < N; ++n) {
    Vec psi = pairs.vectors.col(n);
    Vec apsi = A * psi;
    const cd lam = psi.dot(apsi) / psi.dot(psi);
    worst = std::max(worst, (apsi - lam * psi).norm() / psi.norm());
  }
  return worst;
}

Mat random_pt_symmetric(int L, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Mat B(L, L);
  for (int j = 0; j < L; ++j)
    for (int k = 0; k < L; ++k) B(j, k) = cd(dist(rng), dist(rng));
  Mat p = lattice_reflection(L).P.cast<cd>();
  return B + p * B.conjugate() * p;
}

}  // namespace nhqm
