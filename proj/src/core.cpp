#include "nhqm/core.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace nhqm {

cd WeightedBasisSpace::inner(const Vec& u, const Vec& v) const {
  cd acc = 0.0;
  for (int n = 0; n < N; ++n) acc += gamma[n] * std::conj(u[n]) * v[n];
  return acc;
}

double WeightedBasisSpace::norm(const Vec& u) const {
  return std::sqrt(std::abs(inner(u, u)));
}

WeightedBasisSpace build_weighted_space(int N, const RVec& gamma, int B) {
  if (N < 2) throw std::invalid_argument("dimension must be >= 2");
  if (gamma.size() != N)
    throw std::invalid_argument("weight vector length != dimension");
  for (int n = 0; n < N; ++n)
    if (!(gamma[n] > 0.0))
      throw std::invalid_argument("weight " + std::to_string(n) +
                                  " non-positive");
  if (B < 0 || B >= N)
    throw std::invalid_argument("bulk buffer out of range");
  WeightedBasisSpace s;
  s.N = N;
  s.gamma = gamma;
  s.bulk_buffer = B;
  return s;
}

WeightedBasisSpace orthonormal_space(int N, int B) {
  return build_weighted_space(N, RVec::Ones(N), B);
}

OperatorRep make_op(Mat m, BasisTag tag, std::optional<int> bandwidth) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix not square");
  if (!m.allFinite()) throw std::invalid_argument("matrix has non-finite entries");
  if (bandwidth) {
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        if (std::abs(i - j) > *bandwidth && m(i, j) != cd(0.0))
          throw std::invalid_argument("entry outside declared bandwidth");
  }
  return OperatorRep{std::move(m), tag, bandwidth};
}

OperatorRep adjoint_in_space(const OperatorRep& A, const WeightedBasisSpace& S) {
  const int N = A.dim();
  if (N != S.N) throw std::invalid_argument("operator/space dimension mismatch");
  Mat adj(N, N);
  for (int m = 0; m < N; ++m)
    for (int k = 0; k < N; ++k)
      adj(m, k) = (S.gamma[k] / S.gamma[m]) * std::conj(A.m(k, m));
  return OperatorRep{std::move(adj), A.tag, A.bandwidth};
}

double hermiticity_defect(const OperatorRep& A, const WeightedBasisSpace& S,
                          bool bulk_only) {
  const int N = A.dim();
  if (N != S.N) throw std::invalid_argument("operator/space dimension mismatch");
  const int hi = bulk_only ? S.bulk_end() : N - 1;
  double defect = 0.0;
  for (int n = 0; n <= hi; ++n)
    for (int m = 0; m <= hi; ++m)
      defect = std::max(defect, std::abs(S.gamma[n] * A.m(n, m) -
                                         S.gamma[m] * std::conj(A.m(m, n))));
  return defect;
}

OperatorRep commutator(const OperatorRep& A, const OperatorRep& B) {
  if (A.dim() != B.dim()) throw std::invalid_argument("dimension mismatch");
  if (A.tag != B.tag)
    throw std::invalid_argument("basis tag mismatch in commutator");
  return OperatorRep{A.m * B.m - B.m * A.m, A.tag, std::nullopt};
}

OperatorRep rescale_basis(const OperatorRep& A, const RVec& gamma_old,
                          const RVec& gamma_new) {
  const int N = A.dim();
  if (gamma_old.size() != N || gamma_new.size() != N)
    throw std::invalid_argument("weight vector length mismatch");
  RVec c(N);
  for (int n = 0; n < N; ++n) {
    if (!(gamma_old[n] > 0.0) || !(gamma_new[n] > 0.0))
      throw std::invalid_argument("weight " + std::to_string(n) +
                                  " non-positive");
    c[n] = std::sqrt(gamma_old[n] / gamma_new[n]);
  }
  Mat out(N, N);
  for (int n = 0; n < N; ++n)
    for (int m = 0; m < N; ++m) out(n, m) = (c[m] / c[n]) * A.m(n, m);
  return OperatorRep{std::move(out), A.tag, A.bandwidth};
}

std::vector<cd> spectrum(const Mat& A) {
  const int N = static_cast<int>(A.rows());
  if (A.rows() != A.cols()) throw std::invalid_argument("matrix not square");
  if (!A.allFinite()) throw std::invalid_argument("matrix has non-finite entries");
  Mat work = A;  // zgeev overwrites
  std::vector<cd> w(N);
  int info = LAPACKE_zgeev(
      LAPACK_COL_MAJOR, 'N', 'N', N,
      reinterpret_cast<lapack_complex_double*>(work.data()), N,
      reinterpret_cast<lapack_complex_double*>(w.data()), nullptr, 1, nullptr,
      1);
  if (info != 0)
    throw std::runtime_error("zgeev failed to converge, info=" +
                             std::to_string(info));
  return w;
}

EigPairs eig_right(const Mat& A) {
  const int N = static_cast<int>(A.rows());
  Mat work = A;
  EigPairs out;
  out.values.resize(N);
  out.vectors.resize(N, N);
  int info = LAPACKE_zgeev(
      LAPACK_COL_MAJOR, 'N', 'V', N,
      reinterpret_cast<lapack_complex_double*>(work.data()), N,
      reinterpret_cast<lapack_complex_double*>(out.values.data()), nullptr, 1,
      reinterpret_cast<lapack_complex_double*>(out.vectors.data()), N);
  if (info != 0)
    throw std::runtime_error("zgeev failed to converge, info=" +
                             std::to_string(info));
  return out;
}

double spectral_distance(const std::vector<cd>& s1, const std::vector<cd>& s2) {
  if (s1.size() != s2.size())
    throw std::invalid_argument("spectral multiset size mismatch");
  const int n = static_cast<int>(s1.size());
  std::vector<bool> used(n, false);
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    int best = -1;
    double best_d = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
      if (used[j]) continue;
      double d = std::abs(s1[i] - s2[j]);
      if (d < best_d) {  // strict: ties keep the lower index
        best_d = d;
        best = j;
      }
    }
    used[best] = true;
    worst = std::max(worst, best_d);
  }
  return worst;
}

}  // namespace nhqm
