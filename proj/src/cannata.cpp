#include "nhqm/cannata.hpp"

#include <Eigen/SVD>

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "nhqm/bessel.hpp"

namespace nhqm {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr cd kI{0.0, 1.0};

Mat weighted_adjoint(const Mat& A, const RVec& g) {
  const int N = static_cast<int>(A.rows());
  Mat out(N, N);
  for (int m = 0; m < N; ++m)
    for (int k = 0; k < N; ++k) out(m, k) = (g[k] / g[m]) * std::conj(A(k, m));
  return out;
}
}  // namespace

RVec hat_weights(int N) {
  RVec g(N);
  for (int n = 0; n < N; ++n) g[n] = n + 0.5;
  return g;
}

Vec CannataAlgebra::xi(int n) const {
  if (n < 1 || n >= N) throw std::invalid_argument("xi index out of range");
  Vec v = Vec::Zero(N);
  v[n - 1] = 1.0 / std::sqrt(n - 0.5);
  if (n + 1 < N) v[n + 1] = 1.0 / std::sqrt(n + 1.5);
  return v;
}

CannataAlgebra build_cannata(int N) {
  if (N < 8) throw std::invalid_argument("truncation too small");
  CannataAlgebra a;
  a.N = N;
  a.Mexp = Mat::Zero(N, N);
  a.Mexpp = Mat::Zero(N, N);
  a.Mexp(0, 0) = kI;
  a.Mexp(1, 0) = 1.0 / std::sqrt(3.0);
  a.Mexpp(0, 0) = 0.5 * kI;
  a.Mexpp(1, 0) = -0.5 / std::sqrt(3.0);
  for (int n = 1; n < N; ++n) {
    const double up = n + 0.5;
    a.Mexp(n - 1, n) = 0.5 / std::sqrt(up * (n - 0.5));
    a.Mexpp(n - 1, n) = 0.5 * std::sqrt(up) / std::sqrt(n - 0.5);
    if (n + 1 < N) {
      a.Mexp(n + 1, n) = 0.5 / std::sqrt(up * (n + 1.5));
      a.Mexpp(n + 1, n) = -0.5 * std::sqrt(up) / std::sqrt(n + 1.5);
    }
  }
  a.Pc = -kI * (a.Mexpp - 0.5 * a.Mexp);
  a.lu.compute(a.Mexp);
  if (a.lu.matrixLU().diagonal().cwiseAbs().minCoeff() == 0.0)
    throw std::runtime_error("truncated exp(-ix) numerically singular");
  a.Xc = a.lu.solve(Mat::Identity(N, N));
  a.S = Mat::Zero(N, N - 1);
  for (int n = 1; n < N; ++n) a.S.col(n - 1) = a.xi(n);
  return a;
}

XiPartialSum xi_partial_sum(const CannataAlgebra& alg, int n, int K) {
  if (n < 0 || K < 0 || n + 2 * (K + 1) >= alg.N)
    throw std::invalid_argument("xi partial sum index overflow");
  XiPartialSum out;
  out.f = Vec::Zero(alg.N);
  for (int k = 0; k <= K; ++k)
    out.f += ((k % 2 == 0) ? 1.0 : -1.0) * alg.xi(n + 2 * k + 1);
  out.closed = Vec::Zero(alg.N);
  out.closed[n] = 1.0 / std::sqrt(n + 0.5);
  const int tail = n + 2 * (K + 1);
  out.closed[tail] = ((K % 2 == 0) ? 1.0 : -1.0) / std::sqrt(tail + 0.5);
  out.remainder = 1.0 / std::sqrt(tail + 0.5);
  return out;
}

Mat canonical_hamiltonian(const CannataAlgebra& alg, HamiltonianForm form) {
  const int N = alg.N;
  if (N < 16) throw std::invalid_argument("truncation too small");
  const Mat I = Mat::Identity(N, N);
  if (form == HamiltonianForm::grouped) {
    Mat inner = alg.lu.solve(I - alg.Pc * alg.Pc) + 2.0 * kI * alg.Pc;
    return 0.5 * (alg.lu.solve(inner).eval() + 0.25 * I);
  }
  const Mat& X = alg.Xc;
  return 0.5 * (-X * X * alg.Pc * alg.Pc + 2.0 * kI * X * alg.Pc + 0.25 * I +
                X * X);
}

double inner_bracket_defect(const CannataAlgebra& alg, int n) {
  Vec e = Vec::Zero(alg.N);
  e[n] = 1.0;
  Vec b = alg.lu.solve((Mat::Identity(alg.N, alg.N) - alg.Pc * alg.Pc) * e) +
          2.0 * kI * (alg.Pc * e);
  const double lam = n * (n + 1.0) / (2.0 * std::sqrt(n + 0.5));
  Vec expect = (n >= 1) ? Vec(lam * alg.xi(n)) : Vec(Vec::Zero(alg.N));
  return (b - expect).lpNorm<Eigen::Infinity>();
}

double momentum_norm(const CannataAlgebra& alg) {
  Eigen::BDCSVD<Mat> svd(alg.Pc);
  return svd.singularValues()(0);
}

double momentum_norm(int N) {
  if (N < 16) throw std::invalid_argument("truncation too small");
  return momentum_norm(build_cannata(N));
}

DivergenceWitness divergence_witness(int n, const std::vector<int>& N_list) {
  if (N_list.empty()) throw std::invalid_argument("empty truncation list");
  DivergenceWitness w;
  w.n_values = N_list;
  for (int N : N_list) {
    if (n >= N / 4) throw std::invalid_argument("mode too high for truncation");
    auto alg = build_cannata(N);
    Vec e = Vec::Zero(N);
    e[n] = 1.0;
    w.xc_psi_norms.push_back(alg.apply_xc(e).norm());
  }
  w.strictly_increasing = true;
  for (size_t i = 1; i < w.xc_psi_norms.size(); ++i)
    if (!(w.xc_psi_norms[i] > w.xc_psi_norms[i - 1]))
      w.strictly_increasing = false;
  w.super_constant =
      w.xc_psi_norms.back() > 1.5 * w.xc_psi_norms.front();

  auto alg = build_cannata(N_list.back());
  const int be = alg.bulk_end();
  Vec r = alg.apply_xc(Vec(alg.Mexp * alg.xi(2))) - alg.xi(2);
  w.xc_mexp_xi2_defect = r.head(be + 1).lpNorm<Eigen::Infinity>();
  Mat rr = alg.Mexp * (alg.Xc * alg.S) - alg.S;
  w.mexp_xc_defect =
      rr.topLeftCorner(be + 1, be).lpNorm<Eigen::Infinity>();

  // exp(-ix) xi_1 = xi_2/5 - sum_k (-i)^k xi_k; the canonical position maps
  // each xi_k to 2 sqrt(k+1/2) psi_k, so term-by-term application yields
  // partial sums whose norms grow linearly: the claimed divergence.
  const int Kmax = N_list.back() / 2;
  Vec acc = Vec::Zero(alg.N);
  acc[2] = 2.0 * std::sqrt(2.5) / 5.0;
  cd phase = 1.0;
  for (int k = 1; k <= Kmax; ++k) {
    phase *= -kI;
    acc[k] -= phase * 2.0 * std::sqrt(k + 0.5);
    w.series_partial_norms.push_back(acc.norm());
  }
  return w;
}

TildeReport tilde_canonical_pair(int N) {
  if (N < 16) throw std::invalid_argument("truncation too small");
  auto alg = build_cannata(N);
  const RVec g = hat_weights(N);
  TildeReport rep;
  Mat xc_adj = weighted_adjoint(alg.Xc, g);
  rep.xt = -0.5 * (alg.Xc + xc_adj);
  rep.xtp = 0.5 * kI * (alg.Xc - xc_adj);
  rep.pt = kI * alg.Mexpp;

  auto space = build_weighted_space(N, g, default_bulk_buffer(N));
  rep.herm_pt = hermiticity_defect(make_op(rep.pt), space, true);
  rep.herm_xt = hermiticity_defect(make_op(rep.xt), space, true);

  // Weak-form commutators on xi columns: every adjoint of Xc is moved onto
  // the left argument of the scalar product, where it acts as Xc itself.
  const Mat W = g.asDiagonal();
  const Mat XS = alg.apply_xc(Mat(alg.S));
  const Mat PS = rep.pt * alg.S;
  const Mat XPS = alg.apply_xc(PS);
  const Mat PXS = rep.pt * XS;
  auto ip = [&](const Mat& A, const Mat& B) -> Mat {
    return A.adjoint() * W * B;
  };
  Mat G1 = -0.5 * (ip(alg.S, XPS) + ip(XS, PS));
  Mat G2 = -0.5 * (ip(PS, XS) + ip(XPS, alg.S));
  Mat gram = ip(alg.S, alg.S);
  Mat H1 = 0.5 * kI * (ip(alg.S, XPS) - ip(XS, PS));
  Mat H2 = 0.5 * kI * (ip(PS, XS) - ip(XPS, alg.S));
  const int nb = alg.bulk_end();  // columns 0..nb-1 hold xi_1..xi_nb
  rep.comm_defect = (G1 - G2 - kI * gram)
                        .topLeftCorner(nb, nb)
                        .lpNorm<Eigen::Infinity>();
  rep.comm_zero_defect =
      (H1 - H2).topLeftCorner(nb, nb).lpNorm<Eigen::Infinity>();
  return rep;
}

GaugeShiftReport gauge_shift_check(const CannataAlgebra& alg, double coeff) {
  const int nb = alg.N - default_bulk_buffer(alg.N);
  Mat Xb = alg.Xc.topLeftCorner(nb, nb);
  Mat Pb = alg.Pc.topLeftCorner(nb, nb);
  Mat Xb2 = Xb * Xb;
  Mat pi = Pb + coeff * (Xb + Xb2 + Xb2 * Xb);
  Mat C = Xb * pi - pi * Xb;
  const int inner = nb - 1 - default_bulk_buffer(nb);
  GaugeShiftReport rep;
  rep.comm_defect = 0.0;
  for (int n = 1; n <= inner; ++n) {
    Vec x = alg.xi(n).head(nb);
    Vec r = C * x - kI * x;
    rep.comm_defect = std::max(
        rep.comm_defect, r.head(inner + 1).lpNorm<Eigen::Infinity>());
  }
  rep.pi_norm = Eigen::BDCSVD<Mat>(pi).singularValues()(0);
  rep.xb_norm = Eigen::BDCSVD<Mat>(Xb).singularValues()(0);
  return rep;
}

double position_wavefunction(int n, double x) {
  if (!(x > 0.0)) throw std::invalid_argument("argument must be positive");
  return std::sqrt((2.0 * n + 1.0) / kPi) * sph_bessel_j(n, x);
}

cd overlap_closed_form(cd nu, cd mu) {
  const cd d = std::conj(nu) - mu;
  const cd s = std::conj(nu) + mu + 1.0;
  if (!(s.real() > 0.0))
    throw std::invalid_argument("overlap outside convergence domain");
  return 2.0 * std::exp(-kI * kPi * d / 2.0) / s * sinc(kPi * d);
}

double norm_phi_squared(cd nu) {
  if (!(nu.real() > -0.5))
    throw std::invalid_argument("norm outside convergence domain");
  return overlap_closed_form(nu, nu).real();
}

namespace {
const std::array<double, 8> kGlx = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
    0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
    0.9445750230732326, 0.9894009349916499};
const std::array<double, 8> kGlw = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
    0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
    0.0622535239386479, 0.0271524594117541};
}  // namespace

cd overlap_quadrature(cd nu, cd mu, double X) {
  const cd an = std::conj(nu) + 0.5;
  const cd am = mu + 0.5;
  const double panel = kPi / 2.0;
  const int panels = static_cast<int>(std::ceil(X / panel));
  cd acc = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double lo = p * panel;
    const double hi = std::min(X, lo + panel);
    const double c = 0.5 * (lo + hi), r = 0.5 * (hi - lo);
    for (int q = 0; q < 8; ++q) {
      for (double sgn : {-1.0, 1.0}) {
        const double x = c + sgn * r * kGlx[q];
        acc += r * kGlw[q] * bessel_j_complex_order(an, x) *
               bessel_j_complex_order(am, x) / x;
      }
    }
  }
  // the negative half-axis contributes through the above-the-cut
  // continuation phi(-x) = exp(i pi nu) phi(x)
  return (1.0 + std::exp(-kI * kPi * (std::conj(nu) - mu))) * acc;
}

}  // namespace nhqm
