#include "nhqm/hatano.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace nhqm {

namespace {
constexpr cd kI{0.0, 1.0};
}

LatticeModel build_lattice(int L, double t, double g, const RVec& V,
                           bool periodic) {
  if (L < 4) throw std::invalid_argument("lattice too small");
  if (V.size() != L) throw std::invalid_argument("potential length mismatch");
  LatticeModel m;
  m.L = L;
  m.t = t;
  m.g = g;
  m.V = V;
  m.periodic = periodic;
  m.H = Eigen::MatrixXd::Zero(L, L);
  const double right = -t * std::exp(-g), left = -t * std::exp(g);
  for (int j = 0; j < L; ++j) {
    m.H(j, j) = V[j] + 2.0 * t;
    if (j + 1 < L) {
      m.H(j, j + 1) = right;
      m.H(j + 1, j) = left;
    }
  }
  if (periodic) {
    m.H(L - 1, 0) = right;
    m.H(0, L - 1) = left;
  }
  return m;
}

RVec random_potential(int L, double W, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-0.5 * W, 0.5 * W);
  RVec V(L);
  for (int j = 0; j < L; ++j) V[j] = dist(rng);
  return V;
}

std::vector<cd> open_spectrum_via_gauge(const LatticeModel& m) {
  if (m.periodic)
    throw std::invalid_argument("gauge similarity requires open boundary");
  // conjugate numerically, then diagonalize the (symmetric to roundoff)
  // result; the similarity is exact, so these are the eigenvalues of H(g)
  Eigen::MatrixXd conj_h = m.H;
  for (int j = 0; j < m.L; ++j)
    for (int k = 0; k < m.L; ++k)
      conj_h(j, k) = m.H(j, k) * std::exp(-m.g * (j - k));
  return spectrum(conj_h.cast<cd>());
}

std::vector<cd> lattice_spectrum(const LatticeModel& m) {
  if (!m.periodic && m.g != 0.0) return open_spectrum_via_gauge(m);
  return spectrum(m.H.cast<cd>());
}

BiorthogonalSystem biorthogonal_eigensystem(const Mat& H) {
  const int N = static_cast<int>(H.rows());
  auto rightp = eig_right(H);
  auto leftp = eig_right(H.adjoint());
  BiorthogonalSystem s;
  s.E = rightp.values;
  s.right = rightp.vectors;
  s.left.resize(N, N);
  s.exceptional.assign(N, false);
  std::vector<bool> used(N, false);
  for (int n = 0; n < N; ++n) {
    // left partner carries the conjugate eigenvalue
    int best = -1;
    double bd = std::numeric_limits<double>::infinity();
    for (int j = 0; j < N; ++j) {
      if (used[j]) continue;
      double d = std::abs(leftp.values[j] - std::conj(s.E[n]));
      if (d < bd) {
        bd = d;
        best = j;
      }
    }
    used[best] = true;
    Vec r = s.right.col(n);
    int imax = 0;
    r.cwiseAbs().maxCoeff(&imax);
    r *= std::abs(r[imax]) / r[imax];  // phase: largest entry real positive
    s.right.col(n) = r;
    Vec l = leftp.vectors.col(best);
    cd pair = l.dot(r);  // conjugates the left factor
    if (std::abs(pair) < 1e-10) {
      s.exceptional[n] = true;  // exceptional-point proximity: refuse to scale
      s.left.col(n) = l;
    } else {
      s.left.col(n) = l / std::conj(pair);
    }
  }
  return s;
}

BiorthogonalSystem biorthogonal_eigensystem_gauge(const LatticeModel& m) {
  if (m.periodic)
    throw std::invalid_argument("gauge similarity requires open boundary");
  const int L = m.L;
  Eigen::MatrixXd h0(L, L);
  for (int j = 0; j < L; ++j)
    for (int k = 0; k < L; ++k)
      h0(j, k) = m.H(j, k) * std::exp(-m.g * (j - k));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h0);
  BiorthogonalSystem s;
  s.E.resize(L);
  s.right.resize(L, L);
  s.left.resize(L, L);
  s.exceptional.assign(L, false);
  for (int n = 0; n < L; ++n) {
    s.E[n] = es.eigenvalues()(n);
    for (int j = 0; j < L; ++j) {
      s.right(j, n) = std::exp(m.g * j) * es.eigenvectors()(j, n);
      s.left(j, n) = std::exp(-m.g * j) * es.eigenvectors()(j, n);
    }
  }
  return s;
}

double biorthogonality_defect(const BiorthogonalSystem& s) {
  Mat gram = s.left.adjoint() * s.right;
  const int N = static_cast<int>(gram.rows());
  return (gram - Mat::Identity(N, N)).lpNorm<Eigen::Infinity>();
}

double completeness_defect(const BiorthogonalSystem& s) {
  const int N = static_cast<int>(s.right.rows());
  Mat acc = Mat::Zero(N, N);
  for (int n = 0; n < N; ++n) {
    if (s.exceptional[n]) continue;
    acc += s.right.col(n) * s.left.col(n).adjoint();
  }
  return (acc - Mat::Identity(N, N)).lpNorm<Eigen::Infinity>();
}

Vec density_profile(const BiorthogonalSystem& s, int n) {
  const int N = static_cast<int>(s.right.rows());
  if (n < 0 || n >= N) throw std::invalid_argument("mode index out of range");
  if (s.exceptional[n])
    throw std::invalid_argument("density undefined at exceptional point");
  Vec rho(N);
  for (int j = 0; j < N; ++j)
    rho[j] = std::conj(s.left(j, n)) * s.right(j, n);
  return rho;
}

PairingDefect pairing_defect(int L, double t, double g, const RVec& V,
                             bool periodic) {
  auto sp = lattice_spectrum(build_lattice(L, t, g, V, periodic));
  auto sm = lattice_spectrum(build_lattice(L, t, -g, V, periodic));
  std::vector<cd> conj_p(sp.size());
  for (size_t i = 0; i < sp.size(); ++i) conj_p[i] = std::conj(sp[i]);
  PairingDefect d;
  d.cross = spectral_distance(sm, conj_p);
  d.closure = spectral_distance(sp, conj_p);
  return d;
}

DelocalizationScan critical_g_scan(const RVec& V, bool periodic,
                                   const std::vector<double>& g_grid,
                                   double tau, double t) {
  if (g_grid.empty()) throw std::invalid_argument("empty g grid");
  const int L = static_cast<int>(V.size());
  auto max_im = [&](double g) {
    auto sp = lattice_spectrum(build_lattice(L, t, g, V, periodic));
    double m = 0.0;
    for (auto e : sp) m = std::max(m, std::abs(e.imag()));
    return m;
  };
  DelocalizationScan scan;
  scan.g_grid = g_grid;
  if (tau <= 0.0) {
    double rad = 0.0;
    for (auto e :
         lattice_spectrum(build_lattice(L, t, g_grid.back(), V, periodic)))
      rad = std::max(rad, std::abs(e));
    tau = 1e-8 * rad;
  }
  scan.tau = tau;
  int first_above = -1;
  for (size_t i = 0; i < g_grid.size(); ++i) {
    scan.max_im.push_back(max_im(g_grid[i]));
    if (first_above < 0 && scan.max_im.back() > tau)
      first_above = static_cast<int>(i);
  }
  if (first_above < 0) {
    scan.infinite = true;
    scan.g_c = std::numeric_limits<double>::infinity();
    return scan;
  }
  double hi = g_grid[first_above];
  double lo = first_above > 0 ? g_grid[first_above - 1] : 0.0;
  while (hi - lo > 1e-4) {
    double mid = 0.5 * (lo + hi);
    (max_im(mid) > tau ? hi : lo) = mid;
  }
  scan.g_c = 0.5 * (lo + hi);
  return scan;
}

GaugeCheckReport imaginary_gauge_check(int L, double t, double g,
                                       const RVec& V) {
  auto mg = build_lattice(L, t, g, V, false);
  auto m0 = build_lattice(L, t, 0.0, V, false);
  GaugeCheckReport rep;
  Eigen::MatrixXd conj_h(L, L);
  for (int j = 0; j < L; ++j)
    for (int k = 0; k < L; ++k)
      conj_h(j, k) = mg.H(j, k) * std::exp(-g * (j - k));
  rep.entrywise = (conj_h - m0.H).lpNorm<Eigen::Infinity>();
  rep.spectral =
      spectral_distance(open_spectrum_via_gauge(mg), spectrum(m0.H.cast<cd>()));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m0.H);
  Eigen::VectorXd psi0 = es.eigenvectors().col(0);
  Eigen::VectorXd mapped(L);
  for (int j = 0; j < L; ++j) mapped[j] = std::exp(g * j) * psi0[j];
  rep.eigvec_residual = (mg.H * mapped - es.eigenvalues()(0) * mapped).norm() /
                        mapped.norm();
  auto center = [L](const Eigen::VectorXd& p) {
    double num = 0.0, den = 0.0;
    for (int j = 0; j < L; ++j) {
      num += j * p[j] * p[j];
      den += p[j] * p[j];
    }
    return num / den;
  };
  rep.center_shift = center(mapped) - center(psi0);
  return rep;
}

namespace {

// M_g on the lattice from the eigensystem continuation psi_n(g) =
// e^{g j} psi_n(0): M_g = D_g Psi0 Psi0^T D_g with D_g = diag(e^{-g j}).
Eigen::MatrixXd metric_from_eigensystem(const Eigen::MatrixXd& H0, double g) {
  const int L = static_cast<int>(H0.rows());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H0);
  Eigen::MatrixXd psi0 = es.eigenvectors();
  Eigen::VectorXd dg(L);
  for (int j = 0; j < L; ++j) dg[j] = std::exp(-g * j);
  return dg.asDiagonal() * (psi0 * psi0.transpose()) * dg.asDiagonal();
}

Mat momentum_matrix(int L) {
  Mat p = Mat::Zero(L, L);
  for (int j = 1; j < L - 1; ++j) {
    p(j, j - 1) = 0.5 * kI;
    p(j, j + 1) = -0.5 * kI;
  }
  return p;
}

}  // namespace

MetricReport metric_adjoint_relation(int L, double g, const RVec& V) {
  auto m0 = build_lattice(L, 1.0, 0.0, V, false);
  Eigen::MatrixXd Mg = metric_from_eigensystem(m0.H, g);
  Eigen::MatrixXd Mmg = metric_from_eigensystem(m0.H, -g);
  MetricReport rep;
  double worst = 0.0;
  for (int j = 0; j < L; ++j)
    for (int k = 0; k < L; ++k) {
      double expect = (j == k) ? std::exp(-2.0 * g * j) : 0.0;
      worst = std::max(worst, std::abs(Mg(j, k) - expect));
    }
  rep.metric_vs_exponential = worst;
  rep.inverse_defect =
      (Mg * Mmg - Eigen::MatrixXd::Identity(L, L)).lpNorm<Eigen::Infinity>();

  auto dagger = [&](const Mat& A) -> Mat {
    return Mmg.cast<cd>() * A.adjoint() * Mg.cast<cd>();
  };
  Mat x = Mat::Zero(L, L);
  for (int j = 0; j < L; ++j) x(j, j) = j;
  rep.x_defect = (dagger(x) - x).lpNorm<Eigen::Infinity>();

  // the exact lattice counterpart of p^ddagger = p + 2ig:
  // p^ddagger = cosh(2g) p + i sinh(2g) * (averaging operator), interior rows
  Mat p = momentum_matrix(L);
  Mat avg = Mat::Zero(L, L);
  for (int j = 1; j < L - 1; ++j) {
    avg(j, j - 1) = 0.5;
    avg(j, j + 1) = 0.5;
  }
  Mat lhs = dagger(p);
  Mat rhs = std::cosh(2.0 * g) * p + kI * std::sinh(2.0 * g) * avg;
  rep.exact_lattice_relation =
      (lhs - rhs).block(2, 2, L - 4, L - 4).lpNorm<Eigen::Infinity>();
  return rep;
}

ContinuumReport continuum_identity_check(int L, double g, double k) {
  Eigen::MatrixXd H0 =
      build_lattice(L, 1.0, 0.0, RVec::Zero(L), false).H;
  Eigen::MatrixXd Mg = metric_from_eigensystem(H0, g);
  Eigen::MatrixXd Mmg = metric_from_eigensystem(H0, -g);
  Mat p = momentum_matrix(L);
  Mat padj = Mmg.cast<cd>() * p.adjoint() * Mg.cast<cd>();

  Vec plane(L), windowed(L), windowed2(L);
  const double pi = std::numbers::pi;
  for (int j = 0; j < L; ++j) {
    plane[j] = std::exp(kI * (k * j));
    const double w = std::pow(std::sin(pi * j / (L - 1.0)), 2);
    windowed[j] = w * std::exp(kI * (k * j));
    windowed2[j] = w * std::exp(kI * (1.7 * k * j));
  }
  const int B = 8;
  ContinuumReport rep;
  Vec r1 = padj * plane - (p * plane + 2.0 * kI * g * plane);
  rep.p_adjoint_defect = r1.segment(B, L - 2 * B).lpNorm<Eigen::Infinity>();
  Vec r2 = padj * plane + p * plane;
  rep.rejected_branch = r2.segment(B, L - 2 * B).lpNorm<Eigen::Infinity>();

  auto mdot = [&](const Vec& a, const Vec& b) -> cd {
    return a.adjoint() * (Mg.cast<cd>() * b);
  };
  Mat pc = p + kI * g * Mat::Identity(L, L);
  cd form = mdot(windowed2, pc * windowed) -
            std::conj(mdot(windowed, pc * windowed2));
  rep.pc_hermiticity =
      std::abs(form) / (std::sqrt(std::abs(mdot(windowed, windowed))) *
                        std::sqrt(std::abs(mdot(windowed2, windowed2))));

  // velocity of a moving packet: real under the metric product
  Vec packet(L);
  for (int j = 0; j < L; ++j)
    packet[j] = std::pow(std::sin(pi * j / (L - 1.0)), 2) *
                std::exp(kI * (0.5 * j));
  cd v = mdot(packet, pc * packet) / mdot(packet, packet);
  rep.velocity_im_ratio = std::abs(v.imag()) / std::abs(v);

  // the rejected p^ddagger = -p branch pairs with the plain product, where
  // a real standing state gets a purely imaginary velocity
  Vec standing = windowed.real().cast<cd>();
  cd vp = (standing.adjoint() * (pc * standing))(0) /
          (standing.adjoint() * standing)(0);
  rep.velocity_plain_re = std::abs(vp.real()) / std::abs(vp);
  return rep;
}

CanonicalField canonical_field_A(int L, double t, double g, bool periodic) {
  if (periodic)
    throw std::invalid_argument(
        "periodic boundary: position has no domain, no canonical form");
  CanonicalField out;
  // A = (i/2) d/dx ln |T_g|^2 + i g with T_g = e^{-g x}; numerically from
  // the sampled gauge factor
  double worst = 0.0;
  for (int j = 1; j < L - 1; ++j) {
    const double lnT2_p = -2.0 * g * (j + 1.0);
    const double lnT2_m = -2.0 * g * (j - 1.0);
    const cd A = 0.5 * kI * (lnT2_p - lnT2_m) / 2.0 + kI * g;
    worst = std::max(worst, std::abs(A));
  }
  out.max_A = worst;
  out.anticommutator = 0.0;  // {pc, A} with A identically zero
  auto s0 = lattice_spectrum(build_lattice(L, t, 0.0, RVec::Zero(L), false));
  auto s1 = lattice_spectrum(build_lattice(L, t, g, RVec::Zero(L), false));
  out.g_independence = spectral_distance(s0, s1);
  out.step_form = "A(x) * Theta(g - g_c), g_c = inf (open boundary)";
  return out;
}

}  // namespace nhqm
