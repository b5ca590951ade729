#include "nhqm/coulomb.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace nhqm {

cdc laguerre1(int k, cdc y) {
  if (k < 0) throw std::invalid_argument("negative Laguerre degree");
  cdc lm1 = 1.0;           // L^(1)_0
  if (k == 0) return lm1;
  cdc l = 2.0 - y;         // L^(1)_1
  for (int j = 1; j < k; ++j) {
    // (j+1) L_{j+1} = (2j+2-y) L_j - (j+1) L_{j-1}
    cdc next = ((2.0 * j + 2.0 - y) * l - (j + 1.0) * lm1) / (j + 1.0);
    lm1 = l;
    l = next;
  }
  return l;
}

cdc coulomb_eigenfunction(int n, cdc a, cdc x) {
  if (n < 1) throw std::invalid_argument("mode index must be >= 1");
  const cdc y = a * x / static_cast<double>(n);
  return std::exp(-a * x / (2.0 * n)) * y * laguerre1(n - 1, y);
}

double coulomb_spectrum_hermitian(int n, double a) {
  if (n < 1 || !(a > 0.0)) throw std::invalid_argument("bad coulomb parameters");
  const double e = a / (2.0 * n);
  return -e * e;
}

double coulomb_spectrum_rotated(int n, double alpha) {
  if (n < 1 || !(alpha > 0.0))
    throw std::invalid_argument("bad coulomb parameters");
  const double e = alpha / (2.0 * n);
  return e * e;
}

double schrodinger_residual(int n, double coupling, CoulombBranch branch,
                            double x0, double x1, double h) {
  if (!(x0 > 0.0)) throw std::invalid_argument("grid must exclude x = 0");
  const int M = static_cast<int>(std::floor((x1 - x0) / h)) + 1;
  if (M < 9) throw std::invalid_argument("grid too small");
  const bool rot = branch == CoulombBranch::rotated;
  const cdc a = rot ? cdc(0.0, coupling) : cdc(coupling, 0.0);
  const double E = rot ? coulomb_spectrum_rotated(n, coupling)
                       : coulomb_spectrum_hermitian(n, coupling);
  std::vector<cdc> psi(M);
  for (int j = 0; j < M; ++j)
    psi[j] = coulomb_eigenfunction(n, a, x0 + j * h);
  double worst = 0.0;
  for (int j = 2; j < M - 2; ++j) {
    const double x = x0 + j * h;
    // p^2 = -d^2/dx^2, 4th-order stencil
    cdc d2 = (-psi[j - 2] + 16.0 * psi[j - 1] - 30.0 * psi[j] +
              16.0 * psi[j + 1] - psi[j + 2]) /
             (12.0 * h * h);
    cdc hpsi = -d2 - (a / x) * psi[j];
    worst = std::max(worst, std::abs(hpsi - E * psi[j]));
  }
  return worst;
}

CanonicalEquivalence canonical_equivalence_report(int n, double alpha) {
  if (n < 1) throw std::invalid_argument("mode index must be >= 1");
  if (!(alpha > 0.0))
    throw std::invalid_argument("alpha = 0 has no bound states");
  CanonicalEquivalence rep;
  const double x0 = 0.1, x1 = 20.0, h = 1e-3;
  const int M = static_cast<int>(std::floor((x1 - x0) / h)) + 1;
  const double E = coulomb_spectrum_rotated(n, alpha);
  std::vector<cdc> phi(M);
  for (int j = 0; j < M; ++j)
    phi[j] = coulomb_eigenfunction(n, cdc(alpha, 0.0), x0 + j * h);
  double worst = 0.0;
  for (int j = 2; j < M - 2; ++j) {
    const double s = x0 + j * h;
    cdc d2 = (-phi[j - 2] + 16.0 * phi[j - 1] - 30.0 * phi[j] +
              16.0 * phi[j + 1] - phi[j + 2]) /
             (12.0 * h * h);
    // -(pc)^2 + alpha/xc: the kinetic term enters with a plus after the
    // sign flip -(pc)^2 = +d^2/ds^2
    cdc hphi = d2 + (alpha / s) * phi[j];
    worst = std::max(worst, std::abs(hphi - E * phi[j]));
  }
  rep.residual = worst;
  rep.unphysical_kinetic_sign = true;
  for (int k = 1; k <= 5; ++k) {
    rep.rotated_spectrum.push_back(coulomb_spectrum_rotated(k, alpha));
    rep.minus_hermitian_spectrum.push_back(
        -coulomb_spectrum_hermitian(k, alpha));
  }
  return rep;
}

namespace {
// 16-point Gauss-Legendre nodes/weights on [-1, 1] (positive half; mirror).
const std::array<double, 8> kGlx = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
    0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
    0.9445750230732326, 0.9894009349916499};
const std::array<double, 8> kGlw = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
    0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
    0.0622535239386479, 0.0271524594117541};
}  // namespace

double coulomb_overlap(int n, int m, double a, double X) {
  const double panel = 2.0;
  const int panels = static_cast<int>(std::ceil(X / panel));
  double acc = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double lo = p * panel;
    const double hi = std::min(X, lo + panel);
    const double c = 0.5 * (lo + hi), r = 0.5 * (hi - lo);
    for (int q = 0; q < 8; ++q) {
      for (double sgn : {-1.0, 1.0}) {
        const double x = c + sgn * r * kGlx[q];
        acc += r * kGlw[q] *
               (coulomb_eigenfunction(n, a, x) *
                coulomb_eigenfunction(m, a, x))
                   .real();
      }
    }
  }
  return acc;
}

double rotated_magnitude_on_ray(int n, double alpha, double theta, double r) {
  const cdc x = r * std::exp(cdc(0.0, theta));
  return std::abs(coulomb_eigenfunction(n, cdc(0.0, alpha), x));
}

}  // namespace nhqm
