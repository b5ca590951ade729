#include "nhqm/bessel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nhqm {

namespace {
constexpr double kPi = std::numbers::pi;
}

std::vector<double> sph_bessel_j_table(int n_max, double x) {
  if (n_max < 0) throw std::invalid_argument("negative order");
  if (!(x > 0.0)) throw std::invalid_argument("argument must be positive");
  const int start = n_max + static_cast<int>(std::ceil(10.0 + 1.5 * x));
  std::vector<double> tmp(start + 2, 0.0);
  tmp[start + 1] = 0.0;
  tmp[start] = 1e-300;
  for (int n = start; n >= 1; --n) {
    tmp[n - 1] = (2.0 * n + 1.0) / x * tmp[n] - tmp[n + 1];
    if (std::abs(tmp[n - 1]) > 1e280) {  // rescale to avoid overflow
      for (int k = n - 1; k <= start + 1; ++k) tmp[k] *= 1e-280;
    }
  }
  const double scale = (std::sin(x) / x) / tmp[0];
  std::vector<double> out(n_max + 1);
  for (int n = 0; n <= n_max; ++n) out[n] = tmp[n] * scale;
  return out;
}

double sph_bessel_j(int n, double x) { return sph_bessel_j_table(n, x)[n]; }

double completeness_diagonal(double x, int N) {
  if (!(x > 0.0)) throw std::invalid_argument("argument must be positive");
  if (N < static_cast<int>(x) + 40)
    throw std::invalid_argument("truncation too small for requested x");
  auto j = sph_bessel_j_table(N, x);
  double acc = 0.0;
  for (int n = N; n >= 0; --n) acc += (2.0 * n + 1.0) / kPi * j[n] * j[n];
  return acc;
}

cdb gamma_lanczos(cdb z) {
  static const double g = 7.0;
  static const double c[9] = {0.99999999999980993,    676.5203681218851,
                              -1259.1392167224028,    771.32342877765313,
                              -176.61502916214059,    12.507343278686905,
                              -0.13857109526572012,   9.9843695780195716e-6,
                              1.5056327351493116e-7};
  if (z.real() < 0.5) {
    // reflection formula
    return kPi / (std::sin(kPi * z) * gamma_lanczos(1.0 - z));
  }
  z -= 1.0;
  cdb x = c[0];
  for (int i = 1; i < 9; ++i) x += c[i] / (z + static_cast<double>(i));
  cdb t = z + g + 0.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

namespace {

cdb bessel_j_series(cdb nu, double x) {
  const cdb half_x = 0.5 * x;
  cdb term = std::pow(cdb(half_x), nu) / gamma_lanczos(nu + 1.0);
  cdb sum = term;
  const double q = -0.25 * x * x;
  for (int k = 1; k <= 400; ++k) {
    term *= q / (static_cast<double>(k) * (nu + static_cast<double>(k)));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum) && k > 4) break;
  }
  return sum;
}

cdb bessel_j_asymptotic(cdb nu, double x) {
  // J_nu(x) ~ sqrt(2/(pi x)) [P cos(chi) - Q sin(chi)],
  // chi = x - nu pi/2 - pi/4, with the standard Hankel coefficients
  // a_k = prod_{j=1..k} (4 nu^2 - (2j-1)^2) / (k! 8^k x^k).
  const cdb mu = 4.0 * nu * nu;
  cdb p = 1.0, q = 0.0;
  cdb term = 1.0;
  double prev = 1e300;
  for (int k = 1; k <= 30; ++k) {
    const double tk = 2.0 * k - 1.0;
    term *= (mu - tk * tk) / (8.0 * k * x);
    const double mag = std::abs(term);
    if (mag > prev) break;  // asymptotic series: stop at smallest term
    prev = mag;
    if (k % 2 == 1) {
      q += (k % 4 == 1) ? term : -term;
    } else {
      p += (k % 4 == 2) ? -term : term;
    }
    if (mag < 1e-18) break;
  }
  const cdb chi = x - nu * (kPi / 2.0) - kPi / 4.0;
  return std::sqrt(2.0 / (kPi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

}  // namespace

cdb bessel_j_complex_order(cdb nu, double x) {
  if (!(x > 0.0)) throw std::invalid_argument("argument must be positive");
  return (x <= 20.0) ? bessel_j_series(nu, x) : bessel_j_asymptotic(nu, x);
}

cdb sinc(cdb z) {
  if (std::abs(z) < 1e-4) {
    const cdb z2 = z * z;
    return 1.0 - z2 / 6.0 + z2 * z2 / 120.0;
  }
  return std::sin(z) / z;
}

}  // namespace nhqm
