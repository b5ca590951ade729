#pragma once

#include <complex>
#include <vector>

namespace nhqm {

using cdb = std::complex<double>;

// Spherical Bessel j_n(x), x > 0, by Miller-type downward recurrence
// normalized against j_0 = sin(x)/x. Upward recurrence is unstable for
// n > x, downward is self-correcting.
double sph_bessel_j(int n, double x);
std::vector<double> sph_bessel_j_table(int n_max, double x);

// sum_{n=0}^{N} (2n+1)/pi * j_n(x)^2; converges to 1/pi (not a delta).
double completeness_diagonal(double x, int N);

// Gamma function for complex argument (Lanczos approximation, g = 7).
cdb gamma_lanczos(cdb z);

// Bessel J of complex order nu at real x > 0: ascending power series for
// x <= 20, Hankel P/Q asymptotic expansion beyond. Accurate to ~1e-7
// relative for |nu| of order unity.
cdb bessel_j_complex_order(cdb nu, double x);

// sin(z)/z with the removable singularity handled.
cdb sinc(cdb z);

}  // namespace nhqm
