// Acceptance gate: one line per criterion, exit code = number of failures.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <vector>

#include "nhqm/bessel.hpp"
#include "nhqm/cannata.hpp"
#include "nhqm/coulomb.hpp"
#include "nhqm/hatano.hpp"
#include "nhqm/path.hpp"
#include "nhqm/pt.hpp"

using namespace nhqm;
using std::numbers::pi;

namespace {

int failures = 0;

void report(int idx, bool ok, const char* what, double value, double tol) {
  std::printf("%s criterion %2d: %s (measured %.3e, tolerance %.3e)\n",
              ok ? "PASS" : "FAIL", idx, what, value, tol);
  if (!ok) ++failures;
}

constexpr cd kI{0.0, 1.0};

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();

  // 1: solvable-model spectrum E_n = (n+1/2)^2/2 at N = 256, n = 0..64
  {
    auto alg = build_cannata(256);
    auto H = canonical_hamiltonian(alg, HamiltonianForm::grouped);
    double worst = 0.0;
    for (int n = 0; n <= 64; ++n) {
      const double lam = 0.5 * (n + 0.5) * (n + 0.5);
      Vec e = Vec::Zero(256);
      e[n] = 1.0;
      worst = std::max(worst, (H * e - lam * e).norm() / lam);
    }
    report(1, worst < 1e-8, "grouped Hamiltonian spectrum, relative", worst,
           1e-8);
  }

  // 2: canonical algebra defects and N-doubling stability at N = 256
  {
    auto alg = build_cannata(256);
    auto ortho = orthonormal_space(256, default_bulk_buffer(256));
    double herm_p = hermiticity_defect(make_op(alg.Pc), ortho, true);

    double herm_x = 0.0, comm = 0.0;
    Mat XS = alg.apply_xc(Mat(alg.S));
    Mat form = alg.S.adjoint() * XS;
    const int nb = alg.bulk_end();
    for (int n = 1; n <= nb; ++n)
      for (int m = 1; m <= nb; ++m) {
        double expect = (std::abs(n - m) == 1) ? 2.0 : 0.0;
        herm_x = std::max(herm_x, std::abs(form(n - 1, m - 1) - expect));
      }
    for (int n = 1; n <= nb; ++n) {
      Vec x = alg.xi(n);
      Vec lhs = alg.apply_xc(Vec(alg.Pc * x)) - alg.Pc * alg.apply_xc(x);
      comm = std::max(
          comm, (lhs - kI * x).head(nb + 1).lpNorm<Eigen::Infinity>());
    }
    auto alg128 = build_cannata(128);
    double doubling = (alg.Xc.topLeftCorner(64, 64) -
                       alg128.Xc.topLeftCorner(64, 64))
                          .lpNorm<Eigen::Infinity>();
    bool ok = herm_p < 1e-10 && herm_x < 1e-10 && comm < 1e-8 &&
              doubling < 1e-10;
    report(2, ok, "canonical pair defects and N-doubling",
           std::max({herm_p, herm_x, comm, doubling}), 1e-8);
  }

  // 3: largest singular value of the momentum vs the sqrt(3/5) bound
  {
    const double bound = std::sqrt(3.0 / 5.0) + 1e-9;
    double prev = 0.0, final_v = 0.0, worst = 0.0;
    bool monotone = true, bounded = true;
    for (int N : {64, 128, 256, 512}) {
      double s = momentum_norm(N);
      if (s <= prev) monotone = false;
      if (s > bound) bounded = false;
      prev = s;
      final_v = s;
      worst = std::max(worst, s);
    }
    bool ok = bounded && monotone && final_v > 0.774;
    report(3, ok, "momentum operator norm within sqrt(3/5) bound", worst,
           bound);
  }

  // 4: completeness-sum diagonal stays at 1/pi
  {
    double worst = 0.0;
    for (double x : {0.5, 1.0, 2.0, 5.0}) {
      int N = static_cast<int>(std::ceil(x)) + 60;
      worst = std::max(worst,
                       std::abs(completeness_diagonal(x, N) - 1.0 / pi));
    }
    report(4, worst < 1e-10, "diagonal completeness sum equals 1/pi", worst,
           1e-10);
  }

  // 5: overlap closed form vs quadrature; unit norms
  {
    double worst_rel = 0.0;
    const std::vector<std::pair<cd, cd>> pairs = {
        {cd(0.0), cd(0.0)}, {cd(0.3), cd(0.7)}, {cd(0, 1), cd(0, 1)}};
    const double X[3] = {1e4, 1e4, 4e4};
    for (size_t i = 0; i < pairs.size(); ++i) {
      cd c = overlap_closed_form(pairs[i].first, pairs[i].second);
      cd q = overlap_quadrature(pairs[i].first, pairs[i].second, X[i]);
      double scale = std::max(std::abs(c), 1.0);
      worst_rel = std::max(worst_rel, std::abs(q - c) / scale);
    }
    double worst_norm = 0.0;
    for (int n = 0; n <= 5; ++n) {
      // the truncation tail decays like 1/X; one Richardson step removes it
      double qa = overlap_quadrature(cd(double(n)), cd(double(n)), 1e4).real();
      double qb = overlap_quadrature(cd(double(n)), cd(double(n)), 2e4).real();
      double norm2 = (2.0 * n + 1.0) / 2.0 * (2.0 * qb - qa);
      worst_norm = std::max(worst_norm, std::abs(std::sqrt(norm2) - 1.0));
    }
    bool ok = worst_rel < 1e-4 && worst_norm < 1e-6;
    report(5, ok, "overlap quadrature vs closed form and unit norms",
           std::max(worst_rel, worst_norm), 1e-4);
  }

  // 6: straight-line Hermitization theorem and the adjoint-squared formula
  {
    auto line0 = straight_line_hermiticity_check(0.0, 1.0, 1024);
    auto line90 = straight_line_hermiticity_check(0.0, kI, 1024);
    auto line45 =
        straight_line_hermiticity_check(0.0, std::exp(kI * (pi / 4.0)), 512);

    const double eps = 0.02;
    const int M = 512;
    auto path = sample_path([&](double s) { return cd(s, eps * s * s); },
                            [&](double s) { return cd(1.0, 2.0 * eps * s); },
                            [&](double) { return cd(0.0, 2.0 * eps); }, 1.0,
                            M);
    auto grid = build_path_rep(path, M, 1.0);
    Vec v, w;
    compute_v_w(path, M, 1.0, v, w);
    Mat formula = adjoint_p_squared_via_formula(grid, v, w);
    Mat padj = grid_adjoint(grid, grid.PH);
    Mat direct = padj * padj;
    const int lo = grid.interior_lo, n = grid.interior_hi - lo + 1;
    double rel = (formula - direct).block(lo, lo, n, n).norm() /
                 direct.block(lo, lo, n, n).norm();

    Vec vs, ws;
    compute_v_w(straight_path(0.0, std::polar(1.0, 0.3)), 256, 1.0, vs, ws);
    double wmax = ws.lpNorm<Eigen::Infinity>();

    bool ok = line0.p2_defect < 1e-6 && line90.p2_defect < 1e-6 &&
              line45.p2_defect > 1e-2 && rel < 1e-3 && wmax == 0.0;
    report(6, ok, "complex-path Hermitization theorem",
           std::max({line0.p2_defect, line90.p2_defect, rel, wmax}), 1e-3);
  }

  // 7: rotated Coulomb model
  {
    double worst = 0.0;
    for (int n = 1; n <= 4; ++n) {
      worst = std::max(worst, schrodinger_residual(n, 1.0,
                                                   CoulombBranch::hermitian,
                                                   0.1, 25.0, 1e-3));
      worst = std::max(worst, schrodinger_residual(
                                  n, 1.0, CoulombBranch::rotated, 0.1, 25.0,
                                  1e-3));
    }
    double sign_map = 0.0;
    for (int n = 1; n <= 5; ++n)
      sign_map = std::max(sign_map,
                          std::abs(coulomb_spectrum_rotated(n, 1.0) +
                                   coulomb_spectrum_hermitian(n, 1.0)));
    bool decay = true;
    for (double r : {10.0, 20.0, 40.0})
      decay = decay && rotated_magnitude_on_ray(1, 1.0, 3.0 * pi / 2.0,
                                                2.0 * r) <
                           rotated_magnitude_on_ray(1, 1.0, 3.0 * pi / 2.0, r);
    bool ok = worst < 1e-6 && sign_map == 0.0 && decay;
    report(7, ok, "Coulomb residuals, spectrum map, anti-Stokes decay",
           std::max(worst, sign_map), 1e-6);
  }

  // 8: asymmetric-hopping chain, open boundaries
  {
    const int L = 128;
    RVec V = random_potential(L, 1.0, 20260823);
    double entrywise = 0.0, spec_dev = 0.0;
    auto m0 = build_lattice(L, 1.0, 0.0, V, false);
    auto e0 = lattice_spectrum(m0);
    double radius = 0.0;
    for (cd e : e0) radius = std::max(radius, std::abs(e));
    for (double g : {0.25, 0.5, 1.0}) {
      auto m = build_lattice(L, 1.0, g, V, false);
      Mat D = Mat::Zero(L, L), Dinv = Mat::Zero(L, L);
      for (int j = 0; j < L; ++j) {
        D(j, j) = std::exp(-g * j);
        Dinv(j, j) = std::exp(g * j);
      }
      Mat conj = D * m.H.cast<cd>() * Dinv;
      entrywise = std::max(
          entrywise, (conj - m0.H.cast<cd>()).lpNorm<Eigen::Infinity>());
      spec_dev = std::max(
          spec_dev, spectral_distance(e0, lattice_spectrum(m)) / radius);
    }
    std::vector<double> grid;
    for (int i = 0; i <= 20; ++i) grid.push_back(0.05 * i);
    auto scan = critical_g_scan(V, false, grid);
    bool ok = entrywise < 1e-13 && spec_dev < 1e-8 && scan.infinite;
    report(8, ok, "open-chain gauge identity, g-independence, g_c = inf",
           std::max(entrywise, spec_dev), 1e-8);
  }

  // 9: asymmetric-hopping chain, periodic boundaries
  {
    const int L = 32;
    const double g = 0.5;
    auto clean = build_lattice(L, 1.0, g, RVec::Zero(L), true);
    std::vector<cd> expect(L);
    for (int n = 0; n < L; ++n)
      expect[n] = 2.0 - 2.0 * std::cosh(cd(g, -2.0 * pi * n / L));
    double ellipse = spectral_distance(lattice_spectrum(clean), expect);

    RVec V = random_potential(L, 1.0, 20260823);
    std::vector<double> grid;
    for (int i = 0; i <= 20; ++i) grid.push_back(0.05 * i);
    auto scan = critical_g_scan(V, true, grid);

    auto pd = pairing_defect(L, 1.0, 0.4, V, true);

    auto mb = build_lattice(L, 1.0, 0.1, V, true);
    auto sys = biorthogonal_eigensystem(mb.H.cast<cd>());
    double dens = 0.0;
    for (int n = 0; n < L; ++n)
      dens = std::max(dens,
                      std::abs(density_profile(sys, n).sum() - cd(1.0)));

    bool ok = ellipse < 1e-10 && !scan.infinite && scan.g_c > 0.0 &&
              pd.cross < 1e-10 && pd.closure < 1e-10 && dens < 1e-10;
    report(9, ok, "periodic ellipse, finite g_c, pairing, densities",
           std::max({ellipse, pd.cross, pd.closure, dens}), 1e-10);
  }

  // 10: antilinear-symmetry suite
  {
    auto theta2 = lattice_reflection(2);
    Mat unbroken(2, 2), broken(2, 2);
    unbroken << cd(0.0, 0.5), cd(1.0), cd(1.0), cd(0.0, -0.5);
    broken << cd(0.0, 2.0), cd(1.0), cd(1.0), cd(0.0, -2.0);
    auto ru = spectrum_pair_analysis(unbroken, theta2);
    auto rb = spectrum_pair_analysis(broken, theta2);
    double dev = 0.0;
    for (auto& m : ru.modes)
      dev = std::max(dev, std::abs(std::abs(m.eigenvalue) -
                                   std::sqrt(0.75)));
    for (auto& m : rb.modes)
      dev = std::max(dev,
                     std::min(std::abs(m.eigenvalue - kI * std::sqrt(3.0)),
                              std::abs(m.eigenvalue + kI * std::sqrt(3.0))));
    double closure = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
      Mat h = random_pt_symmetric(16, 1000 + trial);
      auto r = spectrum_pair_analysis(h, lattice_reflection(16));
      closure = std::max(closure, r.closure_defect);
    }
    bool ok = dev < 1e-10 && closure < 1e-9 && ru.unbroken_count == 2 &&
              rb.broken_count == 2;
    report(10, ok, "2x2 examples and random pairing theorem",
           std::max(dev, closure), 1e-9);
  }

  // 11: weighted-space core properties
  {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> uni(-1.0, 1.0), pos(0.1, 4.0);
    const int N = 12;
    auto rand_mat = [&] {
      Mat m(N, N);
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) m(i, j) = cd(uni(rng), uni(rng));
      return m;
    };
    auto rand_weights = [&] {
      RVec g(N);
      for (int i = 0; i < N; ++i) g[i] = pos(rng);
      return g;
    };
    double invol = 0.0, resc = 0.0, diag = 0.0;
    for (int t = 0; t < 10; ++t) {
      auto S = build_weighted_space(N, rand_weights(), 0);
      auto A = make_op(rand_mat());
      invol = std::max(invol,
                       (adjoint_in_space(adjoint_in_space(A, S), S).m - A.m)
                           .lpNorm<Eigen::Infinity>());
      auto B = rescale_basis(A, rand_weights(), rand_weights());
      resc = std::max(resc, spectral_distance(spectrum(A.m), spectrum(B.m)));
    }
    for (int t = 0; t < 20; ++t) {
      Mat h = Mat::Zero(N, N);
      for (int i = 0; i < N; ++i) h(i, i) = uni(rng);
      diag = std::max(diag, hermiticity_defect(
                                make_op(h),
                                build_weighted_space(N, rand_weights(), 0),
                                false));
    }
    bool ok = invol < 1e-14 && resc < 1e-12 && diag == 0.0;
    report(11, ok, "adjoint involution, rescale invariance, Hermitization",
           std::max({invol, resc, diag}), 1e-12);
  }

  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  std::printf("%d of 11 criteria passed in %.1f s\n", 11 - failures, secs);
  return failures;
}
