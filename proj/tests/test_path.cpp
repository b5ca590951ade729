#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "nhqm/path.hpp"

using namespace nhqm;
using std::numbers::pi;

namespace {
PathSpec parabola(double eps, double L, int M) {
  return sample_path([&](double s) { return cd(s, eps * s * s); },
                     [&](double s) { return cd(1.0, 2.0 * eps * s); },
                     [&](double) { return cd(0.0, 2.0 * eps); }, L, M);
}
}  // namespace

TEST_CASE("path construction and rejection") {
  CHECK_THROWS_AS(straight_path(cd(1.0), cd(0.0)), std::invalid_argument);
  CHECK_THROWS_AS(build_path_rep(straight_path(cd(0.0), cd(1.0)), 32, 1.0),
                  std::invalid_argument);
  // z' = 0 at a node is degenerate
  CHECK_THROWS_AS(sampled_path({0.0, 1.0}, {cd(0.0), cd(1.0)},
                               {cd(1.0), cd(0.0)}, {cd(0.0), cd(0.0)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(sampled_path({0.0, 1.0}, {cd(0.0)}, {cd(1.0), cd(1.0)},
                               {cd(0.0), cd(0.0)}),
                  std::invalid_argument);
}

TEST_CASE("grid representation on the imaginary axis") {
  auto rep = build_path_rep(straight_path(cd(0.0), cd(0.0, 1.0)), 128, 1.0);
  // x_H = i xc, p_H = -i pc
  CHECK((rep.XH - cd(0.0, 1.0) * rep.Xc).lpNorm<Eigen::Infinity>() < 1e-15);
  CHECK((rep.PH - cd(0.0, -1.0) * rep.Pc).lpNorm<Eigen::Infinity>() < 1e-14);
  CHECK(rep.interior_lo == 4);
  CHECK(rep.interior_hi == 123);
  double wsum = rep.quad_weights.sum();
  CHECK(wsum == doctest::Approx(2.0));
}

TEST_CASE("momentum stencil differentiates plane waves to second order") {
  auto rep = build_path_rep(straight_path(cd(0.0), cd(1.0)), 512, 1.0);
  const double k = 3.0;
  Vec f(rep.M()), g(rep.M());
  for (int j = 0; j < rep.M(); ++j) {
    f[j] = std::exp(cd(0.0, k * rep.s_grid[j]));
    g[j] = k * f[j];
  }
  Vec pf = rep.Pc * f;
  double err = 0.0;
  for (int j = rep.interior_lo; j <= rep.interior_hi; ++j)
    err = std::max(err, std::abs(pf[j] - g[j]));
  CHECK(err < 1e-4);
  CHECK(err > 1e-7);  // finite, O(h^2), not spectral
}

TEST_CASE("v and w along a parabolic deformation") {
  const double eps = 0.1;
  const int M = 65;
  auto p = parabola(eps, 1.0, M);
  Vec v, w;
  compute_v_w(p, M, 1.0, v, w);
  const int mid = (M - 1) / 2;  // s = 0
  CHECK(std::abs(v[mid] - cd(1.0)) < 1e-14);
  CHECK(std::abs(w[mid] - cd(0.0, -2.0 * eps)) < 1e-14);
  for (int j = 0; j < M; ++j) CHECK(std::abs(v[j]) == doctest::Approx(1.0));
  // straight line: v constant, w = 0
  Vec vs, ws;
  compute_v_w(straight_path(cd(0.0), std::polar(1.0, 0.3)), M, 1.0, vs, ws);
  for (int j = 0; j < M; ++j) {
    CHECK(std::abs(vs[j] - std::exp(cd(0.0, 0.6))) < 1e-14);
    CHECK(std::abs(ws[j]) == 0.0);
  }
}

TEST_CASE("adjoint of p_H squared matches its closed form") {
  auto rel_defect = [](const PathSpec& path, int M) {
    auto rep = build_path_rep(path, M, 1.0);
    Vec v, w;
    compute_v_w(path, M, 1.0, v, w);
    Mat formula = adjoint_p_squared_via_formula(rep, v, w);
    Mat padj = grid_adjoint(rep, rep.PH);
    Mat direct = padj * padj;
    const int lo = rep.interior_lo, n = rep.interior_hi - lo + 1;
    return (formula - direct).block(lo, lo, n, n).norm() /
           direct.block(lo, lo, n, n).norm();
  };
  SUBCASE("straight line") {
    CHECK(rel_defect(straight_path(cd(0.0), std::polar(1.0, 0.3)), 512) <
          1e-10);
  }
  SUBCASE("gentle parabola") {
    CHECK(rel_defect(parabola(0.02, 1.0, 512), 512) < 1e-3);
  }
}

TEST_CASE("grid adjoint is an involution and reproduces the defect") {
  auto rep = build_path_rep(straight_path(cd(0.0), cd(1.0)), 128, 1.0);
  Mat A = rep.PH * rep.PH + rep.XH;
  Mat back = grid_adjoint(rep, grid_adjoint(rep, A));
  CHECK((back - A).lpNorm<Eigen::Infinity>() < 1e-12);
  // defect of A equals max interior deviation from its own adjoint, scaled
  // by the quadrature weight
  Mat adj = grid_adjoint(rep, A);
  double d = 0.0;
  for (int j = rep.interior_lo; j <= rep.interior_hi; ++j)
    for (int k = rep.interior_lo; k <= rep.interior_hi; ++k)
      d = std::max(d, std::abs(rep.quad_weights[j]) *
                          std::abs(A(j, k) - adj(j, k)));
  CHECK(grid_hermiticity_defect(rep, A) == doctest::Approx(d).epsilon(1e-12));
}

TEST_CASE("line classifier: multiples of pi/2 hermitize p squared") {
  auto vert = straight_line_hermiticity_check(cd(0.0), cd(0.0, 1.0), 1024);
  CHECK(vert.hermitizing);
  CHECK(vert.angle_mod < 1e-15);
  CHECK(vert.p2_defect < 1e-6);

  auto neg = straight_line_hermiticity_check(cd(0.5), cd(-3.0), 1024);
  CHECK(neg.hermitizing);
  CHECK(neg.p2_defect < 1e-6);

  auto diag = straight_line_hermiticity_check(cd(0.0), std::polar(1.0, pi / 4),
                                              1024);
  CHECK_FALSE(diag.hermitizing);
  CHECK(diag.angle_mod == doctest::Approx(pi / 4));
  CHECK(diag.p2_defect > 1e-2);
}

TEST_CASE("translation-dilatation map") {
  auto rep = build_path_rep(straight_path(cd(0.0), cd(1.0)), 128, 1.0);
  auto gauss = [](cd z) { return std::exp(-z * z / 2.0); };

  SUBCASE("real shift keeps a Gaussian normalizable") {
    auto t = apply_translation_dilatation(gauss, cd(1.0), cd(1.0), rep, 10.0);
    CHECK(t.normalizable);
    CHECK(std::abs(t.values[64] - gauss(cd(1.0) + rep.s_grid[64])) < 1e-15);
  }
  SUBCASE("rotation to the imaginary axis destroys normalizability") {
    auto t =
        apply_translation_dilatation(gauss, cd(0.0), cd(0.0, 1.0), rep, 10.0);
    CHECK_FALSE(t.normalizable);
    // |psi(i s)| = e^{s^2/2} grows toward both ends
    CHECK(std::abs(t.values[0]) > std::abs(t.values[64]));
  }
  SUBCASE("samples outside the declared domain are rejected") {
    CHECK_THROWS_AS(
        apply_translation_dilatation(gauss, cd(5.0), cd(1.0), rep, 2.0),
        std::invalid_argument);
  }
}

TEST_CASE("path file round trip") {
  const std::string fn = "test_path_roundtrip.dat";
  {
    std::ofstream out(fn);
    out << "# s  Re z  Im z  Re z'  Im z'  Re z''  Im z''\n";
    const int M = 5;
    for (int j = 0; j < M; ++j) {
      double s = -1.0 + 0.5 * j;
      out << s << " " << s << " " << 0.1 * s * s << " 1 " << 0.2 * s
          << " 0 0.2\n";
    }
  }
  auto p = load_path_file(fn);
  CHECK_FALSE(p.straight);
  CHECK(p.s.size() == 5);
  CHECK(std::abs(p.z_at(0.5) - cd(0.5, 0.025)) < 1e-12);
  CHECK(std::abs(p.zp_at(-1.0) - cd(1.0, -0.2)) < 1e-12);
  CHECK(std::abs(p.zpp_at(0.0) - cd(0.0, 0.2)) < 1e-12);
  CHECK_THROWS_AS(p.z_at(0.3), std::invalid_argument);
  std::remove(fn.c_str());

  CHECK_THROWS_AS(load_path_file("no_such_path_file.dat"), std::runtime_error);
  {
    std::ofstream out(fn);
    out << "1 2 3\n";
  }
  CHECK_THROWS_AS(load_path_file(fn), std::runtime_error);
  std::remove(fn.c_str());
}
