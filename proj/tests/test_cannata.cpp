#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "nhqm/cannata.hpp"

using namespace nhqm;
using std::numbers::pi;

TEST_CASE("generator matrix entries") {
  auto alg = build_cannata(32);
  // column 0
  CHECK(std::abs(alg.Mexp(0, 0) - cd(0.0, 1.0)) < 1e-15);
  CHECK(std::abs(alg.Mexp(1, 0) - cd(1.0 / std::sqrt(3.0))) < 1e-15);
  CHECK(std::abs(alg.Mexp(2, 0)) == 0.0);
  CHECK(std::abs(alg.Mexpp(0, 0) - cd(0.0, 0.5)) < 1e-15);
  CHECK(std::abs(alg.Mexpp(1, 0) + cd(0.5 / std::sqrt(3.0))) < 1e-15);
  // column 1: rows 0 and 2 carry 1/(2 sqrt((n+1/2)(n -/+ 1/2 resp. +3/2)))
  CHECK(std::abs(alg.Mexp(0, 1) - cd(0.5 / std::sqrt(0.75))) < 1e-15);
  CHECK(std::abs(alg.Mexp(2, 1) - cd(0.5 / std::sqrt(3.75))) < 1e-15);
  CHECK(std::abs(alg.Mexp(1, 1)) == 0.0);
  // bandwidth one off-diagonal
  for (int j = 0; j < 32; ++j)
    for (int k = 0; k < 32; ++k)
      if (std::abs(j - k) > 1) CHECK(std::abs(alg.Mexp(j, k)) == 0.0);
  CHECK_THROWS_AS(build_cannata(4), std::invalid_argument);
}

TEST_CASE("canonical momentum is Hermitian and bounded columnwise") {
  auto alg = build_cannata(64);
  CHECK((alg.Pc - alg.Pc.adjoint()).lpNorm<Eigen::Infinity>() < 1e-15);
  CHECK(std::abs(alg.Pc(0, 1) - cd(0.0, -1.0 / std::sqrt(3.0))) < 1e-15);
  CHECK(std::abs(alg.Pc(2, 1) - cd(0.0, 2.0 / std::sqrt(15.0))) < 1e-15);
  // the largest column image has norm sqrt(3/5), attained at mode 1
  double col_max = 0.0;
  int argmax = -1;
  for (int n = 0; n < 60; ++n) {
    Vec e = Vec::Zero(64);
    e[n] = 1;
    double nv = (alg.Pc * e).norm();
    if (nv > col_max) {
      col_max = nv;
      argmax = n;
    }
  }
  CHECK(col_max == doctest::Approx(std::sqrt(0.6)).epsilon(1e-12));
  CHECK(argmax == 1);
}

TEST_CASE("operator norm of the momentum approaches one from below") {
  double n32 = momentum_norm(32), n64 = momentum_norm(64),
         n128 = momentum_norm(128);
  CHECK(n32 < n64);
  CHECK(n64 < n128);
  CHECK(n128 < 1.0);
  CHECK(n128 > 0.999);
  // so no truncation stays below the columnwise bound sqrt(3/5)
  CHECK(n32 > std::sqrt(0.6));
}

TEST_CASE("xi vectors and the truncated position inverse") {
  auto alg = build_cannata(64);
  Vec x = alg.xi(3);
  CHECK(std::abs(x[2] - cd(1.0 / std::sqrt(2.5))) < 1e-15);
  CHECK(std::abs(x[4] - cd(1.0 / std::sqrt(4.5))) < 1e-15);
  CHECK(std::abs(x[3]) == 0.0);
  // Xc xi_1 = 2 sqrt(3/2) psi_1
  Vec y = alg.apply_xc(Vec(alg.xi(1)));
  CHECK(std::abs(y[1] - cd(2.0 * std::sqrt(1.5))) < 1e-12);
  y[1] = 0.0;
  CHECK(y.norm() < 1e-12);
}

TEST_CASE("xi partial sums telescope") {
  auto alg = build_cannata(64);
  for (int K : {0, 3, 7}) {
    auto ps = xi_partial_sum(alg, 1, K);
    CHECK((ps.f - ps.closed).norm() < 1e-13);
    CHECK(ps.remainder ==
          doctest::Approx(1.0 / std::sqrt(1 + 2.0 * (K + 1) + 0.5)));
  }
  CHECK_THROWS_AS(xi_partial_sum(alg, 1, 40), std::invalid_argument);
}

TEST_CASE("inner bracket maps psi_n to a xi multiple") {
  auto alg = build_cannata(64);
  for (int n = 1; n <= 10; ++n) CHECK(inner_bracket_defect(alg, n) < 1e-12);
}

TEST_CASE("canonical Hamiltonian is diagonal with E_n = (n+1/2)^2/2") {
  auto alg = build_cannata(64);
  Mat Hg = canonical_hamiltonian(alg, HamiltonianForm::grouped);
  Vec e0 = Vec::Zero(64), e3 = Vec::Zero(64);
  e0[0] = 1;
  e3[3] = 1;
  CHECK((Hg * e0 - 0.125 * e0).norm() < 1e-10);
  CHECK((Hg * e3 - 6.125 * e3).norm() < 1e-9);
  double worst = 0.0;
  for (int n = 0; n <= alg.bulk_end(); ++n) {
    Vec e = Vec::Zero(64);
    e[n] = 1;
    double E = (n + 0.5) * (n + 0.5) / 2.0;
    worst = std::max(worst, (Hg * e - E * e).norm() / E);
  }
  CHECK(worst < 1e-10);
  // the rearranged polynomial form is strictly less accurate
  Mat Hn = canonical_hamiltonian(alg, HamiltonianForm::naive);
  double worst_naive = 0.0;
  for (int n = 0; n <= alg.bulk_end(); ++n) {
    Vec e = Vec::Zero(64);
    e[n] = 1;
    double E = (n + 0.5) * (n + 0.5) / 2.0;
    worst_naive = std::max(worst_naive, (Hn * e - E * e).norm() / E);
  }
  CHECK(worst_naive > worst);
}

TEST_CASE("divergence witness") {
  auto w = divergence_witness(1, {32, 64, 128, 256});
  CHECK(w.strictly_increasing);
  CHECK(w.super_constant);
  // |Xc psi_1| roughly doubles with N: unbounded in the truncation
  CHECK(w.xc_psi_norms.back() / w.xc_psi_norms.front() > 6.0);
  // yet on the xi domain the inverse relations are exact
  CHECK(w.xc_mexp_xi2_defect < 1e-13);
  CHECK(w.mexp_xc_defect < 1e-13);
  // term-by-term application to the series for exp(-ix) xi_1 grows linearly
  const auto& p = w.series_partial_norms;
  CHECK(p.size() > 20);
  CHECK(p.back() > p.front() * 10.0);
  double inc1 = p[6] - p[5], inc2 = p[p.size() - 1] - p[p.size() - 2];
  CHECK(inc2 == doctest::Approx(inc1).epsilon(0.05));  // linear growth
}

TEST_CASE("tilde pair: weighted Hermiticity and weak-form commutators") {
  auto t = tilde_canonical_pair(64);
  CHECK(t.herm_pt < 1e-12);
  CHECK(t.herm_xt < 1e-10);
  CHECK(t.comm_defect < 1e-12);
  CHECK(t.comm_zero_defect < 1e-12);
  CHECK(std::abs(t.pt(0, 0) - cd(-0.5, 0.0)) < 1e-15);  // i * (i/2)
}

TEST_CASE("gauge-shifted momentum keeps the commutator") {
  auto alg = build_cannata(128);
  auto g = gauge_shift_check(alg);
  CHECK(g.comm_defect < 1e-6);
  CHECK(std::isfinite(g.pi_norm));
  CHECK(std::isfinite(g.xb_norm));
  CHECK(g.xb_norm > 1.0);
}

TEST_CASE("position realization") {
  CHECK(position_wavefunction(0, pi / 2) ==
        doctest::Approx(std::sqrt(1.0 / pi) * 2.0 / pi));
  CHECK(std::abs(position_wavefunction(0, pi)) < 1e-12);
  CHECK(position_wavefunction(1, 1.0) ==
        doctest::Approx(std::sqrt(3.0 / pi) *
                        (std::sin(1.0) - std::cos(1.0))));
}

TEST_CASE("overlap closed form") {
  CHECK(std::abs(overlap_closed_form(0.0, 0.0) - cd(2.0)) < 1e-14);
  CHECK(std::abs(overlap_closed_form(0.0, 1.0)) < 1e-14);
  CHECK(std::abs(overlap_closed_form(0.0, 2.0)) < 1e-14);
  // equal imaginary orders: (1 + e^{-2 pi}) sinh(pi)/pi
  const double expect =
      (1.0 + std::exp(-2.0 * pi)) * std::sinh(pi) / pi;
  CHECK(std::abs(overlap_closed_form(cd(0, 1), cd(0, 1)) - cd(expect)) <
        1e-12);
  CHECK(norm_phi_squared(cd(0.3)) == doctest::Approx(1.25));
  CHECK(norm_phi_squared(cd(0, 1)) == doctest::Approx(expect));
  CHECK_THROWS_AS(overlap_closed_form(cd(-0.9), cd(-0.9)),
                  std::invalid_argument);
}

TEST_CASE("overlap quadrature agrees with the closed form") {
  {
    cd q = overlap_quadrature(0.3, 0.7, 1e4);
    cd c = overlap_closed_form(0.3, 0.7);
    CHECK(std::abs(q - c) < 1e-4 * std::abs(c));
  }
  {
    cd q = overlap_quadrature(cd(0, 1), cd(0, 1), 4e4);
    cd c = overlap_closed_form(cd(0, 1), cd(0, 1));
    CHECK(std::abs(q - c) < 1e-4 * std::abs(c));
  }
}
