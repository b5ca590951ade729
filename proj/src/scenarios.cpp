#include "nhqm/scenarios.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "nhqm/bessel.hpp"
#include "nhqm/cannata.hpp"
#include "nhqm/coulomb.hpp"
#include "nhqm/hatano.hpp"
#include "nhqm/path.hpp"
#include "nhqm/pt.hpp"

namespace nhqm {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cd kI{0.0, 1.0};

double get_num(const nlohmann::json& cfg, const std::string& key,
               double fallback) {
  return cfg.contains(key) ? cfg[key].get<double>() : fallback;
}
int get_int(const nlohmann::json& cfg, const std::string& key, int fallback) {
  return cfg.contains(key) ? cfg[key].get<int>() : fallback;
}

void core_suite(VerificationReport& rep, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::uniform_real_distribution<double> pos(0.1, 4.0);
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

  double worst = 0.0;
  for (int rep_i = 0; rep_i < 10; ++rep_i) {
    auto S = build_weighted_space(N, rand_weights(), 0);
    auto A = make_op(rand_mat());
    auto AA = adjoint_in_space(adjoint_in_space(A, S), S);
    worst = std::max(worst, (AA.m - A.m).lpNorm<Eigen::Infinity>());
  }
  rep.add("adjoint_involution", "eq:2c", worst, 1e-14);

  worst = 0.0;
  for (int rep_i = 0; rep_i < 5; ++rep_i) {
    auto A = make_op(rand_mat());
    auto B = rescale_basis(A, rand_weights(), rand_weights());
    worst = std::max(worst, spectral_distance(spectrum(A.m), spectrum(B.m)));
  }
  rep.add("rescale_spectrum_invariance", "eq:2r", worst, 1e-12);

  worst = 0.0;
  for (int rep_i = 0; rep_i < 20; ++rep_i) {
    Mat h = Mat::Zero(N, N);
    for (int i = 0; i < N; ++i) h(i, i) = uni(rng);
    auto S = build_weighted_space(N, rand_weights(), 0);
    worst = std::max(worst, hermiticity_defect(make_op(h), S, false));
  }
  rep.add("diagonal_hermitization_any_weights", "eq:2q", worst, 0.0);

  auto A = make_op(rand_mat()), B = make_op(rand_mat());
  auto C1 = commutator(A, B), C2 = commutator(B, A);
  rep.add("commutator_antisymmetry", "eq:2o",
          (C1.m + C2.m).lpNorm<Eigen::Infinity>(), 0.0);
}

void path_suite(VerificationReport& rep) {
  // straight line: v constant phase, w identically zero
  {
    Vec v, w;
    compute_v_w(straight_path(cd(0.3, 0.1), cd(0.0, 2.0)), 256, 1.0, v, w);
    double vdef = 0.0;
    for (int j = 0; j < v.size(); ++j)
      vdef = std::max(vdef, std::abs(v[j] - cd(-1.0, 0.0)));
    rep.add("straight_v_constant_phase", "eq:2d", vdef, 1e-14);
    rep.add("straight_w_zero", "eq:2e", w.lpNorm<Eigen::Infinity>(), 0.0);
  }
  // curvature condition dv/ds = (conj(w) - v w) z' on a smooth curve
  {
    const double eps = 0.02;
    const int M = 1024;
    auto path = sample_path([&](double s) { return cd(s, eps * s * s); },
                            [&](double s) { return cd(1.0, 2.0 * eps * s); },
                            [&](double) { return cd(0.0, 2.0 * eps); }, 1.0, M);
    Vec v, w;
    compute_v_w(path, M, 1.0, v, w);
    const double h = 2.0 / (M - 1);
    double defect = 0.0;
    for (int j = 4; j < M - 4; ++j) {
      cd dv = (v[j + 1] - v[j - 1]) / (2.0 * h);
      cd rhs = (std::conj(w[j]) - v[j] * w[j]) * path.zp_at(-1.0 + j * h);
      defect = std::max(defect, std::abs(dv - rhs));
    }
    rep.add("curvature_condition", "eq:2f", defect, 1e-8);
  }
  // adjoint-squared formula vs the direct matrix adjoint
  {
    const double eps = 0.02;
    const int M = 512;
    auto path = sample_path([&](double s) { return cd(s, eps * s * s); },
                            [&](double s) { return cd(1.0, 2.0 * eps * s); },
                            [&](double) { return cd(0.0, 2.0 * eps); }, 1.0, M);
    auto grid = build_path_rep(path, M, 1.0);
    Vec v, w;
    compute_v_w(path, M, 1.0, v, w);
    Mat formula = adjoint_p_squared_via_formula(grid, v, w);
    Mat padj = grid_adjoint(grid, grid.PH);
    Mat direct = padj * padj;
    const int lo = grid.interior_lo, n = grid.interior_hi - lo + 1;
    double rel = (formula - direct).block(lo, lo, n, n).norm() /
                 direct.block(lo, lo, n, n).norm();
    rep.add("adjoint_squared_formula", "eq:2g", rel, 1e-3);
  }
  // straight-line Hermitization classifier
  {
    auto real_line = straight_line_hermiticity_check(0.0, 1.0, 1024);
    auto imag_line = straight_line_hermiticity_check(0.0, kI, 1024);
    auto diag_line =
        straight_line_hermiticity_check(0.0, std::exp(kI * (kPi / 4.0)), 512);
    rep.add("real_line_p2_defect", "eq:2h", real_line.p2_defect, 1e-6);
    rep.add("imag_line_p2_defect", "eq:2h", imag_line.p2_defect, 1e-6);
    rep.add_bool("diagonal_line_rejected", "eq:2h",
                 format_shortest(diag_line.p2_defect),
                 !diag_line.hermitizing && diag_line.p2_defect > 1e-2);
  }
}

void coulomb_suite(VerificationReport& rep) {
  double worst_h = 0.0, worst_r = 0.0;
  for (int n = 1; n <= 4; ++n) {
    worst_h = std::max(worst_h,
                       schrodinger_residual(n, 1.0, CoulombBranch::hermitian,
                                            0.1, 20.0, 1e-3));
    worst_r = std::max(worst_r,
                       schrodinger_residual(n, 1.0, CoulombBranch::rotated,
                                            0.1, 20.0, 1e-3));
  }
  rep.add("residual_hermitian_branch", "eq:3s", worst_h, 1e-6);
  rep.add("residual_rotated_branch", "eq:3b", worst_r, 1e-6);

  auto eq = canonical_equivalence_report(1, 1.0);
  rep.add("canonical_form_residual", "eq:3j", eq.residual, 1e-6);
  double spec_map = 0.0;
  for (size_t i = 0; i < eq.rotated_spectrum.size(); ++i)
    spec_map = std::max(spec_map, std::abs(eq.rotated_spectrum[i] -
                                           eq.minus_hermitian_spectrum[i]));
  rep.add("spectrum_sign_map", "eq:3l", spec_map, 0.0);

  bool anti_stokes = true;
  for (double r : {10.0, 20.0, 40.0}) {
    double down = rotated_magnitude_on_ray(1, 1.0, 3.0 * kPi / 2.0, r);
    double down2 = rotated_magnitude_on_ray(1, 1.0, 3.0 * kPi / 2.0, 2.0 * r);
    double up = rotated_magnitude_on_ray(1, 1.0, kPi / 2.0, r);
    double up2 = rotated_magnitude_on_ray(1, 1.0, kPi / 2.0, 2.0 * r);
    if (!(down2 < down && up2 > up)) anti_stokes = false;
  }
  rep.add_bool("anti_stokes_decay", "eq:3m", "decay at 3pi/2, growth at pi/2",
               anti_stokes);

  double ortho = 0.0;
  for (int n = 1; n <= 3; ++n)
    for (int m = n + 1; m <= 4; ++m)
      ortho = std::max(ortho, std::abs(coulomb_overlap(n, m, 1.0, 300.0)));
  const double norm1 = coulomb_overlap(1, 1, 1.0, 300.0);
  rep.add("eigenfunction_orthogonality", "eq:3s", ortho / norm1, 1e-8);
}

void cannata_suite(VerificationReport& rep, int N) {
  auto alg = build_cannata(N);
  auto H = canonical_hamiltonian(alg, HamiltonianForm::grouped);
  double worst = 0.0;
  for (int n = 0; n <= std::min(64, alg.bulk_end()); ++n) {
    const double lam = 0.5 * (n + 0.5) * (n + 0.5);
    Vec e = Vec::Zero(N);
    e[n] = 1.0;
    worst = std::max(worst, (H * e - lam * e).norm() / lam);
  }
  rep.add("grouped_hamiltonian_spectrum", "eq:3n", worst, 1e-8);

  auto ortho = orthonormal_space(N, default_bulk_buffer(N));
  rep.add("momentum_hermiticity", "eq:3h",
          hermiticity_defect(make_op(alg.Pc), ortho, true), 1e-10);

  double xc_xi = 0.0, comm = 0.0;
  for (int n = 1; n <= alg.bulk_end(); ++n) {
    Vec x = alg.xi(n);
    Vec lhs = alg.apply_xc(Vec(alg.Pc * x)) - alg.Pc * alg.apply_xc(x);
    comm = std::max(comm, (lhs - kI * x).head(alg.bulk_end() + 1)
                              .lpNorm<Eigen::Infinity>());
  }
  rep.add("canonical_commutator_on_xi", "eq:3i", comm, 1e-8);
  // Hermiticity of Xc as a form on xi columns: (xi_n, Xc xi_m) is the
  // real symmetric band 2(delta_{n,m+1} + delta_{n+1,m})
  {
    Mat XS = alg.apply_xc(Mat(alg.S));
    Mat form = alg.S.adjoint() * XS;
    const int nb = alg.bulk_end();
    for (int n = 1; n <= nb; ++n)
      for (int m = 1; m <= nb; ++m) {
        double expect = (std::abs(n - m) == 1) ? 2.0 : 0.0;
        xc_xi = std::max(xc_xi, std::abs(form(n - 1, m - 1) - expect));
      }
  }
  rep.add("position_form_on_xi", "eq:3an", xc_xi, 1e-10);

  const double bound = std::sqrt(3.0 / 5.0) + 1e-9;
  rep.add("momentum_norm_bound", "eq:3h", momentum_norm(alg), bound);

  auto tilde = tilde_canonical_pair(std::min(N, 128));
  rep.add("tilde_momentum_hermiticity", "eq:3f", tilde.herm_pt, 1e-12);
  rep.add("tilde_commutator_weak_form", "eq:3f", tilde.comm_defect, 1e-8);
  rep.add("tilde_prime_commutes", "eq:3f", tilde.comm_zero_defect, 1e-8);

  double comp = 0.0;
  for (double x : {0.5, 1.0, 2.0, 5.0})
    comp = std::max(comp, std::abs(completeness_diagonal(
                              x, static_cast<int>(std::ceil(x)) + 60) -
                          1.0 / kPi));
  rep.add("completeness_diagonal_deficit", "eq:3p", comp, 1e-10);

  rep.add("overlap_norm_mode0", "eq:3q",
          std::abs(0.5 * norm_phi_squared(cd(0.0)) - 1.0), 1e-12);
}

void hatano_scan(VerificationReport& rep, const nlohmann::json& cfg,
                 std::uint64_t seed, const std::filesystem::path& out_dir) {
  const int L = get_int(cfg, "L_s", 64);
  const double W = get_num(cfg, "W", 1.0);
  const bool periodic = cfg.contains("bc") && cfg["bc"] == "periodic";
  RVec V = random_potential(L, W, seed);
  std::vector<double> g_grid;
  const double g_max = get_num(cfg, "g_max", 1.0);
  const int g_steps = get_int(cfg, "g_steps", 21);
  for (int i = 0; i < g_steps; ++i)
    g_grid.push_back(g_max * i / (g_steps - 1.0));

  auto scan = critical_g_scan(V, periodic, g_grid);
  if (periodic)
    rep.add_bool("finite_critical_g", "eq:3ag", format_shortest(scan.g_c),
                 !scan.infinite && scan.g_c > 0.0);
  else
    rep.add_bool("critical_g_infinite", "eq:3ag", "inf", scan.infinite);

  auto pd = pairing_defect(L, 1.0, 0.5, V, periodic);
  rep.add("spectrum_pairing", "eq:3x", pd.cross, 1e-10);
  rep.add("conjugation_closure", "eq:3x", pd.closure, 1e-10);

  auto model = build_lattice(L, 1.0, periodic ? 0.1 : 0.5, V, periodic);
  auto sys = periodic ? biorthogonal_eigensystem(model.H.cast<cd>())
                      : biorthogonal_eigensystem_gauge(model);
  rep.add("biorthogonality", "eq:3w", biorthogonality_defect(sys), 1e-10);
  double dens = 0.0;
  for (int n = 0; n < L; ++n) {
    if (sys.exceptional[n]) continue;
    dens = std::max(dens, std::abs(density_profile(sys, n).sum() - 1.0));
  }
  rep.add("density_normalization", "eq:3w", dens, 1e-10);

  if (!periodic) {
    auto gauge = imaginary_gauge_check(L, 1.0, 0.5, V);
    rep.add("gauge_similarity_entrywise", "eq:3ah", gauge.entrywise, 1e-13);
    rep.add("gauge_spectral_identity", "eq:3ah", gauge.spectral, 1e-8);
  }

  std::vector<SpectrumRow> rows;
  for (double g : {0.0, 0.5, g_max}) {
    auto sp = lattice_spectrum(build_lattice(L, 1.0, g, V, periodic));
    for (int i = 0; i < static_cast<int>(sp.size()); ++i)
      rows.push_back({g, i, sp[i]});
  }
  write_spectra_csv(rows, (out_dir / "spectra.csv").string());
}

void pt_suite(VerificationReport& rep, std::uint64_t seed) {
  auto theta2 = build_pt_operator({1, 0});
  Mat unbroken(2, 2), broken(2, 2);
  unbroken << cd(0.0, 0.5), 1.0, 1.0, cd(0.0, -0.5);
  broken << cd(0.0, 2.0), 1.0, 1.0, cd(0.0, -2.0);
  rep.add("unbroken_example_pt_defect", "eq:ba", pt_defect(unbroken, theta2),
          0.0);
  auto ru = spectrum_pair_analysis(unbroken, theta2);
  double ev = 0.0;
  for (auto& m : ru.modes)
    ev = std::max(ev, std::min(std::abs(m.eigenvalue - std::sqrt(0.75)),
                               std::abs(m.eigenvalue + std::sqrt(0.75))));
  rep.add("unbroken_eigenvalues", "eq:ba", ev, 1e-10);
  rep.add_bool("unbroken_classification", "eq:ba",
               std::to_string(ru.unbroken_count) + " unbroken",
               ru.unbroken_count == 2);

  auto rb = spectrum_pair_analysis(broken, theta2);
  double evb = 0.0;
  for (auto& m : rb.modes)
    evb = std::max(evb,
                   std::min(std::abs(m.eigenvalue - kI * std::sqrt(3.0)),
                            std::abs(m.eigenvalue + kI * std::sqrt(3.0))));
  rep.add("broken_eigenvalues", "eq:ba", evb, 1e-10);
  rep.add_bool("pt_does_not_imply_real", "eq:ba", "broken pair present",
               rb.broken_count == 2);

  double closure = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    Mat h = random_pt_symmetric(16, seed + trial);
    auto r = spectrum_pair_analysis(h, lattice_reflection(16));
    closure = std::max(closure, r.closure_defect);
  }
  rep.add("random_pt_closure", "eq:ba", closure, 1e-9);
}

}  // namespace

std::vector<std::string> scenario_names() {
  return {"core_suite",   "path_suite", "coulomb_suite",
          "cannata_suite", "hatano_scan", "pt_suite"};
}

VerificationReport run_scenario(const nlohmann::json& config,
                                const std::filesystem::path& out_dir,
                                std::optional<std::uint64_t> seed_override) {
  if (!config.contains("scenario") || !config["scenario"].is_string())
    throw std::invalid_argument("config missing scenario name");
  const std::string name = config["scenario"].get<std::string>();
  VerificationReport rep;
  rep.scenario = name;
  rep.params = config;
  std::optional<std::uint64_t> seed;
  if (seed_override)
    seed = seed_override;
  else if (config.contains("seed"))
    seed = config["seed"].get<std::uint64_t>();
  rep.seed = seed;

  const bool randomized =
      name == "core_suite" || name == "hatano_scan" || name == "pt_suite";
  if (randomized && !seed)
    throw std::invalid_argument("randomized scenario requires a seed");

  if (name == "core_suite") {
    core_suite(rep, *seed);
  } else if (name == "path_suite") {
    path_suite(rep);
  } else if (name == "coulomb_suite") {
    coulomb_suite(rep);
  } else if (name == "cannata_suite") {
    cannata_suite(rep, get_int(config, "N", 256));
  } else if (name == "hatano_scan") {
    hatano_scan(rep, config, *seed, out_dir);
  } else if (name == "pt_suite") {
    pt_suite(rep, *seed);
  } else {
    throw std::invalid_argument("unknown scenario: " + name);
  }
  return rep;
}

}  // namespace nhqm
