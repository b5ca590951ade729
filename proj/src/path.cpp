#include "nhqm/path.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace nhqm {

namespace {

int sampled_index(const std::vector<double>& s, double t) {
  // sampled paths are only evaluated on their own nodes
  if (s.empty()) throw std::invalid_argument("empty sampled path");
  const double h = s.size() > 1 ? s[1] - s[0] : 1.0;
  const int j = static_cast<int>(std::lround((t - s[0]) / h));
  if (j < 0 || j >= static_cast<int>(s.size()) || std::abs(s[j] - t) > 1e-9 * (1.0 + std::abs(t)))
    throw std::invalid_argument("sampled path evaluated off its grid");
  return j;
}

}  // namespace

cd PathSpec::z_at(double t) const {
  return straight ? a + b * t : z[sampled_index(s, t)];
}
cd PathSpec::zp_at(double t) const {
  return straight ? b : zp[sampled_index(s, t)];
}
cd PathSpec::zpp_at(double t) const {
  return straight ? cd(0.0) : zpp[sampled_index(s, t)];
}

PathSpec straight_path(cd a, cd b) {
  if (b == cd(0.0)) throw std::invalid_argument("degenerate path: b = 0");
  PathSpec p;
  p.straight = true;
  p.a = a;
  p.b = b;
  return p;
}

PathSpec sampled_path(std::vector<double> s, std::vector<cd> z,
                      std::vector<cd> zp, std::vector<cd> zpp) {
  const size_t M = s.size();
  if (M < 2 || z.size() != M || zp.size() != M || zpp.size() != M)
    throw std::invalid_argument("inconsistent sampled path columns");
  for (size_t j = 0; j < M; ++j)
    if (zp[j] == cd(0.0))
      throw std::invalid_argument("degenerate path: z' = 0 at node " +
                                  std::to_string(j));
  PathSpec p;
  p.straight = false;
  p.s = std::move(s);
  p.z = std::move(z);
  p.zp = std::move(zp);
  p.zpp = std::move(zpp);
  return p;
}

PathSpec load_path_file(const std::string& filename) {
  std::ifstream in(filename);
  if (!in) throw std::runtime_error("cannot open path file: " + filename);
  std::vector<double> s;
  std::vector<cd> z, zp, zpp;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    double sv, zr, zi, pr, pi2, qr, qi;
    if (!(ls >> sv >> zr >> zi >> pr >> pi2 >> qr >> qi))
      throw std::runtime_error("malformed path file line: " + line);
    s.push_back(sv);
    z.emplace_back(zr, zi);
    zp.emplace_back(pr, pi2);
    zpp.emplace_back(qr, qi);
  }
  return sampled_path(std::move(s), std::move(z), std::move(zp),
                      std::move(zpp));
}

PathSpec sample_path(const std::function<cd(double)>& z,
                     const std::function<cd(double)>& zp,
                     const std::function<cd(double)>& zpp, double L, int M) {
  std::vector<double> s(M);
  std::vector<cd> zv(M), zpv(M), zppv(M);
  const double h = 2.0 * L / (M - 1);
  for (int j = 0; j < M; ++j) {
    s[j] = -L + j * h;
    zv[j] = z(s[j]);
    zpv[j] = zp(s[j]);
    zppv[j] = zpp(s[j]);
  }
  return sampled_path(std::move(s), std::move(zv), std::move(zpv),
                      std::move(zppv));
}

PathGridRep build_path_rep(const PathSpec& path, int M, double L) {
  if (M < 64) throw std::invalid_argument("grid too coarse: M < 64");
  if (!(L > 0.0)) throw std::invalid_argument("L must be positive");
  PathGridRep rep;
  rep.s_grid.resize(M);
  rep.quad_weights.resize(M);
  const double h = 2.0 * L / (M - 1);
  for (int j = 0; j < M; ++j) {
    rep.s_grid[j] = -L + j * h;
    rep.quad_weights[j] = (j == 0 || j == M - 1) ? 0.5 * h : h;
  }
  rep.zp.resize(M);
  rep.Xc = Mat::Zero(M, M);
  rep.XH = Mat::Zero(M, M);
  for (int j = 0; j < M; ++j) {
    rep.Xc(j, j) = rep.s_grid[j];
    rep.XH(j, j) = path.z_at(rep.s_grid[j]);
    rep.zp[j] = path.zp_at(rep.s_grid[j]);
    if (rep.zp[j] == cd(0.0))
      throw std::invalid_argument("degenerate path: z' = 0 at node " +
                                  std::to_string(j));
  }
  Mat D = Mat::Zero(M, M);
  for (int j = 1; j < M - 1; ++j) {
    D(j, j - 1) = -1.0 / (2.0 * h);
    D(j, j + 1) = 1.0 / (2.0 * h);
  }
  // 2nd-order one-sided stencils at the ends
  D(0, 0) = -1.5 / h;
  D(0, 1) = 2.0 / h;
  D(0, 2) = -0.5 / h;
  D(M - 1, M - 1) = 1.5 / h;
  D(M - 1, M - 2) = -2.0 / h;
  D(M - 1, M - 3) = 0.5 / h;
  rep.Pc = cd(0.0, -1.0) * D;
  rep.PH = Mat::Zero(M, M);
  for (int j = 0; j < M; ++j) rep.PH.row(j) = rep.Pc.row(j) / rep.zp[j];
  rep.interior_lo = 4;
  rep.interior_hi = M - 5;
  return rep;
}

void compute_v_w(const PathSpec& path, int M, double L, Vec& v, Vec& w) {
  v.resize(M);
  w.resize(M);
  const double h = 2.0 * L / (M - 1);
  for (int j = 0; j < M; ++j) {
    const double s = -L + j * h;
    const cd zp = path.zp_at(s);
    if (zp == cd(0.0))
      throw std::invalid_argument("degenerate path: z' = 0 at node " +
                                  std::to_string(j));
    const cd zpp = path.zpp_at(s);
    v[j] = zp / std::conj(zp);
    w[j] = std::conj(zpp) / std::norm(zp);
  }
}

Mat adjoint_p_squared_via_formula(const PathGridRep& rep, const Vec& v,
                                  const Vec& w) {
  const int M = rep.M();
  if (v.size() != M || w.size() != M)
    throw std::invalid_argument("v/w grids inconsistent with rep");
  // d/dx_H f = (1/z') d/ds f, realized through the same stencil as PH
  Mat Dx = cd(0.0, 1.0) * rep.PH;
  Vec vw = v.cwiseProduct(w);
  Vec d_vw = Dx * vw;
  Vec dv = Dx * v;
  Mat out = Mat::Zero(M, M);
  for (int j = 0; j < M; ++j)
    out(j, j) = v[j] * d_vw[j] - vw[j] * vw[j];
  Vec c1 = cd(0.0, 1.0) * (2.0 * v.cwiseProduct(v).cwiseProduct(w) -
                           v.cwiseProduct(dv));
  out += c1.asDiagonal() * rep.PH;
  out += (v.cwiseProduct(v)).asDiagonal() * (rep.PH * rep.PH);
  return out;
}

Mat grid_adjoint(const PathGridRep& rep, const Mat& A) {
  const int M = rep.M();
  Mat out(M, M);
  for (int j = 0; j < M; ++j)
    for (int k = 0; k < M; ++k)
      out(j, k) =
          (rep.quad_weights[k] / rep.quad_weights[j]) * std::conj(A(k, j));
  return out;
}

double grid_hermiticity_defect(const PathGridRep& rep, const Mat& A) {
  double defect = 0.0;
  for (int j = rep.interior_lo; j <= rep.interior_hi; ++j)
    for (int k = rep.interior_lo; k <= rep.interior_hi; ++k)
      defect = std::max(defect,
                        std::abs(rep.quad_weights[j] * A(j, k) -
                                 rep.quad_weights[k] * std::conj(A(k, j))));
  return defect;
}

LineCheck straight_line_hermiticity_check(cd a, cd b, int M, double L,
                                          double angular_tol) {
  if (b == cd(0.0)) throw std::invalid_argument("b = 0 rejected");
  LineCheck out;
  const double quarter = std::numbers::pi / 2.0;
  double r = std::fmod(std::arg(b), quarter);
  if (r < 0.0) r += quarter;
  out.angle_mod = std::min(r, quarter - r);
  out.hermitizing = out.angle_mod < angular_tol;
  auto rep = build_path_rep(straight_path(a, b), M, L);
  out.p2_defect = grid_hermiticity_defect(rep, rep.PH * rep.PH);
  return out;
}

TranslatedFunction apply_translation_dilatation(
    const std::function<cd(cd)>& psi, cd a, cd b, const PathGridRep& rep,
    double domain_radius) {
  const int M = rep.M();
  TranslatedFunction out;
  out.values.resize(M);
  for (int j = 0; j < M; ++j) {
    const cd zq = a + b * rep.s_grid[j];
    if (std::abs(zq) > domain_radius)
      throw std::invalid_argument("sample outside domain at node " +
                                  std::to_string(j));
    out.values[j] = psi(zq);
  }
  const double mid = std::abs(out.values[M / 2]);
  out.normalizable = !(std::abs(out.values[0]) > mid &&
                       std::abs(out.values[M - 1]) > mid);
  return out;
}

}  // namespace nhqm
