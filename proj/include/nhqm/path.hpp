#pragma once

#include <functional>
#include <string>

#include "nhqm/core.hpp"

namespace nhqm {

// Complex integration path z(s), s in [-L, L]. Either a straight line
// z = a + b s or an externally sampled curve with its first two derivatives.
struct PathSpec {
  bool straight = true;
  cd a{0.0}, b{1.0};
  // sampled representation (uniform in s), used when straight == false
  std::vector<double> s;
  std::vector<cd> z, zp, zpp;

  cd z_at(double t) const;
  cd zp_at(double t) const;
  cd zpp_at(double t) const;
};

PathSpec straight_path(cd a, cd b);
PathSpec sampled_path(std::vector<double> s, std::vector<cd> z,
                      std::vector<cd> zp, std::vector<cd> zpp);
// Whitespace-separated columns: s, Re z, Im z, Re z', Im z', Re z'', Im z''.
PathSpec load_path_file(const std::string& filename);
// Convenience: sample an analytic z(s) and its derivatives on M nodes.
PathSpec sample_path(const std::function<cd(double)>& z,
                     const std::function<cd(double)>& zp,
                     const std::function<cd(double)>& zpp, double L, int M);

struct PathGridRep {
  RVec s_grid;
  RVec quad_weights;  // trapezoid
  Mat Xc, Pc, XH, PH;
  int interior_lo = 0, interior_hi = 0;  // inclusive interior index range
  std::vector<cd> zp;                    // z'(s_j), kept for adjoints

  int M() const { return static_cast<int>(s_grid.size()); }
  bool interior(int j) const { return j >= interior_lo && j <= interior_hi; }
};

// Uniform grid on [-L, L]; Pc = -i * second-order central differences with
// one-sided end stencils; XH = diag(z(s_j)); PH = diag(1/z') Pc. Boundary
// rows are excluded from every defect via the interior mask (width 4).
PathGridRep build_path_rep(const PathSpec& path, int M, double L);

// v = z'/conj(z'), unimodular; w = conj(z'')/|z'|^2. Operator-valued in
// general, but pointwise here because x_H and xc are simultaneously diagonal
// in the grid representation.
void compute_v_w(const PathSpec& path, int M, double L, Vec& v, Vec& w);

// (p_H adjoint)^2 assembled from its closed form:
// [v d/dx_H(v w) - (v w)^2] + i [2 v^2 w - v dv/dx_H] p_H + v^2 p_H^2.
Mat adjoint_p_squared_via_formula(const PathGridRep& rep, const Vec& v,
                                  const Vec& w);

// Conjugate-transpose with respect to the trapezoid weights.
Mat grid_adjoint(const PathGridRep& rep, const Mat& A);

// max over interior pairs of |w_j A_jk - w_k conj(A_kj)|, the grid analogue
// of the weighted Hermiticity defect.
double grid_hermiticity_defect(const PathGridRep& rep, const Mat& A);

struct LineCheck {
  bool hermitizing;   // arg b multiple of pi/2 within tolerance
  double angle_mod;   // distance of arg b from the nearest multiple of pi/2
  double p2_defect;   // measured grid defect of p_H^2
};

LineCheck straight_line_hermiticity_check(cd a, cd b, int M = 512,
                                          double L = 1.0,
                                          double angular_tol = 1e-12);

struct TranslatedFunction {
  Vec values;            // psi(a + b s_j)
  bool normalizable;     // false when |psi| grows toward both endpoints
};

// Realizes the translation-dilatation map (T psi)(s) = psi(a + b s) by
// evaluating the function representation along the line; samples outside
// the declared domain radius are rejected.
TranslatedFunction apply_translation_dilatation(
    const std::function<cd(cd)>& psi, cd a, cd b, const PathGridRep& rep,
    double domain_radius);

}  // namespace nhqm
