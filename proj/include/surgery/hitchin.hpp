#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "surgery/matrix.hpp"

namespace surgery::hitchin {

/// Log-uniform radial, uniform angular grid on an annulus around a puncture.
/// In t = log r the radial step is constant, so r d/dr is a uniform-step
/// derivative.
struct PolarGrid {
  double r_min = 0.0;
  double r_max = 0.0;
  int n_r = 0;
  int n_theta = 0;

  void validate() const;
  double dt() const;
  double dtheta() const;
  double t(int i) const;
  double r(int i) const;
  double theta(int j) const;
  std::size_t nodes() const { return static_cast<std::size_t>(n_r) * n_theta; }

  friend bool operator==(const PolarGrid&, const PolarGrid&) = default;
};

/// Matrix-valued function sampled on a polar grid.
struct PolarField {
  PolarGrid grid;
  int dim = 0;
  std::vector<Eigen::MatrixXcd> values;

  static PolarField zero(const PolarGrid& grid, int dim);

  Eigen::MatrixXcd& at(int i, int j) { return values[static_cast<std::size_t>(i) * grid.n_theta + j]; }
  const Eigen::MatrixXcd& at(int i, int j) const {
    return values[static_cast<std::size_t>(i) * grid.n_theta + j];
  }
};

/// Unitary connection represented by its dtheta-coefficient: A = a(r,theta) dtheta.
/// The model connections vanish and the diagonal radial gauges used here only
/// ever produce dtheta components.
struct HiggsPair {
  PolarField A;    // dtheta coefficient
  PolarField Phi;  // coefficient of dz, poles included in the sampled values
};

enum class ModelFamily {
  Sl2,        // diag(C, -C)/z
  Principal,  // C x / z with x the principal semisimple element
  PsiReduced  // zero top-left 2x2 block, shortened diagonal string
};

/// A = 0, Phi = (diagonal model matrix)/z sampled at the nodes.
HiggsPair model_solution(int p, double C, const PolarGrid& grid,
                         ModelFamily family = ModelFamily::Principal);

struct ResidualResult {
  PolarField field;  // density of F_A - [Phi, tau(Phi)] against r dr dtheta
  double sup_norm = 0.0;
  double l2_norm = 0.0;
};

ResidualResult residual(const PolarField& A, const PolarField& Phi);

/// chi_R(r) = 1 for r <= 3R/4 and 0 for r >= R, a quintic step in log r over
/// the middle of the transition interval (margins keep finite-difference
/// stencils of the glued fields supported strictly inside [3R/4, R]).
struct CutoffProfile {
  double R = 0.0;

  double value(double r) const;
  double value_t(double t) const;  // as a function of t = log r
};

CutoffProfile cutoff(double R);

/// max over a refined log-radial sampling of |r d/dr chi| + |(r d/dr)^2 chi|,
/// by finite differences in t.  Independent of R up to sampling noise.
double growth_constant(const CutoffProfile& chi, const PolarGrid& grid);

/// The gauge action of exp(chi_R * gamma) on the pair, gamma diagonal and
/// radial; the connection picks up the finite-differenced g^{-1}dg term.
HiggsPair approximate_glue(const HiggsPair& base, const PolarField& gamma,
                           const CutoffProfile& chi);

/// ||d_A gamma||^2 + 2||[Phi, gamma]||^2 with discrete norms, measure r dr dtheta.
double quadratic_form(const PolarField& A, const PolarField& Phi, const PolarField& gamma);

/// dim { gamma in so(p) (+) so(p+1) block form : [gamma, phi] = 0 }, exact.
int commutant_in_h(int p, const ComplexMatrix& phi);

bool is_unitary(const ComplexMatrix& m, double tol);
bool is_unitary(const Eigen::MatrixXcd& m, double tol);

}  // namespace surgery::hitchin
