#include "surgery/hitchin.hpp"

#include <algorithm>
#include <cmath>

#include "surgery/errors.hpp"
#include "surgery/liealg.hpp"

namespace surgery::hitchin {

namespace {

using Eigen::MatrixXcd;
using std::complex;

constexpr complex<double> kI{0.0, 1.0};

// Transition margins as a fraction of log(4/3); see CutoffProfile.
constexpr double kMarginFraction = 0.2;

void check_same_grid(const PolarField& a, const PolarField& b) {
  if (!(a.grid == b.grid)) throw DimensionMismatch("fields live on different grids");
  if (a.dim != b.dim) throw DimensionMismatch("fields have different matrix dimensions");
}

// Centered d/dt along the radial index, second-order one-sided at the ends.
// Stencils are written as differences so constant fields differentiate to
// exactly zero.
MatrixXcd ddt(const PolarField& f, int i, int j) {
  const double h = f.grid.dt();
  if (i > 0 && i + 1 < f.grid.n_r) return (f.at(i + 1, j) - f.at(i - 1, j)) / (2.0 * h);
  if (i == 0)
    return (4.0 * (f.at(1, j) - f.at(0, j)) - (f.at(2, j) - f.at(0, j))) / (2.0 * h);
  const int n = f.grid.n_r;
  return (4.0 * (f.at(n - 1, j) - f.at(n - 2, j)) - (f.at(n - 1, j) - f.at(n - 3, j))) /
         (2.0 * h);
}

MatrixXcd dtheta(const PolarField& f, int i, int j) {
  const int n = f.grid.n_theta;
  return (f.at(i, (j + 1) % n) - f.at(i, (j + n - 1) % n)) / (2.0 * f.grid.dtheta());
}

double quintic_step(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return x * x * x * (10.0 + x * (-15.0 + 6.0 * x));
}

}  // namespace

void PolarGrid::validate() const {
  if (!(r_min > 0.0) || !(r_min < r_max)) throw InvalidParameter("need 0 < r_min < r_max");
  if (n_r < 8 || n_theta < 8) throw InvalidParameter("need n_r, n_theta >= 8");
}

double PolarGrid::dt() const { return (std::log(r_max) - std::log(r_min)) / (n_r - 1); }
double PolarGrid::dtheta() const { return 2.0 * M_PI / n_theta; }
double PolarGrid::t(int i) const { return std::log(r_min) + i * dt(); }
double PolarGrid::r(int i) const { return std::exp(t(i)); }
double PolarGrid::theta(int j) const { return j * dtheta(); }

PolarField PolarField::zero(const PolarGrid& grid, int dim) {
  grid.validate();
  PolarField f{grid, dim, {}};
  f.values.assign(grid.nodes(), MatrixXcd::Zero(dim, dim));
  return f;
}

HiggsPair model_solution(int p, double C, const PolarGrid& grid, ModelFamily family) {
  if (C == 0.0) throw InvalidParameter("the model requires C != 0");
  grid.validate();

  Eigen::VectorXd diag;
  switch (family) {
    case ModelFamily::Sl2:
      diag.resize(2);
      diag << C, -C;
      break;
    case ModelFamily::Principal: {
      if (p < 1) throw InvalidParameter("p must be >= 1");
      diag.resize(2 * p + 1);
      for (int i = 1; i <= p; ++i) {
        diag(i - 1) = 2.0 * (p + 1 - i) * C;
        diag(p + i - 1) = -2.0 * (p + 1 - i) * C;
      }
      diag(2 * p) = 0.0;
      break;
    }
    case ModelFamily::PsiReduced: {
      if (p < 1) throw InvalidParameter("p must be >= 1");
      diag = Eigen::VectorXd::Zero(2 * p + 1);
      for (int i = 1; i <= p - 1; ++i) {
        diag(1 + i) = 2.0 * (p - i) * C;
        diag(p + i) = -2.0 * (p - i) * C;
      }
      break;
    }
  }

  const int dim = static_cast<int>(diag.size());
  HiggsPair pair{PolarField::zero(grid, dim), PolarField::zero(grid, dim)};
  for (int i = 0; i < grid.n_r; ++i)
    for (int j = 0; j < grid.n_theta; ++j) {
      complex<double> z = std::polar(grid.r(i), grid.theta(j));
      pair.Phi.at(i, j) = (diag / z).asDiagonal();
    }
  return pair;
}

ResidualResult residual(const PolarField& A, const PolarField& Phi) {
  check_same_grid(A, Phi);
  const PolarGrid& grid = A.grid;

  ResidualResult out;
  out.field = PolarField::zero(grid, A.dim);
  double l2 = 0.0;
  for (int i = 0; i < grid.n_r; ++i) {
    const double r = grid.r(i);
    for (int j = 0; j < grid.n_theta; ++j) {
      // F_A = d_r a_theta dr^dtheta for A = a dtheta; with the log grid
      // d_r a = (d_t a)/r.  The bracket term [Phi, tau(Phi)] contributes
      // -2i[phi, phi*] against the same measure.
      MatrixXcd curv = ddt(A, i, j) / (r * r);
      const MatrixXcd& phi = Phi.at(i, j);
      MatrixXcd br = phi * phi.adjoint() - phi.adjoint() * phi;
      MatrixXcd rho = curv - 2.0 * kI * br;
      out.field.at(i, j) = rho;
      double norm = rho.norm();
      out.sup_norm = std::max(out.sup_norm, norm);
      l2 += norm * norm * r * r * grid.dt() * grid.dtheta();
    }
  }
  out.l2_norm = std::sqrt(l2);
  return out;
}

CutoffProfile cutoff(double R) {
  if (!(R > 0.0) || !(R < 1.0)) throw InvalidParameter("need 0 < R < 1");
  return {R};
}

double CutoffProfile::value_t(double t) const {
  const double t_hi = std::log(R);
  const double width = std::log(4.0 / 3.0);
  const double t_lo = t_hi - width;
  const double margin = kMarginFraction * width;
  const double inner = width - 2.0 * margin;
  return 1.0 - quintic_step((t - t_lo - margin) / inner);
}

double CutoffProfile::value(double r) const { return value_t(std::log(r)); }

double growth_constant(const CutoffProfile& chi, const PolarGrid& grid) {
  grid.validate();
  const int n = std::max(4096, 4 * grid.n_r);
  const double t0 = grid.t(0);
  const double h = (grid.t(grid.n_r - 1) - t0) / (n - 1);
  double best = 0.0;
  for (int i = 1; i + 1 < n; ++i) {
    double tm = t0 + (i - 1) * h, tc = t0 + i * h, tp = t0 + (i + 1) * h;
    double d1 = (chi.value_t(tp) - chi.value_t(tm)) / (2.0 * h);
    double d2 = (chi.value_t(tp) - 2.0 * chi.value_t(tc) + chi.value_t(tm)) / (h * h);
    best = std::max(best, std::abs(d1) + std::abs(d2));
  }
  return best;
}

HiggsPair approximate_glue(const HiggsPair& base, const PolarField& gamma,
                           const CutoffProfile& chi) {
  check_same_grid(base.A, base.Phi);
  check_same_grid(base.A, gamma);
  const PolarGrid& grid = gamma.grid;

  for (int i = 0; i < grid.n_r; ++i)
    for (int j = 0; j < grid.n_theta; ++j) {
      if (!gamma.at(i, j).isDiagonal(1e-13))
        throw InvalidParameter("gamma must be diagonal-valued");
      if ((gamma.at(i, j) - gamma.at(i, 0)).norm() > 1e-12)
        throw InvalidParameter("gamma must be radial (theta-independent)");
    }

  PolarField u = PolarField::zero(grid, gamma.dim);
  for (int i = 0; i < grid.n_r; ++i) {
    const double c = chi.value(grid.r(i));
    for (int j = 0; j < grid.n_theta; ++j) u.at(i, j) = c * gamma.at(i, j);
  }

  HiggsPair out{PolarField::zero(grid, gamma.dim), PolarField::zero(grid, gamma.dim)};
  for (int i = 0; i < grid.n_r; ++i)
    for (int j = 0; j < grid.n_theta; ++j) {
      MatrixXcd g = u.at(i, j).diagonal().array().exp().matrix().asDiagonal();
      MatrixXcd ginv = (-u.at(i, j).diagonal().array()).exp().matrix().asDiagonal();
      if (!g.allFinite() || !ginv.allFinite()) throw NumericError("exp(gamma) overflowed");
      // a_theta picks up -i d_t(chi gamma); radial diagonal gauges generate
      // no dr component.
      out.A.at(i, j) = ginv * base.A.at(i, j) * g - kI * ddt(u, i, j);
      out.Phi.at(i, j) = ginv * base.Phi.at(i, j) * g;
    }
  return out;
}

double quadratic_form(const PolarField& A, const PolarField& Phi, const PolarField& gamma) {
  check_same_grid(A, Phi);
  check_same_grid(A, gamma);
  const PolarGrid& grid = A.grid;

  double total = 0.0;
  for (int i = 0; i < grid.n_r; ++i) {
    const double r = grid.r(i);
    const double w = r * r * grid.dt() * grid.dtheta();
    for (int j = 0; j < grid.n_theta; ++j) {
      MatrixXcd dr_part = ddt(gamma, i, j) / r;  // d_r = (1/r) d_t
      MatrixXcd dth_part = dtheta(gamma, i, j) +
                           A.at(i, j) * gamma.at(i, j) - gamma.at(i, j) * A.at(i, j);
      const MatrixXcd& phi = Phi.at(i, j);
      MatrixXcd br = phi * gamma.at(i, j) - gamma.at(i, j) * phi;
      total += (dr_part.squaredNorm() + dth_part.squaredNorm() / (r * r) +
                2.0 * br.squaredNorm()) *
               w;
    }
  }
  return total;
}

int commutant_in_h(int p, const ComplexMatrix& phi) {
  if (p < 1) throw InvalidParameter("p must be >= 1");
  const std::size_t n = static_cast<std::size_t>(2 * p + 1);
  if (phi.dim() != n) throw InvalidParameter("phi must be (2p+1)x(2p+1)");

  // Basis of so(p) (+) so(p+1) in block form: E_ab - E_ba within each block.
  std::vector<ComplexMatrix> basis;
  auto add_block = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t a = lo; a <= hi; ++a)
      for (std::size_t b = a + 1; b <= hi; ++b)
        basis.push_back(ComplexMatrix::unit(n, a, b) - ComplexMatrix::unit(n, b, a));
  };
  add_block(1, p);
  add_block(p + 1, n);

  // Exact rank of the map gamma -> [gamma, phi] on that basis.
  const std::size_t rows = n * n;
  const std::size_t cols = basis.size();
  std::vector<std::vector<GaussianRational>> m(rows, std::vector<GaussianRational>(cols));
  for (std::size_t c = 0; c < cols; ++c) {
    ComplexMatrix br = bracket(basis[c], phi);
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j) m[(i - 1) * n + (j - 1)][c] = br.at(i, j);
  }

  std::size_t rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && m[piv][col].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[row], m[piv]);
    GaussianRational scale = m[row][col];
    for (std::size_t c = col; c < cols; ++c) m[row][c] = m[row][c] / scale;
    for (std::size_t rr = 0; rr < rows; ++rr) {
      if (rr == row || m[rr][col].is_zero()) continue;
      GaussianRational f = m[rr][col];
      for (std::size_t c = col; c < cols; ++c) m[rr][c] -= f * m[row][c];
    }
    ++row;
    ++rank;
  }
  return static_cast<int>(cols - rank);
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  ComplexMatrix defect = m * m.conj_transpose() - ComplexMatrix::identity(m.dim());
  if (defect.is_zero()) return true;
  return defect.to_complex().norm() < tol;
}

bool is_unitary(const Eigen::MatrixXcd& m, double tol) {
  if (m.rows() != m.cols()) throw InvalidParameter("is_unitary needs a square matrix");
  return (m * m.adjoint() - MatrixXcd::Identity(m.rows(), m.cols())).norm() < tol;
}

}  // namespace surgery::hitchin
