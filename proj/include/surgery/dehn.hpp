#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <utility>
#include <vector>

namespace surgery::dehn {

using Complex = std::complex<double>;

struct CuspHolonomy {
  Complex u;
  Complex v;
  Complex tau;
  int epsilon = 1;
};

/// Generalized Dehn filling coefficients: infinity at the complete structure,
/// otherwise the real solution of p*u + q*v = 2*pi*i.
struct FillingCoefficients {
  std::optional<std::pair<double, double>> value;  // nullopt means infinity

  bool is_infinity() const { return !value.has_value(); }
};

/// Holonomy of the meridian: epsilon * [[e^{u/2}, 1], [0, e^{-u/2}]].
Eigen::Matrix2cd mu_matrix(Complex u, int epsilon);

/// Holonomy of the longitude: [[e^{v/2}, tau], [0, e^{-v/2}]].
Eigen::Matrix2cd lambda_matrix(Complex v, Complex tau);

/// v = 2 arcsinh(tau sinh(u/2)), principal branch, v(0) = 0, odd in u.
Complex v_of_u(Complex u, Complex tau);

/// Frobenius norm of [mu(u,1), lambda(v,tau)]; vanishes exactly when
/// sinh(v/2) = tau sinh(u/2).
double commutator_defect(Complex u, Complex v, Complex tau);

FillingCoefficients filling_coefficients(Complex u, Complex tau);

/// Newton solve of p*u + q*v(u) = 2*pi*i from the seed 2*pi*i/(p + q*tau).
Complex u_for_slope(double p, double q, Complex tau);

/// The ten surgery slopes on the figure-eight knot exterior that do not yield
/// a hyperbolic manifold.
std::vector<std::pair<int, int>> figure_eight_exceptional_slopes();

}  // namespace surgery::dehn
