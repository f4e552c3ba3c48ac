#include "surgery/dehn.hpp"

#include <cmath>
#include <numbers>

#include "surgery/errors.hpp"

namespace surgery::dehn {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Principal arcsinh is discontinuous across the cuts +-i[1, inf); reject
// arguments on or next to them, where continuity from u = 0 fails.
void check_branch(Complex u, Complex w) {
  if (std::abs(u.imag()) >= std::numbers::pi)
    throw BranchError("u outside the strip |Im u| < pi; sinh(u/2) is not injective there");
  if (std::abs(w.real()) < 1e-9 && std::abs(w.imag()) >= 1.0)
    throw BranchError("tau*sinh(u/2) lies on the arcsinh branch cut");
}

}  // namespace

Eigen::Matrix2cd mu_matrix(Complex u, int epsilon) {
  Eigen::Matrix2cd m;
  Complex h = std::exp(u / 2.0);
  m << h, 1.0, 0.0, 1.0 / h;
  return static_cast<double>(epsilon) * m;
}

Eigen::Matrix2cd lambda_matrix(Complex v, Complex tau) {
  Eigen::Matrix2cd m;
  Complex h = std::exp(v / 2.0);
  m << h, tau, 0.0, 1.0 / h;
  return m;
}

Complex v_of_u(Complex u, Complex tau) {
  if (u == 0.0) return 0.0;
  Complex w = tau * std::sinh(u / 2.0);
  check_branch(u, w);
  return 2.0 * std::asinh(w);
}

double commutator_defect(Complex u, Complex v, Complex tau) {
  Eigen::Matrix2cd a = mu_matrix(u, 1);
  Eigen::Matrix2cd b = lambda_matrix(v, tau);
  return (a * b - b * a).norm();
}

FillingCoefficients filling_coefficients(Complex u, Complex tau) {
  if (u == 0.0) return {};
  Complex v = v_of_u(u, tau);

  Eigen::Matrix2d sys;
  sys << u.real(), v.real(), u.imag(), v.imag();
  double det = sys.determinant();
  double scale = std::max({std::abs(u.real()), std::abs(u.imag()), std::abs(v.real()),
                           std::abs(v.imag())});
  if (std::abs(det) <= 1e-14 * scale * scale)
    throw DegenerateCusp("u and v are real-proportional; coefficients are undetermined");

  Eigen::Vector2d rhs(0.0, kTwoPi);
  Eigen::Vector2d pq = sys.partialPivLu().solve(rhs);
  return {std::make_pair(pq(0), pq(1))};
}

Complex u_for_slope(double p, double q, Complex tau) {
  if (p == 0.0 && q == 0.0) throw InvalidParameter("slope (0,0) is not allowed");
  const Complex target(0.0, kTwoPi);
  if (q == 0.0) return target / p;  // f(u) = p*u - 2*pi*i decouples

  Complex u = target / (p + q * tau);
  for (int iter = 0; iter < 100; ++iter) {
    Complex w = tau * std::sinh(u / 2.0);
    check_branch(u, w);
    Complex f = p * u + q * 2.0 * std::asinh(w) - target;
    if (std::abs(f) < 1e-12) return u;
    Complex df = p + q * tau * std::cosh(u / 2.0) / std::sqrt(w * w + 1.0);
    if (std::abs(df) < 1e-14) throw NoSolution("Newton derivative vanished");
    u -= f / df;
  }
  throw NoSolution("Newton iteration did not converge in 100 steps");
}

std::vector<std::pair<int, int>> figure_eight_exceptional_slopes() {
  return {{1, 0}, {0, 1}, {1, 1}, {-1, 1}, {2, 1}, {-2, 1}, {3, 1}, {-3, 1}, {4, 1}, {-4, 1}};
}

}  // namespace surgery::dehn
