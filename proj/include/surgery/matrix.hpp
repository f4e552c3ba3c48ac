#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "surgery/rational.hpp"

namespace surgery {

/// Dense square matrix over exact Gaussian rationals.  All Lie-algebra
/// elements live here; numeric modules take the float view.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t n) : n_(n), entries_(n * n) {}

  static ComplexMatrix zero(std::size_t n) { return ComplexMatrix(n); }
  static ComplexMatrix identity(std::size_t n);
  // Elementary matrix E_{i,j} (1-based indices, matching the root-vector formulas).
  static ComplexMatrix unit(std::size_t n, std::size_t i, std::size_t j);

  std::size_t dim() const { return n_; }

  GaussianRational& at(std::size_t i, std::size_t j) { return entries_[(i - 1) * n_ + (j - 1)]; }
  const GaussianRational& at(std::size_t i, std::size_t j) const {
    return entries_[(i - 1) * n_ + (j - 1)];
  }

  bool is_zero() const;
  bool is_diagonal() const;

  ComplexMatrix transpose() const;
  ComplexMatrix conj() const;
  ComplexMatrix conj_transpose() const { return conj().transpose(); }

  ComplexMatrix& operator+=(const ComplexMatrix& b);
  ComplexMatrix& operator-=(const ComplexMatrix& b);
  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(const GaussianRational& c, const ComplexMatrix& a);
  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

  ComplexMatrix pow(unsigned k) const;

  Eigen::MatrixXcd to_complex() const;

  std::string to_json() const;
  static ComplexMatrix from_json(const std::string& text);

  std::string str() const;

 private:
  std::size_t n_ = 0;
  std::vector<GaussianRational> entries_;
};

/// [A, B] = AB - BA, exact.
ComplexMatrix bracket(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace surgery
