#include "surgery/matrix.hpp"

#include <json.hpp>
#include <sstream>

#include "surgery/errors.hpp"

namespace surgery {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n);
  for (std::size_t i = 1; i <= n; ++i) m.at(i, i) = GaussianRational(1);
  return m;
}

ComplexMatrix ComplexMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
  if (i < 1 || i > n || j < 1 || j > n)
    throw InvalidParameter("unit matrix index out of range");
  ComplexMatrix m(n);
  m.at(i, j) = GaussianRational(1);
  return m;
}

bool ComplexMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool ComplexMatrix::is_diagonal() const {
  for (std::size_t i = 1; i <= n_; ++i)
    for (std::size_t j = 1; j <= n_; ++j)
      if (i != j && !at(i, j).is_zero()) return false;
  return true;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix m(n_);
  for (std::size_t i = 1; i <= n_; ++i)
    for (std::size_t j = 1; j <= n_; ++j) m.at(j, i) = at(i, j);
  return m;
}

ComplexMatrix ComplexMatrix::conj() const {
  ComplexMatrix m(n_);
  for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = entries_[i].conj();
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& b) {
  if (n_ != b.n_) throw DimensionMismatch("matrix dimension mismatch in +");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += b.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& b) {
  if (n_ != b.n_) throw DimensionMismatch("matrix dimension mismatch in -");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= b.entries_[i];
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.n_ != b.n_) throw DimensionMismatch("matrix dimension mismatch in *");
  ComplexMatrix m(a.n_);
  for (std::size_t i = 1; i <= a.n_; ++i)
    for (std::size_t k = 1; k <= a.n_; ++k) {
      const GaussianRational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 1; j <= a.n_; ++j) {
        if (b.at(k, j).is_zero()) continue;
        m.at(i, j) += aik * b.at(k, j);
      }
    }
  return m;
}

ComplexMatrix operator*(const GaussianRational& c, const ComplexMatrix& a) {
  ComplexMatrix m(a.n_);
  for (std::size_t i = 0; i < a.entries_.size(); ++i) m.entries_[i] = c * a.entries_[i];
  return m;
}

ComplexMatrix ComplexMatrix::pow(unsigned k) const {
  ComplexMatrix acc = identity(n_);
  for (unsigned step = 0; step < k; ++step) acc = acc * (*this);
  return acc;
}

Eigen::MatrixXcd ComplexMatrix::to_complex() const {
  Eigen::MatrixXcd m(n_, n_);
  for (std::size_t i = 1; i <= n_; ++i)
    for (std::size_t j = 1; j <= n_; ++j)
      m(i - 1, j - 1) = std::complex<double>(to_double(at(i, j).re), to_double(at(i, j).im));
  return m;
}

ComplexMatrix bracket(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("bracket dimension mismatch");
  return a * b - b * a;
}

std::string ComplexMatrix::to_json() const {
  nlohmann::json j;
  j["n"] = n_;
  auto rows = nlohmann::json::array();
  for (const auto& e : entries_) {
    auto [rn, rd] = to_pair(e.re);
    auto [in, id] = to_pair(e.im);
    rows.push_back({rn, rd, in, id});
  }
  j["entries"] = rows;
  return j.dump();
}

ComplexMatrix ComplexMatrix::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  std::size_t n = j.at("n").get<std::size_t>();
  const auto& rows = j.at("entries");
  if (rows.size() != n * n) throw InvalidParameter("matrix JSON entry count mismatch");
  ComplexMatrix m(n);
  for (std::size_t idx = 0; idx < rows.size(); ++idx) {
    const auto& q = rows[idx];
    m.entries_[idx] = GaussianRational(rat(q.at(0).get<long>(), q.at(1).get<long>()),
                                       rat(q.at(2).get<long>(), q.at(3).get<long>()));
  }
  return m;
}

std::string ComplexMatrix::str() const {
  std::ostringstream os;
  for (std::size_t i = 1; i <= n_; ++i) {
    os << (i == 1 ? "[" : " ");
    for (std::size_t j = 1; j <= n_; ++j) os << at(i, j) << (j == n_ ? "" : " ");
    os << (i == n_ ? "]" : "\n");
  }
  return os.str();
}

}  // namespace surgery
