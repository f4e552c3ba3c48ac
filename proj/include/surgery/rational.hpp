#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

namespace surgery {

using Rat = mpq_class;

// mpq_class(n, d) does not reduce; always build rationals through here.
inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline long to_long(const Rat& q) {
  if (!is_integer(q) || !q.get_num().fits_slong_p())
    throw std::overflow_error("rational is not a small integer: " + q.get_str());
  return q.get_num().get_si();
}

inline double to_double(const Rat& q) { return q.get_d(); }

// num/den pair with both parts as machine longs, for serialization.
inline std::pair<long, long> to_pair(const Rat& q) {
  if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p())
    throw std::overflow_error("rational too large to serialize: " + q.get_str());
  return {q.get_num().get_si(), q.get_den().get_si()};
}

inline Rat floor_rat(const Rat& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return Rat(f);
}

/// Element of Q(i): exact Gaussian rational.
struct GaussianRational {
  Rat re{0};
  Rat im{0};

  GaussianRational() = default;
  GaussianRational(Rat r) : re(std::move(r)) {}
  GaussianRational(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long r) : re(rat(r)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational conj() const { return {re, -im}; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussianRational& operator+=(const GaussianRational& b) {
    re += b.re;
    im += b.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& b) {
    re -= b.re;
    im -= b.im;
    return *this;
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }

  // |a|^2 = a * conj(a), exact.
  Rat norm2() const { return re * re + im * im; }

  GaussianRational operator/(const GaussianRational& b) const {
    Rat n2 = b.norm2();
    if (n2 == 0) throw std::domain_error("division by zero Gaussian rational");
    GaussianRational num = *this * b.conj();
    return {num.re / n2, num.im / n2};
  }

  std::string str() const {
    if (im == 0) return re.get_str();
    return re.get_str() + (im > 0 ? "+" : "") + im.get_str() + "i";
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << z.str();
  }
};

}  // namespace surgery
