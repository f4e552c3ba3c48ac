#pragma once

#include <string>
#include <vector>

#include "surgery/matrix.hpp"

namespace surgery::lie {

/// Positive roots of the B_p system underlying so(p,p+1).
enum class RootKind { EiMinusEj, EiPlusEj, Ei };

struct Root {
  RootKind kind;
  int i = 0;  // 1-based
  int j = 0;  // 0 for short roots

  bool is_simple(int p) const {
    return (kind == RootKind::EiMinusEj && j == i + 1) || (kind == RootKind::Ei && i == p);
  }
  std::string str() const;
  friend bool operator==(const Root&, const Root&) = default;
};

struct Sl2Triple {
  ComplexMatrix x;
  ComplexMatrix e;
  ComplexMatrix etilde;
};

/// All p^2 positive roots: {e_i - e_j, e_i + e_j : i < j} plus the p short roots.
std::vector<Root> positive_roots(int p);

/// Root vector X_{sign * alpha} as a (2p+1)x(2p+1) matrix.
ComplexMatrix root_vector(int p, const Root& alpha, int sign = +1);

/// Semisimple x, regular nilpotent e = sum of simple root vectors, and the
/// etilde solved exactly from [x,etilde] = -2 etilde, [e,etilde] = x.
Sl2Triple principal_sl2(int p);

/// Membership in so(2p+1,C) for the split form Q = [[0,I,0],[I,0,0],[0,0,1]]:
/// X^T Q + Q X = 0, exact.
bool check_membership(int p, const ComplexMatrix& X);

struct AdString {
  int dimension;                 // 4i-1
  std::vector<long> eigenvalues; // 4i-2, 4i-4, ..., -4i+2
};

/// Eigenvalues of ad x on so(2p+1,C), grouped into the p sl(2)-strings.
std::vector<AdString> adx_decomposition(int p);

/// Raw ad-x eigenvalue multiset over the 2p^2+p basis elements, exact.
std::vector<long> adx_eigenvalues(int p);

/// Discrepancies between the solved etilde and its displayed block pattern
/// (subdiagonal cumulative sums, negated superdiagonal, corner entries).
/// Empty means the display matches the defining relations.
std::vector<std::string> etilde_display_check(int p);

}  // namespace surgery::lie
