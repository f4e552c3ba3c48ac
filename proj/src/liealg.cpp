#include "surgery/liealg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "surgery/errors.hpp"

namespace surgery::lie {

namespace {

void require_p(int p) {
  if (p < 1) throw InvalidParameter("p must be >= 1");
}

std::size_t matdim(int p) { return static_cast<std::size_t>(2 * p + 1); }

// Diagonal entry of x at position a (1-based): 2(p+1-i) at i, the negative at
// p+i, 0 at 2p+1.
long x_diag(int p, std::size_t a) {
  if (a <= static_cast<std::size_t>(p)) return 2 * (p + 1 - static_cast<long>(a));
  if (a <= static_cast<std::size_t>(2 * p)) return -2 * (p + 1 - static_cast<long>(a - p));
  return 0;
}

}  // namespace

std::string Root::str() const {
  std::ostringstream os;
  switch (kind) {
    case RootKind::EiMinusEj: os << "e" << i << "-e" << j; break;
    case RootKind::EiPlusEj: os << "e" << i << "+e" << j; break;
    case RootKind::Ei: os << "e" << i; break;
  }
  return os.str();
}

std::vector<Root> positive_roots(int p) {
  require_p(p);
  std::vector<Root> roots;
  for (int i = 1; i <= p; ++i)
    for (int j = i + 1; j <= p; ++j) roots.push_back({RootKind::EiMinusEj, i, j});
  for (int i = 1; i <= p; ++i)
    for (int j = i + 1; j <= p; ++j) roots.push_back({RootKind::EiPlusEj, i, j});
  for (int i = 1; i <= p; ++i) roots.push_back({RootKind::Ei, i, 0});
  return roots;
}

ComplexMatrix root_vector(int p, const Root& alpha, int sign) {
  require_p(p);
  if (sign != 1 && sign != -1) throw InvalidParameter("sign must be +1 or -1");
  const int i = alpha.i, j = alpha.j;
  auto check_two = [&] {
    if (i < 1 || j <= i || j > p) throw InvalidParameter("root indices out of range");
  };
  auto E = [&](int a, int b) { return ComplexMatrix::unit(matdim(p), a, b); };
  switch (alpha.kind) {
    case RootKind::EiMinusEj:
      check_two();
      // X_{e_i-e_j} = E_{i,j} - E_{p+j,p+i}; the negative root swaps i and j.
      if (sign > 0) return E(i, j) - E(p + j, p + i);
      return E(j, i) - E(p + i, p + j);
    case RootKind::EiPlusEj:
      check_two();
      if (sign > 0) return E(i, p + j) - E(j, p + i);
      return E(p + j, i) - E(p + i, j);
    case RootKind::Ei:
      if (i < 1 || i > p) throw InvalidParameter("root index out of range");
      if (sign > 0) return E(i, 2 * p + 1) - E(2 * p + 1, p + i);
      return E(p + i, 2 * p + 1) - E(2 * p + 1, i);
  }
  throw InvalidParameter("unknown root kind");
}

bool check_membership(int p, const ComplexMatrix& X) {
  require_p(p);
  if (X.dim() != matdim(p)) throw InvalidParameter("matrix dimension must be 2p+1");
  const std::size_t n = matdim(p);
  ComplexMatrix Q(n);
  for (int i = 1; i <= p; ++i) {
    Q.at(i, p + i) = GaussianRational(1);
    Q.at(p + i, i) = GaussianRational(1);
  }
  Q.at(n, n) = GaussianRational(1);
  return (X.transpose() * Q + Q * X).is_zero();
}

Sl2Triple principal_sl2(int p) {
  require_p(p);
  const std::size_t n = matdim(p);

  ComplexMatrix x(n);
  for (std::size_t a = 1; a <= n; ++a) x.at(a, a) = GaussianRational(rat(x_diag(p, a)));

  ComplexMatrix e(n);
  std::vector<Root> simple;
  for (int i = 1; i < p; ++i) simple.push_back({RootKind::EiMinusEj, i, i + 1});
  simple.push_back({RootKind::Ei, p, 0});
  for (const auto& a : simple) e += root_vector(p, a);

  // The ad-x eigenspace of eigenvalue -2 inside so(2p+1,C) is spanned by the
  // negative simple root vectors, so etilde = sum c_i X_{-a_i}.  Brackets of
  // distinct simple root vectors vanish, and [e,etilde] = x becomes a linear
  // system on the diagonal.
  std::vector<ComplexMatrix> gens;
  gens.reserve(simple.size());
  for (const auto& a : simple) gens.push_back(bracket(e, root_vector(p, a, -1)));

  // Solve sum_i c_i * diag(gens[i]) = diag(x) by exact elimination.
  const std::size_t m = simple.size();
  std::vector<std::vector<Rat>> aug(n, std::vector<Rat>(m + 1, rat(0)));
  for (std::size_t row = 1; row <= n; ++row) {
    for (std::size_t col = 0; col < m; ++col) {
      const auto& g = gens[col].at(row, row);
      if (!g.is_real()) throw NumericError("Cartan component not real");
      aug[row - 1][col] = g.re;
    }
    aug[row - 1][m] = x.at(row, row).re;
  }
  std::vector<Rat> coeff(m, rat(0));
  std::size_t lead = 0;
  std::vector<std::size_t> pivot_col(n, m);
  for (std::size_t r = 0; r < n && lead < m; ++r) {
    std::size_t piv = r;
    while (piv < n && aug[piv][lead] == 0) ++piv;
    if (piv == n) {
      ++lead;
      --r;
      continue;
    }
    std::swap(aug[r], aug[piv]);
    Rat scale = aug[r][lead];
    for (auto& v : aug[r]) v /= scale;
    for (std::size_t rr = 0; rr < n; ++rr) {
      if (rr == r || aug[rr][lead] == 0) continue;
      Rat f = aug[rr][lead];
      for (std::size_t c = 0; c <= m; ++c) aug[rr][c] -= f * aug[r][c];
    }
    pivot_col[r] = lead;
    ++lead;
  }
  for (std::size_t r = 0; r < n; ++r) {
    if (pivot_col[r] < m) coeff[pivot_col[r]] = aug[r][m];
    else if (aug[r][m] != 0)
      throw NumericError("inconsistent system for etilde");
  }

  ComplexMatrix etilde(n);
  for (std::size_t idx = 0; idx < m; ++idx)
    etilde += GaussianRational(coeff[idx]) * root_vector(p, simple[idx], -1);

  ComplexMatrix two_e = GaussianRational(rat(2)) * e;
  if (!(bracket(x, e) == two_e)) throw NumericError("[x,e] != 2e");
  if (!(bracket(x, etilde) == GaussianRational(rat(-2)) * etilde))
    throw NumericError("[x,etilde] != -2 etilde");
  if (!(bracket(e, etilde) == x)) throw NumericError("[e,etilde] != x");

  return {x, e, etilde};
}

std::vector<long> adx_eigenvalues(int p) {
  require_p(p);
  std::vector<long> eigs;
  ComplexMatrix x = principal_sl2(p).x;
  auto record = [&](const ComplexMatrix& v, long expected) {
    // [x, X_alpha] = alpha(x) X_alpha, verified exactly.
    if (!(bracket(x, v) == GaussianRational(rat(expected)) * v))
      throw NumericError("basis element is not an ad-x eigenvector");
    eigs.push_back(expected);
  };
  for (const auto& alpha : positive_roots(p)) {
    long val = 0;
    switch (alpha.kind) {
      case RootKind::EiMinusEj: val = x_diag(p, alpha.i) - x_diag(p, alpha.j); break;
      case RootKind::EiPlusEj: val = x_diag(p, alpha.i) + x_diag(p, alpha.j); break;
      case RootKind::Ei: val = x_diag(p, alpha.i); break;
    }
    record(root_vector(p, alpha, +1), val);
    record(root_vector(p, alpha, -1), -val);
  }
  // Cartan: diag(E_{i,i} - E_{p+i,p+i}), eigenvalue 0.
  const std::size_t n = matdim(p);
  for (int i = 1; i <= p; ++i) {
    ComplexMatrix h = ComplexMatrix::unit(n, i, i) - ComplexMatrix::unit(n, p + i, p + i);
    record(h, 0);
  }
  return eigs;
}

std::vector<AdString> adx_decomposition(int p) {
  require_p(p);
  std::vector<long> eigs = adx_eigenvalues(p);
  std::map<long, int> mult;
  for (long v : eigs) ++mult[v];

  std::vector<AdString> strings;
  for (int i = p; i >= 1; --i) {
    AdString s;
    s.dimension = 4 * i - 1;
    for (long lam = 4 * i - 2; lam >= -(4 * i - 2); lam -= 2) {
      auto it = mult.find(lam);
      if (it == mult.end() || it->second == 0)
        throw NumericError("ad-x eigenvalues do not split into the expected strings");
      --it->second;
      s.eigenvalues.push_back(lam);
    }
    strings.push_back(std::move(s));
  }
  for (const auto& [lam, count] : mult)
    if (count != 0) throw NumericError("leftover ad-x eigenvalues after string extraction");
  std::reverse(strings.begin(), strings.end());
  return strings;
}

std::vector<std::string> etilde_display_check(int p) {
  require_p(p);
  auto triple = principal_sl2(p);
  const std::size_t n = matdim(p);
  ComplexMatrix expected(n);
  // Cumulative sums 2p + 2(p-1) + ... + 2(p+1-i).
  long cum = 0;
  for (int i = 1; i < p; ++i) {
    cum += 2 * (p + 1 - i);
    expected.at(i + 1, i) = GaussianRational(rat(cum));
    expected.at(p + i, p + i + 1) = GaussianRational(rat(-cum));
  }
  long corner = 0;
  for (int i = 1; i <= p; ++i) corner += 2 * (p + 1 - i);
  expected.at(n, p) = GaussianRational(rat(corner));
  expected.at(2 * p, n) = GaussianRational(rat(-corner));

  std::vector<std::string> discrepancies;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      if (!(triple.etilde.at(i, j) == expected.at(i, j))) {
        std::ostringstream os;
        os << "etilde(" << i << "," << j << ") solved=" << triple.etilde.at(i, j)
           << " display=" << expected.at(i, j);
        discrepancies.push_back(os.str());
      }
  return discrepancies;
}

}  // namespace surgery::lie
