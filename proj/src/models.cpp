#include "surgery/models.hpp"

#include <json.hpp>
#include <sstream>

#include "surgery/errors.hpp"

namespace surgery::models {

using parab::MarkedSurface;
using parab::ParabolicBundle;
using parab::ParabolicLine;
using parab::make_line;

namespace {

void require_domain(int g, int s) {
  if (g < 0 || s < 0) throw InvalidParameter("genus and s must be nonnegative");
  if (2 * g - 2 + s <= 0)
    throw InvalidParameter("stability domain violated: 2g-2+s must be > 0");
}

Pattern zero_pattern(std::size_t rows, std::size_t cols) {
  return Pattern(rows, std::vector<PatternEntry>(cols));
}

constexpr PatternEntry kOne{PatternEntry::Kind::One, 0};

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::BAG: return "BAG";
    case Family::HitchinE1: return "HitchinE1";
    case Family::PsiE2: return "PsiE2";
    case Family::PsiGeneral: return "PsiGeneral";
  }
  return "?";
}

std::string PatternEntry::str() const {
  switch (kind) {
    case Kind::Zero: return "0";
    case Kind::One: return "1";
    case Kind::Q: return "q" + std::to_string(q_index);
    case Kind::Mu: return "mu";
    case Kind::Nu: return "nu";
    case Kind::EtaHat: return "eta^";
  }
  return "?";
}

HiggsModel bag_model(int g, int s) {
  require_domain(g, s);
  MarkedSurface base{g, s};
  // L has plain degree g-1 (L^2 = K); its parabolic dual carries the iota
  // twist O(-D) and again weight 1/2.
  ParabolicLine L = make_line(base, 0, 0, g - 1, rat(1, 2));
  ParabolicLine Ldual_twisted = parab::dual(L);

  HiggsModel m;
  m.family = Family::BAG;
  m.bundle.summands = {Ldual_twisted, L};
  m.higgs_pattern = zero_pattern(2, 2);
  m.higgs_pattern[0][1] = kOne;
  return m;
}

HiggsModel hitchin_model(int p, int g1, int s) {
  if (p < 1) throw InvalidParameter("p must be >= 1");
  require_domain(g1, s);

  HiggsModel m;
  m.family = Family::HitchinE1;
  m.p = p;
  m.bundle = parab::sym_power(bag_model(g1, s).bundle, 2 * p);
  const std::size_t n = 2 * p + 1;
  m.higgs_pattern = zero_pattern(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m.higgs_pattern[i][i + 1] = kOne;
  return m;
}

HiggsModel psi_model(int p, int g2, int s, int k) {
  if (p < 1) throw InvalidParameter("p must be >= 1");
  if (k < 1 || k > p) throw InvalidParameter("k must satisfy 1 <= k <= p");
  require_domain(g2, s);
  MarkedSurface base{g2, s};

  HiggsModel m;
  m.family = Family::PsiE2;
  m.p = p;
  m.k = k;
  ParabolicLine mtilde = make_line(base, 0, 2 * k - 1 - p, 0, rat(0));
  m.bundle.summands = {mtilde, parab::dual(mtilde)};
  for (int j = -(p - 1); j <= p - 1; ++j)
    m.bundle.summands.push_back(make_line(base, j, j, 0, rat(0)));

  const std::size_t n = 2 * p + 1;
  m.higgs_pattern = zero_pattern(n, n);
  // Shift along the K-string; the Mtilde summands are annihilated.
  for (std::size_t i = 2; i + 1 < n; ++i) m.higgs_pattern[i][i + 1] = kOne;
  return m;
}

HiggsModel psi_map(MarkedSurface base, int p, std::pair<int, int> hatW_D_coeffs,
                   bool hat_eta_zero, const std::vector<bool>& q_flags) {
  if (p < 1) throw InvalidParameter("p must be >= 1");

  HiggsModel m;
  m.family = Family::PsiGeneral;
  m.p = p;
  // V = K^{p-1} (+) K^{p-3} (+) ... (+) K^{1-p}, with O(jD) twists over a
  // marked base; W starts with the two What lines.
  for (int j = p - 1; j >= 1 - p; j -= 2)
    m.bundle.summands.push_back(make_line(base, j, j, 0, rat(0)));
  m.bundle.summands.push_back(make_line(base, 0, hatW_D_coeffs.first, 0, rat(0)));
  m.bundle.summands.push_back(make_line(base, 0, hatW_D_coeffs.second, 0, rat(0)));
  for (int j = p - 2; j >= 2 - p; j -= 2)
    m.bundle.summands.push_back(make_line(base, j, j, 0, rat(0)));

  // eta: W -> V (x) K, p rows by p+1 columns; columns 1-2 are What.
  m.higgs_pattern = zero_pattern(p, p + 1);
  if (!hat_eta_zero) {
    m.higgs_pattern[0][0] = {PatternEntry::Kind::EtaHat, 0};
    m.higgs_pattern[0][1] = {PatternEntry::Kind::EtaHat, 0};
  }
  for (int i = 0; i < p; ++i)
    for (int j = 2; j < p + 1; ++j) {
      int twice = 2 * (j - 1 - i);
      if (twice == 0) {
        m.higgs_pattern[i][j] = kOne;
      } else if (twice > 0) {
        std::size_t flag = static_cast<std::size_t>(twice / 2 - 1);
        if (flag < q_flags.size() && q_flags[flag])
          m.higgs_pattern[i][j] = {PatternEntry::Kind::Q, twice};
      }
    }
  return m;
}

HiggsModel exceptional_model(MarkedSurface base, int p, int m_degree,
                             const std::vector<bool>& q_flags) {
  if (p < 1) throw InvalidParameter("p must be >= 1");

  HiggsModel m;
  m.family = Family::PsiGeneral;
  m.p = p;
  m.constraint = "0 != mu != lambda*nu";
  // Bundle listed as W (+) V: M, the K-string of W, M^{-1}, then V.
  m.bundle.summands.push_back(make_line(base, 0, 0, m_degree, rat(0)));
  for (int j = p - 2; j >= 2 - p; j -= 2)
    m.bundle.summands.push_back(make_line(base, j, 0, 0, rat(0)));
  m.bundle.summands.push_back(make_line(base, 0, 0, -m_degree, rat(0)));
  for (int j = p - 1; j >= 1 - p; j -= 2)
    m.bundle.summands.push_back(make_line(base, j, 0, 0, rat(0)));

  // eta: V -> W (x) K, p+1 rows by p columns.  Row 1 is M, rows 2..p the
  // K-string, row p+1 is M^{-1}.
  m.higgs_pattern = zero_pattern(p + 1, p);
  m.higgs_pattern[0][p - 1] = {PatternEntry::Kind::Nu, 0};
  m.higgs_pattern[p][p - 1] = {PatternEntry::Kind::Mu, 0};
  for (int i = 1; i < p; ++i)
    for (int j = i - 1; j < p; ++j) {
      int twice = 2 * (j - i + 1);
      if (twice == 0) {
        m.higgs_pattern[i][j] = kOne;
      } else {
        std::size_t flag = static_cast<std::size_t>(twice / 2 - 1);
        if (flag < q_flags.size() && q_flags[flag])
          m.higgs_pattern[i][j] = {PatternEntry::Kind::Q, twice};
      }
    }
  return m;
}

bool pattern_preserves(const Pattern& pattern, std::size_t subranks) {
  for (std::size_t j = 0; j < subranks && j < pattern[0].size(); ++j)
    for (std::size_t i = 0; i < pattern.size(); ++i)
      if (!pattern[i][j].is_zero() && i >= subranks) return false;
  return true;
}

std::vector<ParabolicBundle> invariant_subbundles(const HiggsModel& m) {
  std::vector<std::size_t> prefix_lengths;
  switch (m.family) {
    case Family::BAG:
      prefix_lengths = {1};
      break;
    case Family::HitchinE1:
      // Truncations with 0 <= m <= 2p-1 summands beyond the first.
      for (std::size_t len = 1; len <= static_cast<std::size_t>(2 * m.p); ++len)
        prefix_lengths.push_back(len);
      break;
    case Family::PsiE2:
      // Mtilde (+) Mtilde^v (+) the first l string summands, 1 <= l <= 2p-2.
      for (int l = 1; l <= 2 * m.p - 2; ++l)
        prefix_lengths.push_back(static_cast<std::size_t>(2 + l));
      break;
    case Family::PsiGeneral:
      throw NotImplemented("invariant subbundles are enumerated only for BAG/E1/E2");
  }

  std::vector<ParabolicBundle> subs;
  for (std::size_t len : prefix_lengths) {
    if (!pattern_preserves(m.higgs_pattern, len))
      throw NumericError("enumerated subbundle is not pattern-invariant");
    ParabolicBundle f;
    f.summands.assign(m.bundle.summands.begin(), m.bundle.summands.begin() + len);
    subs.push_back(std::move(f));
  }
  return subs;
}

StabilityReport stability_report(const HiggsModel& m) {
  StabilityReport report;
  report.family = family_name(m.family);
  std::ostringstream params;
  if (!m.bundle.summands.empty()) {
    params << "g=" << m.bundle.summands.front().base.genus
           << " s=" << m.bundle.summands.front().base.s;
  }
  if (m.p > 0) params << " p=" << m.p;
  if (m.k > 0) params << " k=" << m.k;
  report.params = params.str();
  report.total_pardeg = parab::pardeg(m.bundle);

  Rat total_slope = parab::parslope(m.bundle);
  bool stable = true;
  for (const auto& sub : invariant_subbundles(m)) {
    std::ostringstream desc;
    for (std::size_t i = 0; i < sub.summands.size(); ++i)
      desc << (i ? " + " : "") << sub.summands[i].str();
    report.subbundles.push_back({desc.str(), parab::pardeg(sub)});
    if (!(parab::parslope(sub) < total_slope)) stable = false;
  }
  report.stable = stable;
  return report;
}

std::string StabilityReport::to_json() const {
  nlohmann::json j;
  j["family"] = family;
  j["params"] = params;
  auto arr = nlohmann::json::array();
  for (const auto& sub : subbundles) {
    auto [n, d] = to_pair(sub.pardeg);
    arr.push_back({{"desc", sub.desc}, {"pardeg", {n, d}}});
  }
  j["subbundles"] = arr;
  auto [tn, td] = to_pair(total_pardeg);
  j["total_pardeg"] = {tn, td};
  j["verdict"] = stable ? "stable" : "unstable";
  j["note"] = "stability relative to the enumerated invariant family";
  return j.dump();
}

}  // namespace surgery::models
