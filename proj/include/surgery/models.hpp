#pragma once

#include <string>
#include <utility>
#include <vector>

#include "surgery/parabolic.hpp"

namespace surgery::models {

enum class Family { BAG, HitchinE1, PsiE2, PsiGeneral };

std::string family_name(Family f);

/// Symbolic Higgs-field entry.  Sections are presence/absence data only.
struct PatternEntry {
  enum class Kind { Zero, One, Q, Mu, Nu, EtaHat } kind = Kind::Zero;
  int q_index = 0;  // the 2j of q_{2j}

  bool is_zero() const { return kind == Kind::Zero; }
  std::string str() const;
  friend bool operator==(const PatternEntry&, const PatternEntry&) = default;
};

using Pattern = std::vector<std::vector<PatternEntry>>;

struct HiggsModel {
  Family family;
  parab::ParabolicBundle bundle;
  Pattern higgs_pattern;
  int p = 0;
  int k = 0;
  // Nonempty when the pattern carries a section constraint (exceptional eta).
  std::string constraint;
};

struct StabilityReport {
  std::string family;
  std::string params;
  struct Sub {
    std::string desc;
    Rat pardeg;
  };
  std::vector<Sub> subbundles;
  Rat total_pardeg;
  bool stable = false;

  std::string to_json() const;
};

/// Rank-2 pair (L (x) iota)^* (+) L with weights 1/2 and nilpotent
/// upper-triangular Higgs field.  L is recorded through its plain degree g-1.
HiggsModel bag_model(int g, int s);

/// E_1 = S^{2p} of the rank-2 pair, Higgs field the regular nilpotent shift.
HiggsModel hitchin_model(int p, int g1, int s);

/// E_2 = Mtilde (+) Mtilde^v (+) K-string, Mtilde = O((2k-1-p)D).
HiggsModel psi_model(int p, int g2, int s, int k);

/// The map Psi applied to a rank-2 orthogonal input: emits (V, W, eta) as one
/// model whose bundle is V (+) W and whose pattern is the banded eta.
/// hatW_D_coeffs are the O(.D) coefficients of the two What lines.
HiggsModel psi_map(parab::MarkedSurface base, int p, std::pair<int, int> hatW_D_coeffs,
                   bool hat_eta_zero, const std::vector<bool>& q_flags);

/// Exceptional-component eta of the classification data: mu/nu corner entries,
/// with the section constraint recorded as a flag on the model.
HiggsModel exceptional_model(parab::MarkedSurface base, int p, int m_degree,
                             const std::vector<bool>& q_flags);

/// The enumerated Phi-invariant proper subbundles of the model.
std::vector<parab::ParabolicBundle> invariant_subbundles(const HiggsModel& m);

/// Slope stability of the model relative to the enumerated invariant family.
StabilityReport stability_report(const HiggsModel& m);

/// True when the pattern maps the given leading summands into themselves
/// (tensored by K(D)); consistency check behind invariant_subbundles.
bool pattern_preserves(const Pattern& pattern, std::size_t subranks);

}  // namespace surgery::models
