#pragma once

#include <map>
#include <set>
#include <string>

#include "surgery/parabolic.hpp"

namespace surgery::glue {

struct GlueSpec {
  int p = 1;
  int g1 = 0;
  int g2 = 0;
  int s = 1;
  int k = 1;

  void validate() const;
  friend bool operator==(const GlueSpec&, const GlueSpec&) = default;
};

struct ComponentClass {
  enum class Tag { Invalid, ZeroOrBoundary, Exceptional, Hitchin } tag;
  long d = 0;

  std::string str() const;
  friend bool operator==(const ComponentClass&, const ComponentClass&) = default;
};

/// Genus of the complex connected sum along s annuli.
long connected_sum_genus(int g1, int g2, int s);

/// deg(L1 # L2) = pardeg(L1) + pardeg(L2); the sum must be an integer.
long glue_degree(const parab::ParabolicLine& l1, const parab::ParabolicLine& l2);

/// deg(M) = 2p(g1 - 1) + (2k - 1)s for the glued model.
long model_degree(const GlueSpec& spec);

ComponentClass classify_component(int p, int g, long d);

struct ExhaustResult {
  std::set<long> achieved;
  std::set<long> missing;
  std::map<long, GlueSpec> witnesses;
  std::string parity_note;  // the independent obstruction, stated for the report

  std::string to_json() const;
};

/// Enumerate every GlueSpec with connected-sum genus g and collect which
/// exceptional degrees (0, p(2g-2)-1] are reached.  Gaps are data.
ExhaustResult exhaust(int p, int g);

long toledo_bound(int g, int rank);
bool is_maximal(long T, int g, int rank);
long toledo_glue(long T1, long T2);
std::pair<long, long> euler_range(int g);

}  // namespace surgery::glue
