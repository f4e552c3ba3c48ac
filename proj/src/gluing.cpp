#include "surgery/gluing.hpp"

#include <json.hpp>
#include <sstream>

#include "surgery/errors.hpp"

namespace surgery::glue {

void GlueSpec::validate() const {
  if (p < 1) throw InvalidParameter("p must be >= 1");
  if (g1 < 0 || g2 < 0) throw InvalidParameter("genera must be nonnegative");
  if (s < 1) throw InvalidParameter("s must be >= 1");
  if (k < 1 || k > p) throw InvalidParameter("k must satisfy 1 <= k <= p");
  if (2 * g1 - 2 + s <= 0 || 2 * g2 - 2 + s <= 0)
    throw InvalidParameter("both glued models need 2g-2+s > 0");
}

std::string ComponentClass::str() const {
  switch (tag) {
    case Tag::Invalid: return "Invalid";
    case Tag::ZeroOrBoundary: return "ZeroOrBoundary";
    case Tag::Exceptional: return "Exceptional(" + std::to_string(d) + ")";
    case Tag::Hitchin: return "Hitchin";
  }
  return "?";
}

long connected_sum_genus(int g1, int g2, int s) {
  if (g1 < 0 || g2 < 0) throw InvalidParameter("genera must be nonnegative");
  if (s < 1) throw InvalidParameter("s must be >= 1");
  return static_cast<long>(g1) + g2 + s - 1;
}

long glue_degree(const parab::ParabolicLine& l1, const parab::ParabolicLine& l2) {
  Rat sum = parab::pardeg(l1) + parab::pardeg(l2);
  if (!is_integer(sum))
    throw GluingIncompatibility("parabolic degrees do not sum to an integer: " + sum.get_str());
  return to_long(sum);
}

long model_degree(const GlueSpec& spec) {
  spec.validate();
  return 2L * spec.p * (spec.g1 - 1) + static_cast<long>(2 * spec.k - 1) * spec.s;
}

ComponentClass classify_component(int p, int g, long d) {
  if (p < 1) throw InvalidParameter("p must be >= 1");
  if (g < 2) throw InvalidParameter("g must be >= 2");
  const long top = static_cast<long>(p) * (2 * g - 2);
  if (d < 0 || d > top) return {ComponentClass::Tag::Invalid, d};
  if (d == top) return {ComponentClass::Tag::Hitchin, d};
  if (d == 0) return {ComponentClass::Tag::ZeroOrBoundary, d};
  return {ComponentClass::Tag::Exceptional, d};
}

ExhaustResult exhaust(int p, int g) {
  if (p < 1) throw InvalidParameter("p must be >= 1");
  if (g < 2) throw InvalidParameter("g must be >= 2");

  ExhaustResult result;
  const long top_exceptional = static_cast<long>(p) * (2 * g - 2) - 1;

  // g1 + g2 = g + 1 - s forces s <= g + 1.
  for (int s = 1; s <= g + 1; ++s) {
    const int gsum = g + 1 - s;
    if (gsum < 0) continue;
    for (int g1 = 0; g1 <= gsum; ++g1) {
      const int g2 = gsum - g1;
      if (2 * g1 - 2 + s <= 0 || 2 * g2 - 2 + s <= 0) continue;
      for (int k = 1; k <= p; ++k) {
        GlueSpec spec{p, g1, g2, s, k};
        long d = model_degree(spec);
        if (d <= 0 || d > top_exceptional) continue;
        if (result.achieved.insert(d).second) result.witnesses[d] = spec;
      }
    }
  }
  for (long d = 1; d <= top_exceptional; ++d)
    if (!result.achieved.count(d)) result.missing.insert(d);

  result.parity_note =
      "model_degree = 2p(g1-1) + (2k-1)s is congruent to s mod 2; a degree d is "
      "reachable only by specs with s = d mod 2 satisfying 2g_i-2+s > 0";
  return result;
}

std::string ExhaustResult::to_json() const {
  nlohmann::json j;
  j["achieved"] = achieved;
  j["missing"] = missing;
  auto w = nlohmann::json::object();
  for (const auto& [d, spec] : witnesses)
    w[std::to_string(d)] = {{"p", spec.p}, {"g1", spec.g1}, {"g2", spec.g2},
                            {"s", spec.s}, {"k", spec.k}};
  j["witnesses"] = w;
  j["parity_note"] = parity_note;
  return j.dump();
}

long toledo_bound(int g, int rank) {
  if (g < 2 || rank < 1) throw InvalidParameter("need g >= 2 and rank >= 1");
  return static_cast<long>(2 * g - 2) * rank;
}

bool is_maximal(long T, int g, int rank) {
  return std::abs(T) == toledo_bound(g, rank);
}

long toledo_glue(long T1, long T2) { return T1 + T2; }

std::pair<long, long> euler_range(int g) {
  if (g < 2) throw InvalidParameter("g must be >= 2");
  return {2L - 2 * g, 2L * g - 2};
}

}  // namespace surgery::glue
