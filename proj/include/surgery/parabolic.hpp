#pragma once

#include <string>
#include <vector>

#include "surgery/rational.hpp"

namespace surgery::parab {

struct MarkedSurface {
  int genus = 0;
  int s = 0;  // number of marked points

  friend bool operator==(const MarkedSurface&, const MarkedSurface&) = default;
};

/// Symbolic line summand K^a (x) O(bD) (x) (plain line of degree extra_deg),
/// carrying one parabolic weight in [0,1) at every marked point.
struct ParabolicLine {
  MarkedSurface base;
  int a = 0;          // power of the canonical bundle K
  int b = 0;          // coefficient of O(bD)
  int extra_deg = 0;  // degree of an auxiliary plain line bundle
  Rat weight{0};

  long plain_degree() const {
    return static_cast<long>(a) * (2 * base.genus - 2) + static_cast<long>(b) * base.s +
           extra_deg;
  }

  std::string str() const;
  friend bool operator==(const ParabolicLine&, const ParabolicLine&) = default;
};

struct ParabolicBundle {
  std::vector<ParabolicLine> summands;

  int rank() const { return static_cast<int>(summands.size()); }
};

/// Canonical constructor: puts the weight into [0,1), compensating through
/// the O(bD) coefficient so the parabolic degree is unchanged.
ParabolicLine make_line(MarkedSurface base, int a, int b, int extra_deg, Rat weight);

Rat pardeg(const ParabolicLine& line);
Rat pardeg(const ParabolicBundle& bundle);
Rat parslope(const ParabolicBundle& bundle);

ParabolicLine dual(const ParabolicLine& line);
ParabolicLine tensor(const ParabolicLine& l1, const ParabolicLine& l2);
ParabolicBundle sym_power(const ParabolicBundle& rank2, int n);

/// Local tame-harmonic-metric exponents: the metric behaves as
/// C r^beta |log r|^logpow near a marked point.  Exponents add under tensor
/// products of metrized lines and negate under duals.
struct MetricExponents {
  Rat beta{0};
  Rat logpow{0};

  friend MetricExponents operator+(const MetricExponents& a, const MetricExponents& b) {
    return {a.beta + b.beta, a.logpow + b.logpow};
  }
  friend MetricExponents operator-(const MetricExponents& a) { return {-a.beta, -a.logpow}; }
  friend bool operator==(const MetricExponents&, const MetricExponents&) = default;
};

/// Exponent pair (beta, k/2) for a line of recorded weight beta at residue
/// weight-filtration level k (supplied by the caller).
MetricExponents metric_exponents(const ParabolicLine& line, int filtration_level);

std::string to_json(const ParabolicBundle& bundle);
ParabolicBundle bundle_from_json(const std::string& text);

}  // namespace surgery::parab
