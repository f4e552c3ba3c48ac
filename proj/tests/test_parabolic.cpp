#include <doctest.h>

#include <random>

#include "surgery/errors.hpp"
#include "surgery/parabolic.hpp"

using namespace surgery;
using namespace surgery::parab;

namespace {

// The rank-2 pair underlying every model below: L of plain degree g-1 with
// weight 1/2, and its parabolic dual carrying the O(-D) twist.
ParabolicLine bag_L(int g, int s) { return make_line({g, s}, 0, 0, g - 1, rat(1, 2)); }

std::mt19937 rng(20240817);

ParabolicLine random_line(MarkedSurface base) {
  std::uniform_int_distribution<int> small(-4, 4);
  std::uniform_int_distribution<int> den(1, 4);
  int d = den(rng);
  std::uniform_int_distribution<int> num(0, d - 1);
  return make_line(base, small(rng), small(rng), small(rng), rat(num(rng), d));
}

}  // namespace

TEST_CASE("pardeg") {
  SUBCASE("BAG rank-2 pair has parabolic degree zero") {
    for (int g : {0, 1, 2, 3})
      for (int s : {1, 2, 3, 6}) {
        if (2 * g - 2 + s <= 0) continue;
        ParabolicLine L = bag_L(g, s);
        ParabolicBundle E{{dual(L), L}};
        CHECK(pardeg(E) == 0);
      }
  }

  SUBCASE("K^j O(jD) with weight 0 has pardeg j(2g-2+s)") {
    for (int g1 : {0, 2, 5})
      for (int s : {1, 3})
        for (int j : {-3, -1, 0, 1, 4}) {
          ParabolicLine line = make_line({g1, s}, j, j, 0, rat(0));
          CHECK(pardeg(line) == rat(static_cast<long>(j) * (2 * g1 - 2 + s)));
        }
  }

  SUBCASE("trivial line") {
    CHECK(pardeg(make_line({3, 2}, 0, 0, 0, rat(0))) == 0);
  }
}

TEST_CASE("dual") {
  MarkedSurface base{2, 3};

  SUBCASE("weight-1/2 line dualizes to the iota-twisted dual, pardeg negated") {
    ParabolicLine L = bag_L(2, 3);
    ParabolicLine Ld = dual(L);
    CHECK(Ld.weight == rat(1, 2));
    CHECK(Ld.b == -1);  // the O(-D) twist
    CHECK(Ld.extra_deg == -1);
    CHECK(pardeg(Ld) == -pardeg(L));
  }

  SUBCASE("weight 0 stays 0") {
    ParabolicLine line = make_line(base, 2, 1, 0, rat(0));
    CHECK(dual(line).weight == 0);
    CHECK(pardeg(dual(line)) == -pardeg(line));
  }

  SUBCASE("dual is an involution on random lines") {
    for (int trial = 0; trial < 200; ++trial) {
      ParabolicLine line = random_line(base);
      CHECK(dual(dual(line)) == line);
      CHECK(pardeg(dual(line)) == -pardeg(line));
    }
  }
}

TEST_CASE("tensor") {
  MarkedSurface base{2, 1};

  SUBCASE("2p-th power of the dualized BAG line normalizes to weight 0") {
    for (int p : {1, 2, 3}) {
      ParabolicLine Ld = dual(bag_L(2, 1));
      ParabolicLine acc = make_line(base, 0, 0, 0, rat(0));
      for (int m = 0; m < 2 * p; ++m) acc = tensor(acc, Ld);
      CHECK(acc.weight == 0);
      CHECK(acc.b == -p);
      // Same plain degree as K^{-p} O(-pD).
      CHECK(acc.plain_degree() == make_line(base, -p, -p, 0, rat(0)).plain_degree());
    }
  }

  SUBCASE("tensor with the trivial line is the identity") {
    ParabolicLine line = random_line(base);
    CHECK(tensor(line, make_line(base, 0, 0, 0, rat(0))) == line);
  }

  SUBCASE("pardeg is additive on 100 random pairs") {
    for (int trial = 0; trial < 100; ++trial) {
      ParabolicLine l1 = random_line(base);
      ParabolicLine l2 = random_line(base);
      CHECK(pardeg(tensor(l1, l2)) == pardeg(l1) + pardeg(l2));
    }
  }

  SUBCASE("base mismatch is rejected") {
    CHECK_THROWS_AS(tensor(random_line(base), random_line({3, 1})), InvalidParameter);
  }

  SUBCASE("weight normalization never changes pardeg") {
    for (int trial = 0; trial < 100; ++trial) {
      ParabolicLine l1 = random_line(base);
      ParabolicLine l2 = random_line(base);
      ParabolicLine t = tensor(l1, l2);
      CHECK(t.weight >= 0);
      CHECK(t.weight < 1);
      // Unnormalized parabolic degree, computed directly.
      Rat raw = rat(l1.plain_degree() + l2.plain_degree()) +
                (l1.weight + l2.weight) * rat(base.s);
      CHECK(pardeg(t) == raw);
    }
  }
}

TEST_CASE("sym_power") {
  MarkedSurface base{2, 1};
  ParabolicLine L = bag_L(2, 1);
  ParabolicBundle E{{dual(L), L}};

  SUBCASE("S^{2p} of the rank-2 pair is the weight-0 string") {
    for (int p : {1, 2, 3}) {
      ParabolicBundle S = sym_power(E, 2 * p);
      REQUIRE(S.rank() == 2 * p + 1);
      for (int idx = 0; idx <= 2 * p; ++idx) {
        int j = idx - p;
        CHECK(S.summands[idx].weight == 0);
        CHECK(S.summands[idx].b == j);
        CHECK(pardeg(S.summands[idx]) ==
              pardeg(make_line(base, j, j, 0, rat(0))));
      }
      CHECK(pardeg(S) == 0);
    }
  }

  SUBCASE("S^0 is the trivial line") {
    ParabolicBundle S = sym_power(E, 0);
    REQUIRE(S.rank() == 1);
    CHECK(pardeg(S) == 0);
    CHECK(S.summands[0].weight == 0);
  }

  SUBCASE("S^1 is the bundle itself") {
    ParabolicBundle S = sym_power(E, 1);
    REQUIRE(S.rank() == 2);
    CHECK(S.summands[0] == E.summands[0]);
    CHECK(S.summands[1] == E.summands[1]);
  }

  SUBCASE("summand pardegs equal independently tensored powers") {
    ParabolicBundle S = sym_power(E, 5);
    for (int k = 0; k <= 5; ++k) {
      ParabolicLine expect = make_line(base, 0, 0, 0, rat(0));
      for (int m = 0; m < 5 - k; ++m) expect = tensor(expect, E.summands[0]);
      for (int m = 0; m < k; ++m) expect = tensor(expect, E.summands[1]);
      CHECK(pardeg(S.summands[k]) == pardeg(expect));
    }
  }

  SUBCASE("rank != 2 rejected") {
    ParabolicBundle bad{{L}};
    CHECK_THROWS_AS(sym_power(bad, 2), InvalidParameter);
  }
}

TEST_CASE("metric exponents") {
  ParabolicLine L = bag_L(2, 1);

  // L with residue filtration level 1: r^{1/2} |log r|^{1/2}.
  MetricExponents mL = metric_exponents(L, 1);
  CHECK(mL == MetricExponents{rat(1, 2), rat(1, 2)});

  // (L x iota)^* sits at level -1: r^{1/2} |log r|^{-1/2}.
  MetricExponents mLd = metric_exponents(dual(L), -1);
  CHECK(mLd == MetricExponents{rat(1, 2), rat(-1, 2)});

  // Hom(L, (L x iota)^*) carries the product metric: |log r|^{-1}.
  MetricExponents hom = -mL + mLd;
  CHECK(hom == MetricExponents{rat(0), rat(-1)});

  // Tangent bundle L^{-2}: r^{-1} |log r|^{-1}, the Poincare metric.
  MetricExponents tangent = -mL + -mL;
  CHECK(tangent == MetricExponents{rat(-1), rat(-1)});
}

TEST_CASE("bundle JSON round trip") {
  ParabolicLine L = bag_L(3, 2);
  ParabolicBundle E{{dual(L), L, make_line({3, 2}, 1, -2, 5, rat(3, 4))}};
  ParabolicBundle back = bundle_from_json(to_json(E));
  REQUIRE(back.rank() == E.rank());
  for (int i = 0; i < E.rank(); ++i) CHECK(back.summands[i] == E.summands[i]);
}
