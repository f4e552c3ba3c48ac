#include <doctest.h>

#include "surgery/errors.hpp"
#include "surgery/gluing.hpp"
#include "surgery/models.hpp"

using namespace surgery;
using namespace surgery::glue;
using parab::MarkedSurface;
using parab::make_line;

TEST_CASE("connected sum genus") {
  CHECK(connected_sum_genus(2, 2, 1) == 4);
  CHECK(connected_sum_genus(0, 0, 4) == 3);
  CHECK(connected_sum_genus(1, 3, 1) == 4);
  CHECK_THROWS_AS(connected_sum_genus(2, 2, 0), InvalidParameter);
}

TEST_CASE("glue degree") {
  SUBCASE("canonical powers glue to deg K^j on the sum") {
    for (int g1 = 0; g1 <= 5; ++g1)
      for (int g2 = 0; g2 <= 5; ++g2)
        for (int s = 1; s <= 6; ++s)
          for (int j = -5; j <= 5; ++j) {
            auto l1 = make_line({g1, s}, j, j, 0, rat(0));
            auto l2 = make_line({g2, s}, j, j, 0, rat(0));
            long g = connected_sum_genus(g1, g2, s);
            CHECK(glue_degree(l1, l2) == 2L * j * (g - 1));
          }
  }

  SUBCASE("weight mismatch makes the sum non-integral for odd s") {
    for (int s : {1, 3, 5}) {
      auto half = make_line({2, s}, 0, 0, 3, rat(1, 2));
      auto zero = make_line({2, s}, 0, 0, -3, rat(0));
      CHECK_THROWS_AS(glue_degree(half, zero), GluingIncompatibility);
    }
    for (int s : {2, 4, 6}) {
      auto half = make_line({2, s}, 0, 0, 3, rat(1, 2));
      auto zero = make_line({2, s}, 0, 0, -3, rat(0));
      CHECK(glue_degree(half, zero) == s / 2);
    }
  }

  SUBCASE("matched half weights always glue") {
    for (int s : {1, 2, 3}) {
      auto l1 = make_line({2, s}, 0, 0, 4, rat(1, 2));
      auto l2 = make_line({3, s}, 0, 0, -4, rat(1, 2));
      CHECK(glue_degree(l1, l2) == s);
    }
  }

  SUBCASE("trivial lines") {
    CHECK(glue_degree(make_line({2, 1}, 0, 0, 0, rat(0)),
                      make_line({2, 1}, 0, 0, 0, rat(0))) == 0);
  }

  SUBCASE("symmetry and additivity under tensor") {
    auto l1 = make_line({2, 2}, 1, -1, 2, rat(1, 4));
    auto l2 = make_line({1, 2}, -1, 2, 1, rat(3, 4));
    auto m1 = make_line({2, 2}, 0, 1, 0, rat(1, 2));
    auto m2 = make_line({1, 2}, 0, -1, 0, rat(1, 2));
    CHECK(glue_degree(l1, l2) == glue_degree(l2, l1));
    CHECK(glue_degree(parab::tensor(l1, m1), parab::tensor(l2, m2)) ==
          glue_degree(l1, l2) + glue_degree(m1, m2));
  }
}

TEST_CASE("model degree") {
  CHECK(model_degree({3, 2, 2, 1, 1}) == 7);
  CHECK(model_degree({2, 1, 1, 2, 1}) == 2);
  for (int g1 : {1, 2, 3})
    for (int s : {1, 2}) {
      GlueSpec spec{1, g1, 2, s, 1};
      CHECK(model_degree(spec) == 2L * (g1 - 1) + s);
    }
  CHECK_THROWS_AS(model_degree({3, 0, 2, 1, 1}), InvalidParameter);  // 2g1-2+s <= 0
  CHECK_THROWS_AS(model_degree({3, 2, 2, 1, 5}), InvalidParameter);  // k > p

  SUBCASE("parity: d = s mod 2 over a sweep") {
    for (int p = 1; p <= 4; ++p)
      for (int g1 = 0; g1 <= 4; ++g1)
        for (int g2 = 0; g2 <= 4; ++g2)
          for (int s = 1; s <= 5; ++s)
            for (int k = 1; k <= p; ++k) {
              GlueSpec spec{p, g1, g2, s, k};
              if (2 * g1 - 2 + s <= 0 || 2 * g2 - 2 + s <= 0) continue;
              long d = model_degree(spec);
              CHECK(((d % 2 + 2) % 2) == (s % 2));
            }
  }
}

TEST_CASE("classify component") {
  CHECK(classify_component(3, 4, 17) == ComponentClass{ComponentClass::Tag::Exceptional, 17});
  CHECK(classify_component(3, 4, 18).tag == ComponentClass::Tag::Hitchin);
  CHECK(classify_component(3, 4, 19).tag == ComponentClass::Tag::Invalid);
  CHECK(classify_component(3, 4, 0).tag == ComponentClass::Tag::ZeroOrBoundary);
  CHECK(classify_component(3, 4, -1).tag == ComponentClass::Tag::Invalid);
  CHECK_THROWS_AS(classify_component(3, 1, 5), InvalidParameter);
}

TEST_CASE("exhaust") {
  SUBCASE("p=3, g=4 reaches every exceptional degree") {
    auto result = exhaust(3, 4);
    CHECK(result.missing.empty());
    REQUIRE(result.achieved.size() == 17);
    CHECK(*result.achieved.begin() == 1);
    CHECK(*result.achieved.rbegin() == 17);
  }

  SUBCASE("p=2, g=3 misses d=4, matching the parity obstruction") {
    auto result = exhaust(2, 3);
    CHECK(result.missing.count(4) == 1);
    CHECK(result.missing.size() == 1);

    // Independent parity check: d = 4 needs even s; the domain constraints
    // allow only s=2 (g1=g2=1) and s=4 (g1=g2=0), neither of which yields 4.
    for (int s : {2, 4}) {
      for (int g1 = 0; g1 <= 2; ++g1) {
        int g2 = 3 + 1 - s - g1;
        if (g2 < 0 || 2 * g1 - 2 + s <= 0 || 2 * g2 - 2 + s <= 0) continue;
        for (int k = 1; k <= 2; ++k)
          CHECK(model_degree({2, g1, g2, s, k}) != 4);
      }
    }
    CHECK(result.parity_note.find("mod 2") != std::string::npos);
  }

  SUBCASE("p=1, g=2 stays within the exceptional range") {
    auto result = exhaust(1, 2);
    for (long d : result.achieved) {
      CHECK(d >= 1);
      CHECK(d <= 2 * 2 - 3);
    }
    CHECK(result.achieved == std::set<long>{1});
  }

  SUBCASE("every witness classifies exceptional and glues stable models") {
    for (auto [p, g] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}, {4, 3}}) {
      auto result = exhaust(p, g);
      for (const auto& [d, spec] : result.witnesses) {
        CHECK(classify_component(p, g, d).tag == ComponentClass::Tag::Exceptional);
        CHECK(connected_sum_genus(spec.g1, spec.g2, spec.s) == g);
        CHECK(model_degree(spec) == d);
        CHECK(models::stability_report(models::hitchin_model(spec.p, spec.g1, spec.s)).stable);
        CHECK(models::stability_report(models::psi_model(spec.p, spec.g2, spec.s, spec.k))
                  .stable);
      }
      // Soundness of the range: no achieved degree beyond p(2g-2)-1.
      for (long d : result.achieved) CHECK(d <= static_cast<long>(p) * (2 * g - 2) - 1);
    }
  }
}

TEST_CASE("toledo and euler bookkeeping") {
  CHECK(toledo_bound(2, 2) == 4);
  CHECK(is_maximal(4, 2, 2));
  CHECK(is_maximal(-4, 2, 2));
  CHECK_FALSE(is_maximal(3, 2, 2));
  CHECK(euler_range(3) == std::pair<long, long>{-4, 4});
  CHECK_THROWS_AS(toledo_bound(1, 2), InvalidParameter);

  SUBCASE("glued maximal pieces are maximal on the sum") {
    // A separating loop splits genus g as g1 + g2 with piece Euler
    // characteristics 1 - 2g_i; maximal Toledo invariants |chi| * rk on the
    // pieces add up to the closed-surface bound (2g-2) * rk.
    for (int g1 : {1, 2, 3})
      for (int g2 : {1, 2})
        for (int rank : {1, 2, 3}) {
          long t1 = static_cast<long>(2 * g1 - 1) * rank;
          long t2 = static_cast<long>(2 * g2 - 1) * rank;
          int g = g1 + g2;
          CHECK(toledo_glue(t1, t2) == toledo_bound(g, rank));
          CHECK(is_maximal(toledo_glue(t1, t2), g, rank));
        }
  }
}
