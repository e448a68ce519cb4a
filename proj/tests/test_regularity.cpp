#include <gtest/gtest.h>

#include "hyperlaw/enumeration.hpp"
#include "hyperlaw/regularity.hpp"
#include "support.hpp"

using namespace hyperlaw;
using support::at;

TEST(Regularity, I4IsIntraRegularWithQuotedWitnesses) {
  auto t = support::load("I4");
  auto r = intra_regular(t);
  EXPECT_TRUE(r.intra_regular);
  EXPECT_FALSE(r.first_failing);
  // a ∈ (x∘a²)∘y for the (a, x, y) triples listed alongside the table.
  std::array<std::array<char const*, 3>, 4> quoted{{{"x", "y", "z"},
                                                    {"y", "z", "z"},
                                                    {"z", "y", "y"},
                                                    {"w", "x", "z"}}};
  for (auto const& [a, x, y] : quoted) {
    EXPECT_TRUE(verify_intra_witness(t, at(t, a), at(t, x), at(t, y))) << a;
  }
}

TEST(Regularity, K4AndA5FailAtX) {
  for (auto name : {"K4", "A5"}) {
    auto t = support::load(name);
    auto r = intra_regular(t);
    EXPECT_FALSE(r.intra_regular) << name;
    ASSERT_TRUE(r.first_failing);
    EXPECT_EQ(t.label(*r.first_failing), "x");
  }
}

TEST(Regularity, EngineWitnessesVerify) {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 300; ++round) {
    int const n  = 1 + static_cast<int>(rng() % 5);
    auto      nt = oracle::random_raw(rng, n);
    auto      t  = oracle::to_table(nt);
    auto      r  = intra_regular(t);
    EXPECT_EQ(r.intra_regular, oracle::intra_regular(nt));
    for (int a = 0; a < n; ++a) {
      EXPECT_EQ(r.witnesses[a].has_value(), oracle::intra_element(nt, a));
      if (r.witnesses[a]) {
        EXPECT_TRUE(verify_intra_witness(t, a, r.witnesses[a]->first,
                                         r.witnesses[a]->second));
      }
    }
  }
}

TEST(Regularity, FamiliesAreIntraRegular) {
  EXPECT_TRUE(intra_regular(gen_coset(6, 3)).intra_regular);
  EXPECT_TRUE(intra_regular(gen_union(4, 2)).intra_regular);
}

TEST(Regularity, InvertibilityNeedsLeftIdentity) {
  auto t = support::load("K4");
  try {
    invertibility(t, 0);
    ADD_FAILURE();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAnIdentity);
  }
}

TEST(Regularity, InvertibilityAgainstDefinition) {
  auto t = support::load("P4r");
  auto e = at(t, "x");
  auto r = invertibility(t, e);
  for (Element a = 0; a < t.order(); ++a) {
    bool any_left = false;
    bool any_pure = false;
    for (Element u = 0; u < t.order(); ++u) {
      any_left = any_left || t.cell(u, a).contains(e);
      any_pure = any_pure || t.cell(u, a) == SubsetMask::singleton(e);
    }
    EXPECT_EQ(r.left_inverse[a].has_value(), any_left);
    EXPECT_EQ(r.pure_left_inverse[a].has_value(), any_pure);
    if (r.left_inverse[a]) {
      EXPECT_TRUE(t.cell(*r.left_inverse[a], a).contains(e));
    }
  }
}
