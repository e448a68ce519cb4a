#include <gtest/gtest.h>

#include <set>

#include "hyperlaw/enumeration.hpp"
#include "hyperlaw/regularity.hpp"
#include "support.hpp"

using namespace hyperlaw;

namespace {

// Frozen after the naive 81-table filter below agreed with the engine.
constexpr std::size_t kOrderTwoCount         = 21;
constexpr std::size_t kOrderTwoIntraRegular  = 19;
constexpr std::size_t kOrderThreeCount       = 112573;

std::vector<std::uint32_t> key(HyperTable const& t) {
  std::vector<std::uint32_t> k;
  for (auto m : t.cells()) {
    k.push_back(m.bits());
  }
  return k;
}

std::vector<std::vector<std::uint32_t>> keys(EnumerationQuery const& q) {
  std::vector<std::vector<std::uint32_t>> out;
  enumerate(q, [&](HyperTable const& t) { out.push_back(key(t)); });
  return out;
}

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (Error const& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::SyntaxError;
}

}  // namespace

TEST(Enumeration, OrderOne) {
  EnumerationQuery q;
  EXPECT_EQ(enumerate_tables(q).size(), 1u);
}

TEST(Enumeration, OrderTwoMatchesNaiveFilter) {
  std::vector<std::vector<std::uint32_t>> naive;
  std::size_t                             naive_intra = 0;
  auto const raw = oracle::all_raw_tables(2);
  ASSERT_EQ(raw.size(), 81u);
  for (auto const& nt : raw) {
    if (oracle::law_holds(nt, LawId::LeftInvertive)) {
      naive.push_back(key(oracle::to_table(nt)));
      naive_intra += oracle::intra_regular(nt) ? 1 : 0;
    }
  }
  EnumerationQuery q;
  q.order = 2;
  EXPECT_EQ(keys(q), naive);
  EXPECT_EQ(naive.size(), kOrderTwoCount);

  q.flags = {StructureFlag::IntraRegular};
  auto intra = enumerate(q, [](HyperTable const&) {});
  EXPECT_EQ(intra.emitted, naive_intra);
  EXPECT_EQ(intra.emitted, kOrderTwoIntraRegular);
  EXPECT_EQ(intra.law_tables, kOrderTwoCount);
}

TEST(Enumeration, NoLawMeansEveryTable) {
  EnumerationQuery q;
  q.order = 2;
  q.laws.clear();
  EXPECT_EQ(enumerate(q, [](HyperTable const&) {}).emitted, 81u);
}

TEST(Enumeration, OrderThreeAgreesWithNaiveOnSample) {
  EnumerationQuery q;
  q.order = 3;
  q.jobs  = 2;
  std::set<std::vector<std::uint32_t>> accepted;
  enumerate(q, [&](HyperTable const& t) { accepted.insert(key(t)); });
  EXPECT_EQ(accepted.size(), kOrderThreeCount);

  std::mt19937_64 rng(3);
  std::size_t     hits = 0;
  for (int i = 0; i < 100000; ++i) {
    auto nt     = oracle::random_raw(rng, 3);
    bool naive  = oracle::law_holds(nt, LawId::LeftInvertive);
    bool pruned = accepted.count(key(oracle::to_table(nt))) > 0;
    ASSERT_EQ(naive, pruned) << "sample " << i;
    hits += naive ? 1 : 0;
  }
  EXPECT_GT(hits, 0u);
}

TEST(Enumeration, JobsDoNotChangeOutput) {
  EnumerationQuery q;
  q.order     = 3;
  q.flags     = {StructureFlag::HasLeftIdentity};
  q.jobs      = 1;
  auto const one = keys(q);
  q.jobs      = 2;
  EXPECT_EQ(keys(q), one);
  q.jobs      = 8;
  EXPECT_EQ(keys(q), one);
  EXPECT_TRUE(std::is_sorted(one.begin(), one.end()));

  EnumerationQuery s;
  s.order        = 5;
  s.mode         = EnumerationMode::Sample;
  s.sample_count = 12;
  s.seed         = 42;
  s.jobs         = 1;
  auto const sampled = keys(s);
  s.jobs = 8;
  EXPECT_EQ(keys(s), sampled);
  EXPECT_EQ(keys(s), sampled);
}

TEST(Enumeration, SamplesSatisfyLaws) {
  EnumerationQuery s;
  s.order        = 6;
  s.mode         = EnumerationMode::Sample;
  s.sample_count = 5;
  s.seed         = 1;
  auto tables    = enumerate_tables(s);
  EXPECT_FALSE(tables.empty());
  for (auto const& t : tables) {
    EXPECT_TRUE(is_la_semihypergroup(t).holds);
  }
}

TEST(Enumeration, Feasibility) {
  EnumerationQuery q;
  q.order = 5;
  EXPECT_EQ(code_of([&] { check_feasible(q); }), ErrorCode::InfeasibleQuery);
  q.order = 4;
  q.laws.clear();
  EXPECT_EQ(code_of([&] { check_feasible(q); }), ErrorCode::InfeasibleQuery);
  q.order = 33;
  q.mode  = EnumerationMode::Sample;
  EXPECT_EQ(code_of([&] { check_feasible(q); }), ErrorCode::InfeasibleQuery);
  q.order          = 9;
  q.canonical_only = true;
  EXPECT_EQ(code_of([&] { check_feasible(q); }), ErrorCode::InfeasibleQuery);
  q.order          = 32;
  q.canonical_only = false;
  EXPECT_NO_THROW(check_feasible(q));
}

TEST(Enumeration, CanonicalFormIsAnIsomorphismInvariant) {
  std::mt19937_64 rng(77);
  for (int round = 0; round < 100; ++round) {
    int const n    = 1 + static_cast<int>(rng() % 5);
    auto      t    = oracle::to_table(oracle::random_raw(rng, n));
    auto      form = canonicalize(t);
    EXPECT_EQ(canonicalize(form.table()), form);
    std::vector<Element> perm(n);
    std::iota(perm.begin(), perm.end(), Element{0});
    for (int k = 0; k < 10; ++k) {
      std::shuffle(perm.begin(), perm.end(), rng);
      EXPECT_EQ(canonicalize(relabel(t, perm)), form);
    }
  }
}

TEST(Enumeration, CanonicalFixtures) {
  auto i4 = support::load("I4");
  std::vector<Element> swap_yz{0, 2, 1, 3};
  auto swapped = relabel(i4, swap_yz);
  EXPECT_EQ(swapped.label(2), "y");
  EXPECT_EQ(canonicalize(swapped), canonicalize(i4));
  EXPECT_NE(canonicalize(support::load("L5")), canonicalize(support::load("A5")));
  auto big = make_table(9, std::vector<SubsetMask>(81, SubsetMask::full(9)));
  EXPECT_EQ(code_of([&] { canonicalize(big); }),
            ErrorCode::OrderTooLargeForCanonical);
}

TEST(Enumeration, CanonicalOnlyCountsIsomorphismClasses) {
  EnumerationQuery q;
  q.order = 2;
  std::set<CanonicalForm> classes;
  enumerate(q, [&](HyperTable const& t) { classes.insert(canonicalize(t)); });
  q.canonical_only = true;
  auto reps        = enumerate_tables(q);
  EXPECT_EQ(reps.size(), classes.size());
  for (auto const& t : reps) {
    EXPECT_TRUE(is_canonical(t));
  }
}

TEST(Enumeration, Generators) {
  auto c = gen_coset(6, 3);
  EXPECT_EQ(c.cell(0, 0), SubsetMask::singleton(0) | SubsetMask::singleton(3));
  auto u = gen_union(4, 2);
  EXPECT_EQ(u.cell(1, 3), u.all());
  EXPECT_TRUE(oracle::intra_regular(oracle::from(c)));
  EXPECT_TRUE(oracle::intra_regular(oracle::from(u)));
  EXPECT_EQ(code_of([] { gen_coset(6, 4); }), ErrorCode::StepDoesNotDivideModulus);
  EXPECT_EQ(code_of([] { gen_union(3, 2); }), ErrorCode::StepDoesNotDivideModulus);
  EXPECT_EQ(code_of([] { gen_coset(6, 0); }), ErrorCode::StepDoesNotDivideModulus);
  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      if (n % k != 0) {
        continue;
      }
      auto coset = gen_coset(n, k);
      EXPECT_TRUE(is_la_semihypergroup(coset).holds) << n << "," << k;
      EXPECT_TRUE(oracle::law_holds(oracle::from(coset), LawId::LeftInvertive));
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          EXPECT_EQ(coset.cell(x, y).size(), n / k);
          EXPECT_TRUE(coset.cell(x, y).contains((y + n - x) % n));
        }
      }
      auto uni = gen_union(n, k);
      EXPECT_TRUE(is_la_semihypergroup(uni).holds) << n << "," << k;
      EXPECT_TRUE(oracle::law_holds(oracle::from(uni), LawId::LeftInvertive));
    }
  }
}
