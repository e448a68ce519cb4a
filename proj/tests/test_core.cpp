#include <gtest/gtest.h>

#include "hyperlaw/core.hpp"
#include "support.hpp"

using namespace hyperlaw;

namespace {

template <typename F>
Error error_of(F&& f) {
  try {
    f();
  } catch (Error const& e) {
    return e;
  }
  ADD_FAILURE() << "no error thrown";
  return Error(ErrorCode::SyntaxError, "none");
}

RawTable raw2(std::vector<std::vector<long long>> cells) {
  return RawTable{2, std::move(cells), {}};
}

}  // namespace

TEST(Core, ValidateRejectsEmptyCell) {
  auto e = error_of([] { validate(raw2({{0}, {1}, {}, {0, 1}})); });
  EXPECT_EQ(e.code(), ErrorCode::EmptyCell);
  EXPECT_EQ(e.args(), (std::vector<std::int64_t>{1, 0}));
}

TEST(Core, ValidateRejectsOutOfRange) {
  auto e = error_of([] { validate(raw2({{0}, {1}, {0}, {0, 2}})); });
  EXPECT_EQ(e.code(), ErrorCode::OutOfRange);
  EXPECT_EQ(e.args(), (std::vector<std::int64_t>{1, 1, 2}));
  EXPECT_EQ(error_of([] { validate(raw2({{-1}, {1}, {0}, {0}})); }).code(),
            ErrorCode::OutOfRange);
}

TEST(Core, ValidateRejectsBadOrder) {
  EXPECT_EQ(error_of([] { validate(RawTable{0, {}, {}}); }).code(),
            ErrorCode::OrderOutOfBounds);
  RawTable big{33, std::vector<std::vector<long long>>(33 * 33, {0}), {}};
  EXPECT_EQ(error_of([&] { validate(big); }).code(),
            ErrorCode::OrderOutOfBounds);
}

TEST(Core, ValidateRejectsDuplicateLabels) {
  RawTable r{2, {{0}, {1}, {0}, {1}}, {"a", "a"}};
  EXPECT_EQ(error_of([&] { validate(r); }).code(), ErrorCode::DuplicateLabel);
}

TEST(Core, DuplicatesInCellCollapse) {
  auto t = validate(raw2({{0, 0, 1}, {1}, {0}, {1}}));
  EXPECT_EQ(t.cell(0, 0), SubsetMask::full(2));
  EXPECT_EQ(t.labels(), (std::vector<std::string>{"0", "1"}));
}

TEST(Core, OrderThirtyTwoWorks) {
  std::vector<SubsetMask> cells(32 * 32, SubsetMask::full(32));
  auto t = make_table(32, cells);
  EXPECT_EQ(compose(t, SubsetMask::singleton(31), SubsetMask::singleton(0)),
            SubsetMask::full(32));
}

TEST(Core, I4CellFromFixture) {
  auto t = support::load("I4");
  EXPECT_EQ(t.order(), 4u);
  EXPECT_EQ(t.cell(support::at(t, "x"), support::at(t, "y")),
            support::set(t, "x,w"));
  EXPECT_EQ(format_mask(t, support::set(t, "w,x")), "{x,w}");
}

TEST(Core, ComposeErrors) {
  auto t = support::load("I4");
  EXPECT_EQ(error_of([&] { compose(t, SubsetMask(), t.all()); }).code(),
            ErrorCode::EmptyOperand);
  EXPECT_EQ(error_of([&] { compose(t, t.all(), SubsetMask()); }).code(),
            ErrorCode::EmptyOperand);
  EXPECT_EQ(
      error_of([&] { compose(t, SubsetMask::singleton(4), t.all()); }).code(),
      ErrorCode::IndexOutOfRange);
  EXPECT_EQ(error_of([&] { check_element(t, 4); }).code(),
            ErrorCode::IndexOutOfRange);
}

TEST(Core, ComposeMatchesNaiveUnion) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 300; ++round) {
    int const n  = 1 + static_cast<int>(rng() % 6);
    auto      nt = oracle::random_raw(rng, n);
    auto      t  = oracle::to_table(nt);
    auto      subsets = oracle::all_subsets(n);
    auto const& a = subsets[rng() % subsets.size()];
    auto const& b = subsets[rng() % subsets.size()];
    EXPECT_EQ(compose(t, oracle::mask(a), oracle::mask(b)),
              oracle::mask(oracle::op(nt, a, b)));
    EXPECT_EQ(compose(t, t.all(), oracle::mask(b)),
              oracle::mask(oracle::op(nt, oracle::full(nt), b)));
    EXPECT_EQ(compose(t, oracle::mask(a), t.all()),
              oracle::mask(oracle::op(nt, a, oracle::full(nt))));
  }
}

TEST(Core, RowAndColumnUnions) {
  auto t = support::load("A5");
  for (Element a = 0; a < t.order(); ++a) {
    EXPECT_EQ(t.row_union(a), compose(t, SubsetMask::singleton(a), t.all()));
    EXPECT_EQ(t.column_union(a), compose(t, t.all(), SubsetMask::singleton(a)));
  }
}

TEST(Core, SubsetMaskBasics) {
  SubsetMask m = SubsetMask::singleton(1) | SubsetMask::singleton(4);
  EXPECT_EQ(m.size(), 2u);
  EXPECT_EQ(m.first(), 1u);
  EXPECT_TRUE(m.contains(4));
  EXPECT_FALSE(m.within(4));
  EXPECT_TRUE(m.within(5));
  std::vector<Element> elems(m.begin(), m.end());
  EXPECT_EQ(elems, (std::vector<Element>{1, 4}));
  EXPECT_EQ(SubsetMask::full(32).size(), 32u);
  EXPECT_EQ((m - SubsetMask::singleton(1)), SubsetMask::singleton(4));
}

TEST(Core, ErrorCodeNames) {
  EXPECT_EQ(error_code_name(ErrorCode::NotLaSemihypergroup), "NotLaShg");
  EXPECT_EQ(error_code_name(ErrorCode::EmptyCell), "EmptyCell");
}
