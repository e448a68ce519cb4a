#include "hyperlaw/core.hpp"

#include <set>
#include <string>
#include <utility>

namespace hyperlaw {

namespace {

  [[noreturn]] void fail_order(std::size_t n) {
    throw Error(ErrorCode::OrderOutOfBounds,
                "order " + std::to_string(n) + " outside 1.."
                    + std::to_string(kMaxOrder),
                {static_cast<std::int64_t>(n)});
  }

  void check_labels(std::size_t n, std::vector<std::string> const& labels) {
    if (labels.size() != n) {
      throw Error(ErrorCode::OrderOutOfBounds,
                  "expected " + std::to_string(n) + " labels, got "
                      + std::to_string(labels.size()),
                  {static_cast<std::int64_t>(n)});
    }
    std::set<std::string> seen;
    for (auto const& l : labels) {
      if (!seen.insert(l).second) {
        throw Error(ErrorCode::DuplicateLabel, "duplicate label '" + l + "'");
      }
    }
  }

}  // namespace

std::vector<std::string> default_labels(std::size_t order) {
  std::vector<std::string> out;
  out.reserve(order);
  for (std::size_t i = 0; i < order; ++i) {
    out.push_back(std::to_string(i));
  }
  return out;
}

HyperTable validate(RawTable const& raw) {
  std::size_t const n = raw.order;
  if (n < 1 || n > kMaxOrder) {
    fail_order(n);
  }
  if (raw.cells.size() != n * n) {
    throw Error(ErrorCode::OrderOutOfBounds,
                "expected " + std::to_string(n * n) + " cells, got "
                    + std::to_string(raw.cells.size()),
                {static_cast<std::int64_t>(n)});
  }
  std::vector<SubsetMask> cells(n * n);
  for (std::size_t k = 0; k < n * n; ++k) {
    auto const i = static_cast<std::int64_t>(k / n);
    auto const j = static_cast<std::int64_t>(k % n);
    if (raw.cells[k].empty()) {
      throw Error(ErrorCode::EmptyCell,
                  "cell (" + std::to_string(i) + "," + std::to_string(j)
                      + ") is empty",
                  {i, j});
    }
    for (long long e : raw.cells[k]) {
      if (e < 0 || static_cast<std::size_t>(e) >= n) {
        throw Error(ErrorCode::OutOfRange,
                    "cell (" + std::to_string(i) + "," + std::to_string(j)
                        + ") names element " + std::to_string(e),
                    {i, j, e});
      }
      cells[k] |= SubsetMask::singleton(static_cast<Element>(e));
    }
  }
  return make_table(n, std::move(cells), raw.labels);
}

HyperTable make_table(std::size_t order, std::vector<SubsetMask> cells,
                      std::vector<std::string> labels) {
  std::size_t const n = order;
  if (n < 1 || n > kMaxOrder) {
    fail_order(n);
  }
  if (labels.empty()) {
    labels = default_labels(n);
  }
  check_labels(n, labels);
  if (cells.size() != n * n) {
    throw Error(ErrorCode::OrderOutOfBounds,
                "expected " + std::to_string(n * n) + " cells, got "
                    + std::to_string(cells.size()),
                {static_cast<std::int64_t>(n)});
  }
  HyperTable t;
  t._order = n;
  t._row_union.assign(n, SubsetMask());
  t._column_union.assign(n, SubsetMask());
  for (std::size_t k = 0; k < n * n; ++k) {
    auto const i = k / n;
    auto const j = k % n;
    SubsetMask const c = cells[k];
    if (c.empty()) {
      throw Error(ErrorCode::EmptyCell,
                  "cell (" + std::to_string(i) + "," + std::to_string(j)
                      + ") is empty",
                  {static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)});
    }
    if (!c.within(n)) {
      Element const bad = (c - SubsetMask::full(n)).first();
      throw Error(ErrorCode::OutOfRange,
                  "cell (" + std::to_string(i) + "," + std::to_string(j)
                      + ") names element " + std::to_string(bad),
                  {static_cast<std::int64_t>(i), static_cast<std::int64_t>(j),
                   static_cast<std::int64_t>(bad)});
    }
    t._row_union[i] |= c;
    t._column_union[j] |= c;
  }
  t._cells  = std::move(cells);
  t._labels = std::move(labels);
  return t;
}

void check_element(HyperTable const& t, Element a) {
  if (a >= t.order()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "element index " + std::to_string(a) + " outside table of order "
                    + std::to_string(t.order()),
                {static_cast<std::int64_t>(a)});
  }
}

SubsetMask compose(HyperTable const& t, SubsetMask a, SubsetMask b) {
  if (a.empty() || b.empty()) {
    throw Error(ErrorCode::EmptyOperand, "composition with an empty set");
  }
  SubsetMask const h = t.all();
  if (!a.within(t.order()) || !b.within(t.order())) {
    throw Error(ErrorCode::IndexOutOfRange,
                "operand has bits outside the table order");
  }
  SubsetMask out;
  if (b == h) {
    for (Element x : a) {
      out |= t.row_union(x);
    }
    return out;
  }
  if (a == h) {
    for (Element y : b) {
      out |= t.column_union(y);
    }
    return out;
  }
  for (Element x : a) {
    for (Element y : b) {
      out |= t.cell(x, y);
    }
    if (out == h) {
      break;
    }
  }
  return out;
}

SubsetMask square(HyperTable const& t, Element a) {
  check_element(t, a);
  return t.cell(a, a);
}

std::string format_mask(HyperTable const& t, SubsetMask m) {
  std::string out = "{";
  bool        first = true;
  for (Element e : m) {
    if (!first) {
      out += ",";
    }
    first = false;
    out += e < t.order() ? t.label(e) : std::to_string(e);
  }
  out += "}";
  return out;
}

}  // namespace hyperlaw
