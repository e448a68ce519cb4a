#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hyperlaw/error.hpp"

namespace hyperlaw {

using Element = std::uint32_t;

inline constexpr std::size_t kMaxOrder = 32;

// A subset of {0, ..., n-1} packed into one machine word. The order n is
// carried by the table the mask is used with.
class SubsetMask {
 public:
  class iterator {
   public:
    using value_type      = Element;
    using difference_type = std::ptrdiff_t;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint32_t rest) : _rest(rest) {}

    constexpr Element operator*() const {
      return static_cast<Element>(std::countr_zero(_rest));
    }
    constexpr iterator& operator++() {
      _rest &= _rest - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(iterator const&) const = default;

   private:
    std::uint32_t _rest = 0;
  };

  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint32_t bits) : _bits(bits) {}

  static constexpr SubsetMask singleton(Element e) {
    return SubsetMask(std::uint32_t{1} << e);
  }
  static constexpr SubsetMask full(std::size_t n) {
    return SubsetMask(n >= 32 ? ~std::uint32_t{0}
                              : (std::uint32_t{1} << n) - 1);
  }

  constexpr std::uint32_t bits() const noexcept { return _bits; }
  constexpr bool          empty() const noexcept { return _bits == 0; }
  constexpr std::size_t   size() const noexcept {
    return static_cast<std::size_t>(std::popcount(_bits));
  }
  constexpr bool contains(Element e) const noexcept {
    return e < 32 && ((_bits >> e) & 1U) != 0;
  }
  constexpr bool subset_of(SubsetMask other) const noexcept {
    return (_bits & ~other._bits) == 0;
  }
  // Lowest element; the mask must be nonempty.
  constexpr Element first() const {
    return static_cast<Element>(std::countr_zero(_bits));
  }
  // True if no bit at index >= n is set.
  constexpr bool within(std::size_t n) const noexcept {
    return subset_of(full(n));
  }

  constexpr iterator begin() const { return iterator(_bits); }
  constexpr iterator end() const { return iterator(0); }

  constexpr SubsetMask operator|(SubsetMask o) const {
    return SubsetMask(_bits | o._bits);
  }
  constexpr SubsetMask operator&(SubsetMask o) const {
    return SubsetMask(_bits & o._bits);
  }
  constexpr SubsetMask operator-(SubsetMask o) const {
    return SubsetMask(_bits & ~o._bits);
  }
  constexpr SubsetMask& operator|=(SubsetMask o) {
    _bits |= o._bits;
    return *this;
  }
  constexpr SubsetMask& operator&=(SubsetMask o) {
    _bits &= o._bits;
    return *this;
  }

  constexpr bool operator==(SubsetMask const&) const  = default;
  constexpr auto operator<=>(SubsetMask const&) const = default;

 private:
  std::uint32_t _bits = 0;
};

// Raw, unvalidated input for `validate`. `cells` is row-major with n*n
// entries; each entry lists element indices (duplicates allowed).
struct RawTable {
  std::size_t                        order = 0;
  std::vector<std::vector<long long>> cells;
  std::vector<std::string>           labels;
};

class HyperTable;

HyperTable validate(RawTable const& raw);

// Validates a table given directly as masks. Empty `labels` means "0".."n-1".
HyperTable make_table(std::size_t order, std::vector<SubsetMask> cells,
                      std::vector<std::string> labels = {});

std::vector<std::string> default_labels(std::size_t order);

// An immutable finite hypergroupoid: every cell is a nonempty subset of H.
class HyperTable {
 public:
  std::size_t order() const noexcept { return _order; }
  SubsetMask  all() const noexcept { return SubsetMask::full(_order); }

  SubsetMask cell(Element a, Element b) const {
    return _cells[a * _order + b];
  }
  std::span<SubsetMask const> cells() const noexcept { return _cells; }
  std::vector<std::string> const& labels() const noexcept { return _labels; }
  std::string const& label(Element a) const { return _labels.at(a); }

  // a∘H and H∘b.
  SubsetMask row_union(Element a) const { return _row_union[a]; }
  SubsetMask column_union(Element b) const { return _column_union[b]; }

  // Equality ignores labels: two tables are equal if their cells agree.
  bool same_cells(HyperTable const& other) const {
    return _order == other._order && _cells == other._cells;
  }
  bool operator==(HyperTable const& other) const {
    return same_cells(other) && _labels == other._labels;
  }

 private:
  friend HyperTable make_table(std::size_t, std::vector<SubsetMask>,
                               std::vector<std::string>);
  HyperTable() = default;

  std::size_t              _order = 0;
  std::vector<SubsetMask>  _cells;
  std::vector<std::string> _labels;
  std::vector<SubsetMask>  _row_union;
  std::vector<SubsetMask>  _column_union;
};

// Set-lifted composition A∘B = ⋃ a∘b over a∈A, b∈B.
SubsetMask compose(HyperTable const& t, SubsetMask a, SubsetMask b);

// a∘a
SubsetMask square(HyperTable const& t, Element a);

// Throws IndexOutOfRange unless a < order.
void check_element(HyperTable const& t, Element a);

// A replayable certificate of a violated equation or containment: up to four
// element indices plus the two sides that differ.
struct WitnessTuple {
  std::string          role;
  std::vector<Element> elements;
  SubsetMask           lhs;
  SubsetMask           rhs;

  bool operator==(WitnessTuple const&) const = default;
};

std::string format_mask(HyperTable const& t, SubsetMask m);

}  // namespace hyperlaw
