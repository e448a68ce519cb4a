#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hyperlaw/core.hpp"

namespace hyperlaw {

enum class LawId {
  LeftInvertive,            // (x∘y)∘z = (z∘y)∘x
  Medial,                   // (x∘y)∘(z∘w) = (x∘z)∘(y∘w)
  Paramedial,               // (x∘y)∘(z∘w) = (w∘y)∘(z∘x)
  Associative,              // (x∘y)∘z = x∘(y∘z)
  Commutative,              // x∘y = y∘x
  LeftExchange,             // x∘(y∘z) = y∘(x∘z)
  SemihypergroupCriterion,  // x∘(y∘z) = (z∘y)∘x
};

inline constexpr std::array<LawId, 7> kAllLaws = {
    LawId::LeftInvertive, LawId::Medial,       LawId::Paramedial,
    LawId::Associative,   LawId::Commutative,  LawId::LeftExchange,
    LawId::SemihypergroupCriterion};

// camelCase names used in reports and on the command line.
std::string_view     law_name(LawId law) noexcept;
std::optional<LawId> parse_law(std::string_view name);

// One side of a law: a product of at most four variables in one of four
// bracketings.
struct LawSide {
  enum class Shape { Pair, LeftNested, RightNested, PairOfPairs };
  Shape                       shape;
  std::array<std::uint8_t, 4> vars;
};

struct LawEquation {
  std::size_t arity;
  LawSide     lhs;
  LawSide     rhs;
};

LawEquation const& equation(LawId law);

// Evaluates one side with `op` as the binary operation and `leaf` mapping a
// variable's element to a value. Used both for full tables and for partial
// tables during enumeration, where values are optional.
template <typename Op, typename Leaf>
auto evaluate_side(LawSide const& side, std::span<Element const> tuple,
                   Op&& op, Leaf&& leaf) {
  auto v = [&](std::size_t i) { return leaf(tuple[side.vars[i]]); };
  switch (side.shape) {
    case LawSide::Shape::Pair: return op(v(0), v(1));
    case LawSide::Shape::LeftNested: return op(op(v(0), v(1)), v(2));
    case LawSide::Shape::RightNested: return op(v(0), op(v(1), v(2)));
    case LawSide::Shape::PairOfPairs:
    default: return op(op(v(0), v(1)), op(v(2), v(3)));
  }
}

struct LawSides {
  SubsetMask lhs;
  SubsetMask rhs;
};

// Both sides of `law` at one tuple of `equation(law).arity` elements.
LawSides evaluate_law(HyperTable const& t, LawId law,
                      std::span<Element const> tuple);

struct LawVerdict {
  LawId                       law;
  bool                        holds = true;
  std::optional<WitnessTuple> witness;
};

// Scans tuples in lexicographic order; the witness is the first violation.
LawVerdict check_law(HyperTable const& t, LawId law);

// The left invertive law under its structural name.
LawVerdict is_la_semihypergroup(HyperTable const& t);

struct IdentityFlags {
  bool left_identity       = false;
  bool pure_left_identity  = false;
  bool right_identity      = false;
  bool pure_right_identity = false;
  bool identity            = false;
  bool pure_identity       = false;
  bool zero                = false;

  bool operator==(IdentityFlags const&) const = default;
};

struct IdentityProfile {
  std::vector<IdentityFlags> flags;

  std::vector<Element> left_identities() const;
  std::vector<Element> pure_left_identities() const;
  std::vector<Element> right_identities() const;
  std::vector<Element> pure_right_identities() const;
  std::vector<Element> zeros() const;
};

IdentityProfile classify_identities(HyperTable const& t);

}  // namespace hyperlaw
