#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "hyperlaw/core.hpp"

namespace hyperlaw {

enum class IdealKind {
  Sub,            // A∘A ⊆ A
  Left,           // H∘A ⊆ A
  Right,          // A∘H ⊆ A
  TwoSided,       // Left and Right
  Bi,             // Sub and (A∘H)∘A ⊆ A
  GeneralizedBi,  // (A∘H)∘A ⊆ A
  Interior,       // Sub and (H∘A)∘H ⊆ A
  Quasi,          // A∘H ∩ H∘A ⊆ A
  OneTwo,         // Sub and (A∘H)∘A² ⊆ A
  Semiprime,      // a² ⊆ A implies a ∈ A
  Idempotent,     // A∘A = A
};

inline constexpr std::array<IdealKind, 11> kAllIdealKinds = {
    IdealKind::Sub,      IdealKind::Left,          IdealKind::Right,
    IdealKind::TwoSided, IdealKind::Bi,            IdealKind::GeneralizedBi,
    IdealKind::Interior, IdealKind::Quasi,         IdealKind::OneTwo,
    IdealKind::Semiprime, IdealKind::Idempotent};

std::string_view         ideal_kind_name(IdealKind kind) noexcept;
std::optional<IdealKind> parse_ideal_kind(std::string_view name);

// Largest order for which the 2^n subset scans are attempted.
inline constexpr std::size_t kMaxExhaustiveOrder = 22;

struct IdealVerdict {
  IdealKind                   kind;
  SubsetMask                  subset;
  bool                        holds = true;
  std::optional<WitnessTuple> witness;
};

// When the check fails, witness.lhs is the offending product set,
// witness.rhs is A, and the last entry of witness.elements is an element of
// lhs outside A (for Semiprime: the element a with a² ⊆ A, a ∉ A; for
// Idempotent it may instead be an element of A missing from A∘A).
IdealVerdict is_ideal(HyperTable const& t, IdealKind kind, SubsetMask a);

// All nonempty subsets of the given kind, ascending by mask.
std::vector<SubsetMask> enumerate_ideals(HyperTable const& t, IdealKind kind);

// Inclusion-minimal members of enumerate_ideals(t, kind).
std::vector<SubsetMask> minimal_ideals(HyperTable const& t, IdealKind kind);

std::vector<SubsetMask> minimal_members(std::vector<SubsetMask> const& family);

struct PrincipalSets {
  SubsetMask h_a;    // H∘a
  SubsetMask a_h;    // a∘H
  SubsetMask a2_h;   // a²∘H
  SubsetMask h_a2;   // H∘a²
};

PrincipalSets principal_sets(HyperTable const& t, Element a);

// Throws OrderTooLargeForExhaustive above kMaxExhaustiveOrder.
void require_exhaustive_order(HyperTable const& t);

}  // namespace hyperlaw
