#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperlaw/core.hpp"

namespace hyperlaw {

// Executable statements about LA-semihypergroups, checked one table at a
// time. Each ID is a hypothesis → conclusion pair:
//
//   T1   medial law holds
//   T2   pure left identity ⇒ x∘(y∘z) = y∘(x∘z)
//   T3   pure left identity ⇒ paramedial law
//   T4   left identity ⇒ H∘H = H
//   T5   pure left identity e ⇒ H∘H = H = e∘H = H∘e
//   T6   pure right identity e ⇒ e pure (left) identity, commutative,
//        associative
//   T7   associative ⇔ a∘(b∘c) = (c∘b)∘a
//   T8   pure left identity, left or right invertible ⇒ intra-regular
//   T9   left identity, all H∘a = H or all a∘H = H ⇒ intra-regular; and
//        all a∘H = H ⇒ all H∘a = H
//   T10  intra-regular, pure left identity ⇒ (B∘H)∘B = B, B generalized bi
//   T11  same ⇒ (H∘B)∘H = B, B interior
//   T12  pure left identity, L∪R = L∘R for all left L, semiprime right R
//        ⇒ intra-regular
//   T13  intra-regular ⇒ H∘H = H
//   T14  pure left identity, pure left invertible:
//        intra-regular ⇔ R∩L = R∘L for all right R, left L
//   T15  intra-regular, left identity ⇒ two-sided hyperideals idempotent
//   T16  left identity: intra-regular ⇔ A = (H∘A)² for all left A
//   T17  intra-regular, pure left identity: bi(A) ⇔ (A∘H)∘A = A = A²
//   T18  same: quasi(A) ⇔ H∘A ∩ A∘H = A
//   T19  same: interior(A) ⇔ (H∘A)∘H = A
//   T20  same: (1,2)(A) ⇔ (A∘H)∘A² = A = A²
//   T21  same: left(A) ⇔ right(A)
//   T22  same: (1,2)(A) ⇔ two-sided(A)
//   T23  same: two-sided(A) ⇔ quasi(A)
//   T24  same: two-sided Q minimal ⇔ Q = I∩J, I and J minimal two-sided
//   T25a pure left identity ⇒ right hyperideals are bi-hyperideals
//   T25b pure left identity ⇒ I∘I two-sided for left I
//   T25c nonempty intersections of (generalized) bi-hyperideals are
//        (generalized) bi-hyperideals
enum class TheoremId {
  T1, T2, T3, T4, T5, T6, T7, T8, T9, T10, T11, T12, T13, T14, T15, T16,
  T17, T18, T19, T20, T21, T22, T23, T24, T25a, T25b, T25c,
};

inline constexpr std::size_t kTheoremCount = 27;

std::array<TheoremId, kTheoremCount> const& all_theorems();

std::string_view         theorem_name(TheoremId id) noexcept;
std::string_view         theorem_statement(TheoremId id) noexcept;
std::optional<TheoremId> parse_theorem(std::string_view name);

struct TheoremOptions {
  // T9 hypothesis read per element: ∀a (H∘a = H ∨ a∘H = H).
  bool strict_t9 = false;
  // T14 inverse read as e ∈ a′∘a instead of a′∘a = {e}.
  bool membership_t14 = false;

  bool operator==(TheoremOptions const&) const = default;
};

enum class Outcome { Holds, Vacuous, Counterexample };

std::string_view outcome_name(Outcome o) noexcept;

struct Certificate {
  HyperTable              table;
  std::string             clause;
  std::string             direction;  // "forward", "backward" or empty
  std::vector<SubsetMask> subsets;
  std::vector<Element>    elements;
  SubsetMask              lhs;
  SubsetMask              rhs;
};

struct DirectionResult {
  std::string name;
  bool        holds = true;
};

struct TheoremVerdict {
  TheoremId                    id;
  bool                         converse = false;
  TheoremOptions               options;
  Outcome                      outcome = Outcome::Holds;
  std::string                  reason;  // failed hypothesis clause(s)
  std::optional<Certificate>   certificate;
  std::vector<DirectionResult> directions;
  std::vector<std::string>     notes;
};

// Throws NotLaSemihypergroup unless t satisfies the left invertive law.
TheoremVerdict run_theorem(HyperTable const& t, TheoremId id,
                           TheoremOptions const& options = {});

std::vector<TheoremVerdict> run_all(HyperTable const& t,
                                    TheoremOptions const& options = {});

// Converse of T10 or T11: a counterexample is a table failing the hypothesis
// while some B of the relevant kind satisfies the conclusion's equation. The
// certificate lists every such B.
TheoremVerdict check_converse(HyperTable const& t, TheoremId id);

// Rebuilds the claim in a Counterexample verdict from scratch: the
// hypothesis is re-evaluated and the recorded instance re-checked. Returns
// false for anything that is not a reproducible counterexample.
bool replay_certificate(TheoremVerdict const& verdict);

struct TheoremTally {
  std::size_t holds           = 0;
  std::size_t vacuous         = 0;
  std::size_t counterexamples = 0;

  std::size_t non_vacuous() const { return holds + counterexamples; }
};

// Aggregates verdicts over many tables.
class SweepSummary {
 public:
  void add(std::vector<TheoremVerdict> const& verdicts);
  void merge(SweepSummary const& other);

  std::size_t         tables() const { return _tables; }
  TheoremTally const& tally(TheoremId id) const {
    return _tallies[static_cast<std::size_t>(id)];
  }
  std::vector<TheoremVerdict> const& counterexamples() const {
    return _counterexamples;
  }
  // Theorems whose hypothesis was never satisfied.
  std::vector<TheoremId> never_satisfied() const;

 private:
  std::size_t                               _tables = 0;
  std::array<TheoremTally, kTheoremCount> _tallies{};
  std::vector<TheoremVerdict>               _counterexamples;
};

}  // namespace hyperlaw
