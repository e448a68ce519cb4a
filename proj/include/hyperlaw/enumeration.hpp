#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hyperlaw/core.hpp"
#include "hyperlaw/laws.hpp"

namespace hyperlaw {

enum class StructureFlag {
  HasLeftIdentity,
  HasPureLeftIdentity,
  IntraRegular,
  NotIntraRegular,
};

std::string_view             flag_name(StructureFlag flag) noexcept;
std::optional<StructureFlag> parse_flag(std::string_view name);

bool satisfies(HyperTable const& t, StructureFlag flag);

enum class EnumerationMode { Exhaustive, Sample };

struct EnumerationQuery {
  std::size_t                order = 1;
  std::vector<LawId>         laws  = {LawId::LeftInvertive};
  std::vector<StructureFlag> flags;
  EnumerationMode            mode           = EnumerationMode::Exhaustive;
  std::size_t                sample_count   = 0;
  std::uint64_t              seed           = 0;
  bool                       canonical_only = false;
  std::size_t                jobs           = 1;
  // Search nodes one sample may spend before it is given up.
  std::uint64_t sample_node_budget = 1'000'000;
};

struct EnumerationSummary {
  std::uint64_t emitted        = 0;
  std::uint64_t law_tables     = 0;  // complete tables passing every law
  std::uint64_t nodes          = 0;  // partial tables visited
  std::uint64_t failed_samples = 0;  // samples that ran out of budget
};

// Throws InfeasibleQuery when the query is outside the supported bounds:
// exhaustive mode needs order <= 3, or order 4 with at least one law.
void check_feasible(EnumerationQuery const& q);

using TableSink = std::function<void(HyperTable const&)>;

// Exhaustive mode emits tables in lexicographic order of their cell
// sequences (cells compared as integers), sample mode in sample order. The
// sequence does not depend on q.jobs.
EnumerationSummary enumerate(EnumerationQuery const& q, TableSink const& sink);

std::vector<HyperTable> enumerate_tables(EnumerationQuery const& q);

// One randomized pruned search, as used by sample mode: returns the first
// complete table satisfying every law, or nothing once `node_budget` nodes
// are spent. `nodes_used` receives the number of nodes visited.
std::optional<HyperTable> sample_table(std::size_t order,
                                       std::span<LawId const> laws,
                                       std::uint64_t seed, std::uint64_t index,
                                       std::uint64_t  node_budget,
                                       std::uint64_t& nodes_used);

inline constexpr std::size_t kMaxCanonicalOrder = 8;

// Lexicographically least cell sequence over all relabelings.
struct CanonicalForm {
  std::size_t             order = 0;
  std::vector<SubsetMask> cells;

  HyperTable table() const;

  bool operator==(CanonicalForm const&) const  = default;
  auto operator<=>(CanonicalForm const&) const = default;
};

CanonicalForm canonicalize(HyperTable const& t);
bool          is_canonical(HyperTable const& t);

// Relabels t so that old element i becomes perm[i]; labels travel along.
HyperTable relabel(HyperTable const& t, std::span<Element const> perm);

// x∘y = (y - x) + kℤ_n.
HyperTable gen_coset(std::size_t n, std::size_t k);

// x∘y = {x, y} ∪ kℤ_n.
HyperTable gen_union(std::size_t n, std::size_t k);

}  // namespace hyperlaw
