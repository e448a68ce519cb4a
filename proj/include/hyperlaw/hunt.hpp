#pragma once

#include <cstdint>
#include <optional>

#include "hyperlaw/theorems.hpp"

namespace hyperlaw {

struct HuntQuery {
  TheoremId     id    = TheoremId::T10;
  std::size_t   order = 4;
  std::uint64_t budget = 100'000;  // search nodes over the whole hunt
  std::uint64_t seed   = 0;
  // Nodes one sampled table may spend before the next sample starts.
  std::uint64_t sample_budget = 10'000;
};

struct HuntResult {
  std::optional<TheoremVerdict> found;
  std::uint64_t                 nodes    = 0;
  std::uint64_t                 samples  = 0;
  std::uint64_t                 distinct = 0;  // canonical tables checked
};

// Samples LA-semihypergroups, reduces each to its canonical form and runs
// check_converse on every new form until a counterexample turns up or the
// node budget is spent. Deterministic in (order, budget, seed).
HuntResult hunt_converse(HuntQuery const& q);

}  // namespace hyperlaw
