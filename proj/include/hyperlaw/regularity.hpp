#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hyperlaw/core.hpp"

namespace hyperlaw {

// An element a is intra-regular when a ∈ (x∘a²)∘y for some x, y.
struct IntraRegularityReport {
  std::vector<std::optional<std::pair<Element, Element>>> witnesses;
  bool                                                    intra_regular = true;
  std::optional<Element>                                  first_failing;
};

// Witnesses are the first (x, y) pair in lexicographic order.
IntraRegularityReport intra_regular(HyperTable const& t);

bool verify_intra_witness(HyperTable const& t, Element a, Element x, Element y);

// Inverses relative to a left identity e. A left inverse of a is some u with
// e ∈ u∘a; a pure left inverse has u∘a = {e}. Right inverses use a∘u.
struct InvertibilityReport {
  Element                             identity = 0;
  std::vector<std::optional<Element>> left_inverse;
  std::vector<std::optional<Element>> pure_left_inverse;
  std::vector<std::optional<Element>> right_inverse;
  std::vector<std::optional<Element>> pure_right_inverse;
  bool left_invertible       = true;
  bool right_invertible      = true;
  bool invertible            = true;
  bool pure_left_invertible  = true;
  bool pure_right_invertible = true;
};

// Throws NotAnIdentity unless e is a left identity of t.
InvertibilityReport invertibility(HyperTable const& t, Element e);

}  // namespace hyperlaw
