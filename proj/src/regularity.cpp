#include "hyperlaw/regularity.hpp"

#include <string>

#include "hyperlaw/laws.hpp"

namespace hyperlaw {

IntraRegularityReport intra_regular(HyperTable const& t) {
  std::size_t const     n = t.order();
  IntraRegularityReport report;
  report.witnesses.resize(n);
  for (Element a = 0; a < n; ++a) {
    SubsetMask const a2 = t.cell(a, a);
    for (Element x = 0; x < n && !report.witnesses[a]; ++x) {
      SubsetMask const left = compose(t, SubsetMask::singleton(x), a2);
      // Skip the y scan when (x∘a²)∘H misses a.
      if (!compose(t, left, t.all()).contains(a)) {
        continue;
      }
      for (Element y = 0; y < n; ++y) {
        if (compose(t, left, SubsetMask::singleton(y)).contains(a)) {
          report.witnesses[a] = std::make_pair(x, y);
          break;
        }
      }
    }
    if (!report.witnesses[a] && report.intra_regular) {
      report.intra_regular = false;
      report.first_failing = a;
    }
  }
  return report;
}

bool verify_intra_witness(HyperTable const& t, Element a, Element x,
                          Element y) {
  check_element(t, a);
  check_element(t, x);
  check_element(t, y);
  SubsetMask const inner = compose(t, SubsetMask::singleton(x), square(t, a));
  return compose(t, inner, SubsetMask::singleton(y)).contains(a);
}

InvertibilityReport invertibility(HyperTable const& t, Element e) {
  check_element(t, e);
  if (!classify_identities(t).flags[e].left_identity) {
    throw Error(ErrorCode::NotAnIdentity,
                "element " + t.label(e) + " is not a left identity",
                {static_cast<std::int64_t>(e)});
  }
  std::size_t const   n = t.order();
  SubsetMask const    se = SubsetMask::singleton(e);
  InvertibilityReport r;
  r.identity = e;
  r.left_inverse.resize(n);
  r.pure_left_inverse.resize(n);
  r.right_inverse.resize(n);
  r.pure_right_inverse.resize(n);
  for (Element a = 0; a < n; ++a) {
    for (Element u = 0; u < n; ++u) {
      if (!r.left_inverse[a] && t.cell(u, a).contains(e)) {
        r.left_inverse[a] = u;
      }
      if (!r.pure_left_inverse[a] && t.cell(u, a) == se) {
        r.pure_left_inverse[a] = u;
      }
      if (!r.right_inverse[a] && t.cell(a, u).contains(e)) {
        r.right_inverse[a] = u;
      }
      if (!r.pure_right_inverse[a] && t.cell(a, u) == se) {
        r.pure_right_inverse[a] = u;
      }
    }
    r.left_invertible       = r.left_invertible && r.left_inverse[a];
    r.right_invertible      = r.right_invertible && r.right_inverse[a];
    r.pure_left_invertible  = r.pure_left_invertible && r.pure_left_inverse[a];
    r.pure_right_invertible = r.pure_right_invertible && r.pure_right_inverse[a];
  }
  r.invertible = r.left_invertible && r.right_invertible;
  return r;
}

}  // namespace hyperlaw
