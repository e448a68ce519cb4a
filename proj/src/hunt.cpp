#include "hyperlaw/hunt.hpp"

#include <array>
#include <set>

#include "hyperlaw/enumeration.hpp"

namespace hyperlaw {

HuntResult hunt_converse(HuntQuery const& q) {
  if (q.id != TheoremId::T10 && q.id != TheoremId::T11) {
    throw Error(ErrorCode::UnsupportedConverse,
                "no converse check for " + std::string(theorem_name(q.id)));
  }
  if (q.order < 1 || q.order > kMaxCanonicalOrder) {
    throw Error(ErrorCode::InfeasibleQuery,
                "hunt needs order in 1.." + std::to_string(kMaxCanonicalOrder),
                {static_cast<std::int64_t>(q.order)});
  }
  std::array<LawId, 1> const laws{LawId::LeftInvertive};
  std::set<CanonicalForm>    seen;
  HuntResult                 r;
  for (std::uint64_t i = 0; r.nodes < q.budget; ++i) {
    std::uint64_t used  = 0;
    std::uint64_t limit = std::min(q.sample_budget, q.budget - r.nodes);
    auto t = sample_table(q.order, laws, q.seed, i, limit, used);
    r.nodes += used;
    ++r.samples;
    if (!t) {
      continue;
    }
    auto form = canonicalize(*t);
    if (!seen.insert(form).second) {
      continue;
    }
    ++r.distinct;
    auto verdict = check_converse(form.table(), q.id);
    if (verdict.outcome == Outcome::Counterexample) {
      r.found = std::move(verdict);
      break;
    }
  }
  return r;
}

}  // namespace hyperlaw
