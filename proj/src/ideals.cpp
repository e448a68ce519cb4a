#include "hyperlaw/ideals.hpp"

#include <algorithm>
#include <string>

namespace hyperlaw {

std::string_view ideal_kind_name(IdealKind kind) noexcept {
  switch (kind) {
    case IdealKind::Sub: return "sub";
    case IdealKind::Left: return "left";
    case IdealKind::Right: return "right";
    case IdealKind::TwoSided: return "twoSided";
    case IdealKind::Bi: return "bi";
    case IdealKind::GeneralizedBi: return "generalizedBi";
    case IdealKind::Interior: return "interior";
    case IdealKind::Quasi: return "quasi";
    case IdealKind::OneTwo: return "oneTwo";
    case IdealKind::Semiprime: return "semiprime";
    case IdealKind::Idempotent: return "idempotent";
  }
  return "";
}

std::optional<IdealKind> parse_ideal_kind(std::string_view name) {
  for (IdealKind k : kAllIdealKinds) {
    if (ideal_kind_name(k) == name) {
      return k;
    }
  }
  return std::nullopt;
}

void require_exhaustive_order(HyperTable const& t) {
  if (t.order() > kMaxExhaustiveOrder) {
    throw Error(ErrorCode::OrderTooLargeForExhaustive,
                "subset scans need order <= "
                    + std::to_string(kMaxExhaustiveOrder),
                {static_cast<std::int64_t>(t.order())});
  }
}

namespace {

  std::string role(IdealKind kind) { return std::string(ideal_kind_name(kind)); }

  IdealVerdict pass(IdealKind kind, SubsetMask a) { return {kind, a, true, {}}; }

  IdealVerdict fail(IdealKind kind, SubsetMask a, std::vector<Element> elems,
                    SubsetMask product) {
    elems.push_back((product - a).first());
    return {kind, a, false, WitnessTuple{role(kind), std::move(elems), product, a}};
  }

  // x∘y ⊆ A for all x, y ∈ A.
  std::optional<IdealVerdict> sub_failure(HyperTable const& t, IdealKind kind,
                                          SubsetMask a) {
    for (Element x : a) {
      for (Element y : a) {
        if (!t.cell(x, y).subset_of(a)) {
          return fail(kind, a, {x, y}, t.cell(x, y));
        }
      }
    }
    return std::nullopt;
  }

  std::optional<IdealVerdict> left_failure(HyperTable const& t, IdealKind kind,
                                           SubsetMask a) {
    for (Element y : a) {
      if (!t.column_union(y).subset_of(a)) {
        for (Element h = 0; h < t.order(); ++h) {
          if (!t.cell(h, y).subset_of(a)) {
            return fail(kind, a, {h, y}, t.cell(h, y));
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<IdealVerdict> right_failure(HyperTable const& t,
                                            IdealKind kind, SubsetMask a) {
    for (Element x : a) {
      if (!t.row_union(x).subset_of(a)) {
        for (Element h = 0; h < t.order(); ++h) {
          if (!t.cell(x, h).subset_of(a)) {
            return fail(kind, a, {x, h}, t.cell(x, h));
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<IdealVerdict> contained(IdealKind kind, SubsetMask a,
                                        SubsetMask product) {
    if (!product.subset_of(a)) {
      return fail(kind, a, {}, product);
    }
    return std::nullopt;
  }

}  // namespace

IdealVerdict is_ideal(HyperTable const& t, IdealKind kind, SubsetMask a) {
  if (a.empty()) {
    throw Error(ErrorCode::EmptyOperand, "hyperideal candidate is empty");
  }
  if (!a.within(t.order())) {
    throw Error(ErrorCode::IndexOutOfRange,
                "subset has bits outside the table order");
  }
  SubsetMask const h = t.all();
  std::optional<IdealVerdict> bad;
  switch (kind) {
    case IdealKind::Sub: bad = sub_failure(t, kind, a); break;
    case IdealKind::Left: bad = left_failure(t, kind, a); break;
    case IdealKind::Right: bad = right_failure(t, kind, a); break;
    case IdealKind::TwoSided:
      bad = left_failure(t, kind, a);
      if (!bad) {
        bad = right_failure(t, kind, a);
      }
      break;
    case IdealKind::Bi:
      bad = sub_failure(t, kind, a);
      if (!bad) {
        bad = contained(kind, a, compose(t, compose(t, a, h), a));
      }
      break;
    case IdealKind::GeneralizedBi:
      bad = contained(kind, a, compose(t, compose(t, a, h), a));
      break;
    case IdealKind::Interior:
      bad = sub_failure(t, kind, a);
      if (!bad) {
        bad = contained(kind, a, compose(t, compose(t, h, a), h));
      }
      break;
    case IdealKind::Quasi:
      bad = contained(kind, a, compose(t, a, h) & compose(t, h, a));
      break;
    case IdealKind::OneTwo:
      bad = sub_failure(t, kind, a);
      if (!bad) {
        bad = contained(kind, a,
                        compose(t, compose(t, a, h), compose(t, a, a)));
      }
      break;
    case IdealKind::Semiprime:
      for (Element x = 0; x < t.order() && !bad; ++x) {
        SubsetMask const sq = t.cell(x, x);
        if (sq.subset_of(a) && !a.contains(x)) {
          bad = IdealVerdict{kind, a, false,
                             WitnessTuple{role(kind), {x}, sq, a}};
        }
      }
      break;
    case IdealKind::Idempotent: {
      SubsetMask const aa = compose(t, a, a);
      if (aa != a) {
        Element const e = (aa - a).empty() ? (a - aa).first() : (aa - a).first();
        bad = IdealVerdict{kind, a, false, WitnessTuple{role(kind), {e}, aa, a}};
      }
      break;
    }
  }
  return bad ? *bad : pass(kind, a);
}

std::vector<SubsetMask> enumerate_ideals(HyperTable const& t, IdealKind kind) {
  require_exhaustive_order(t);
  std::uint64_t const     top = t.all().bits();
  std::vector<SubsetMask> out;
  for (std::uint64_t bits = 1; bits <= top; ++bits) {
    SubsetMask const a(static_cast<std::uint32_t>(bits));
    if (is_ideal(t, kind, a).holds) {
      out.push_back(a);
    }
  }
  return out;
}

std::vector<SubsetMask> minimal_members(std::vector<SubsetMask> const& family) {
  std::vector<SubsetMask> out;
  for (SubsetMask a : family) {
    bool const has_smaller = std::any_of(
        family.begin(), family.end(),
        [a](SubsetMask b) { return b != a && b.subset_of(a); });
    if (!has_smaller) {
      out.push_back(a);
    }
  }
  return out;
}

std::vector<SubsetMask> minimal_ideals(HyperTable const& t, IdealKind kind) {
  return minimal_members(enumerate_ideals(t, kind));
}

PrincipalSets principal_sets(HyperTable const& t, Element a) {
  check_element(t, a);
  SubsetMask const h  = t.all();
  SubsetMask const sa = SubsetMask::singleton(a);
  SubsetMask const a2 = square(t, a);
  return {compose(t, h, sa), compose(t, sa, h), compose(t, a2, h),
          compose(t, h, a2)};
}

}  // namespace hyperlaw
