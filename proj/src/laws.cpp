#include "hyperlaw/laws.hpp"

#include <string>

namespace hyperlaw {

namespace {

  using Shape = LawSide::Shape;

  // Variables are numbered x=0, y=1, z=2, w=3.
  LawEquation const kEquations[] = {
      // LeftInvertive
      {3, {Shape::LeftNested, {0, 1, 2, 0}}, {Shape::LeftNested, {2, 1, 0, 0}}},
      // Medial
      {4, {Shape::PairOfPairs, {0, 1, 2, 3}},
       {Shape::PairOfPairs, {0, 2, 1, 3}}},
      // Paramedial
      {4, {Shape::PairOfPairs, {0, 1, 2, 3}},
       {Shape::PairOfPairs, {3, 1, 2, 0}}},
      // Associative
      {3, {Shape::LeftNested, {0, 1, 2, 0}},
       {Shape::RightNested, {0, 1, 2, 0}}},
      // Commutative
      {2, {Shape::Pair, {0, 1, 0, 0}}, {Shape::Pair, {1, 0, 0, 0}}},
      // LeftExchange
      {3, {Shape::RightNested, {0, 1, 2, 0}},
       {Shape::RightNested, {1, 0, 2, 0}}},
      // SemihypergroupCriterion
      {3, {Shape::RightNested, {0, 1, 2, 0}},
       {Shape::LeftNested, {2, 1, 0, 0}}},
  };

  bool next_tuple(std::vector<Element>& tuple, std::size_t n) {
    for (std::size_t i = tuple.size(); i-- > 0;) {
      if (++tuple[i] < n) {
        return true;
      }
      tuple[i] = 0;
    }
    return false;
  }

}  // namespace

std::string_view law_name(LawId law) noexcept {
  switch (law) {
    case LawId::LeftInvertive: return "leftInvertive";
    case LawId::Medial: return "medial";
    case LawId::Paramedial: return "paramedial";
    case LawId::Associative: return "associative";
    case LawId::Commutative: return "commutative";
    case LawId::LeftExchange: return "leftExchange";
    case LawId::SemihypergroupCriterion: return "semihypergroupCriterion";
  }
  return "";
}

std::optional<LawId> parse_law(std::string_view name) {
  for (LawId law : kAllLaws) {
    if (law_name(law) == name) {
      return law;
    }
  }
  return std::nullopt;
}

LawEquation const& equation(LawId law) {
  return kEquations[static_cast<std::size_t>(law)];
}

LawSides evaluate_law(HyperTable const& t, LawId law,
                      std::span<Element const> tuple) {
  auto const& eq = equation(law);
  if (tuple.size() != eq.arity) {
    throw Error(ErrorCode::IndexOutOfRange,
                std::string(law_name(law)) + " takes "
                    + std::to_string(eq.arity) + " elements");
  }
  for (Element e : tuple) {
    check_element(t, e);
  }
  auto op   = [&t](SubsetMask a, SubsetMask b) { return compose(t, a, b); };
  auto leaf = [](Element e) { return SubsetMask::singleton(e); };
  return {evaluate_side(eq.lhs, tuple, op, leaf),
          evaluate_side(eq.rhs, tuple, op, leaf)};
}

LawVerdict check_law(HyperTable const& t, LawId law) {
  auto const&          eq = equation(law);
  std::vector<Element> tuple(eq.arity, 0);
  auto op   = [&t](SubsetMask a, SubsetMask b) { return compose(t, a, b); };
  auto leaf = [](Element e) { return SubsetMask::singleton(e); };
  do {
    SubsetMask const lhs = evaluate_side(eq.lhs, tuple, op, leaf);
    SubsetMask const rhs = evaluate_side(eq.rhs, tuple, op, leaf);
    if (lhs != rhs) {
      return {law, false,
              WitnessTuple{std::string(law_name(law)), tuple, lhs, rhs}};
    }
  } while (next_tuple(tuple, t.order()));
  return {law, true, std::nullopt};
}

LawVerdict is_la_semihypergroup(HyperTable const& t) {
  return check_law(t, LawId::LeftInvertive);
}

namespace {

  std::vector<Element> select(std::vector<IdentityFlags> const& flags,
                              bool IdentityFlags::*member) {
    std::vector<Element> out;
    for (std::size_t e = 0; e < flags.size(); ++e) {
      if (flags[e].*member) {
        out.push_back(static_cast<Element>(e));
      }
    }
    return out;
  }

}  // namespace

std::vector<Element> IdentityProfile::left_identities() const {
  return select(flags, &IdentityFlags::left_identity);
}
std::vector<Element> IdentityProfile::pure_left_identities() const {
  return select(flags, &IdentityFlags::pure_left_identity);
}
std::vector<Element> IdentityProfile::right_identities() const {
  return select(flags, &IdentityFlags::right_identity);
}
std::vector<Element> IdentityProfile::pure_right_identities() const {
  return select(flags, &IdentityFlags::pure_right_identity);
}
std::vector<Element> IdentityProfile::zeros() const {
  return select(flags, &IdentityFlags::zero);
}

IdentityProfile classify_identities(HyperTable const& t) {
  std::size_t const n = t.order();
  IdentityProfile   profile;
  profile.flags.resize(n);
  for (Element e = 0; e < n; ++e) {
    IdentityFlags f;
    f.left_identity = f.pure_left_identity = true;
    f.right_identity = f.pure_right_identity = true;
    f.pure_identity = f.zero = true;
    for (Element a = 0; a < n; ++a) {
      SubsetMask const ea = t.cell(e, a);
      SubsetMask const ae = t.cell(a, e);
      SubsetMask const sa = SubsetMask::singleton(a);
      SubsetMask const se = SubsetMask::singleton(e);
      f.left_identity       = f.left_identity && ea.contains(a);
      f.pure_left_identity  = f.pure_left_identity && ea == sa;
      f.right_identity      = f.right_identity && ae.contains(a);
      f.pure_right_identity = f.pure_right_identity && ae == sa;
      f.pure_identity       = f.pure_identity && (ea & ae) == sa;
      f.zero                = f.zero && ea == se && ae == se;
    }
    f.identity         = f.left_identity && f.right_identity;
    profile.flags[e] = f;
  }
  return profile;
}

}  // namespace hyperlaw
