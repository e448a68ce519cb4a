#include "hyperlaw/theorems.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "hyperlaw/ideals.hpp"
#include "hyperlaw/laws.hpp"
#include "hyperlaw/regularity.hpp"

namespace hyperlaw {

namespace {

  constexpr std::array<TheoremId, kTheoremCount> kTheorems = {
      TheoremId::T1,   TheoremId::T2,   TheoremId::T3,   TheoremId::T4,
      TheoremId::T5,   TheoremId::T6,   TheoremId::T7,   TheoremId::T8,
      TheoremId::T9,   TheoremId::T10,  TheoremId::T11,  TheoremId::T12,
      TheoremId::T13,  TheoremId::T14,  TheoremId::T15,  TheoremId::T16,
      TheoremId::T17,  TheoremId::T18,  TheoremId::T19,  TheoremId::T20,
      TheoremId::T21,  TheoremId::T22,  TheoremId::T23,  TheoremId::T24,
      TheoremId::T25a, TheoremId::T25b, TheoremId::T25c};

  constexpr std::array<std::string_view, kTheoremCount> kNames = {
      "T1",  "T2",  "T3",  "T4",  "T5",  "T6",  "T7",   "T8",   "T9",
      "T10", "T11", "T12", "T13", "T14", "T15", "T16",  "T17",  "T18",
      "T19", "T20", "T21", "T22", "T23", "T24", "T25a", "T25b", "T25c"};

  constexpr std::array<std::string_view, kTheoremCount> kStatements = {
      "medial law holds",
      "pure left identity => x(yz) = y(xz)",
      "pure left identity => paramedial law",
      "left identity => HH = H",
      "pure left identity e => HH = H = eH = He",
      "pure right identity e => e pure identity, commutative, associative",
      "associative <=> a(bc) = (cb)a",
      "pure left identity, left or right invertible => intra-regular",
      "left identity, all Ha = H or all aH = H => intra-regular; "
      "all aH = H => all Ha = H",
      "intra-regular, pure left identity => (BH)B = B for generalized bi B",
      "intra-regular, pure left identity => (HB)H = B for interior B",
      "pure left identity, L u R = LR for left L, semiprime right R "
      "=> intra-regular",
      "intra-regular => HH = H",
      "pure left identity, pure left invertible: intra-regular <=> "
      "R n L = RL",
      "intra-regular, left identity => two-sided hyperideals idempotent",
      "left identity: intra-regular <=> A = (HA)^2 for left A",
      "intra-regular, pure left identity: bi(A) <=> (AH)A = A = A^2",
      "intra-regular, pure left identity: quasi(A) <=> HA n AH = A",
      "intra-regular, pure left identity: interior(A) <=> (HA)H = A",
      "intra-regular, pure left identity: (1,2)(A) <=> (AH)A^2 = A = A^2",
      "intra-regular, pure left identity: left(A) <=> right(A)",
      "intra-regular, pure left identity: (1,2)(A) <=> two-sided(A)",
      "intra-regular, pure left identity: two-sided(A) <=> quasi(A)",
      "intra-regular, pure left identity: two-sided Q minimal <=> "
      "Q = I n J for minimal I, J",
      "pure left identity => right hyperideals are bi-hyperideals",
      "pure left identity => II two-sided for left I",
      "intersections of (generalized) bi-hyperideals are empty or "
      "(generalized) bi-hyperideals"};

  std::size_t index(TheoremId id) { return static_cast<std::size_t>(id); }

  // Lazily computed facts about one table, shared by hypothesis and
  // conclusion evaluation.
  class Facts {
   public:
    explicit Facts(HyperTable const& table) : t(table), h(table.all()) {}

    HyperTable const& t;
    SubsetMask const  h;

    SubsetMask op(SubsetMask a, SubsetMask b) const { return compose(t, a, b); }

    IdentityProfile const& ids() {
      if (!_ids) {
        _ids = classify_identities(t);
      }
      return *_ids;
    }
    IntraRegularityReport const& intra() {
      if (!_intra) {
        _intra = intra_regular(t);
      }
      return *_intra;
    }
    std::vector<SubsetMask> const& ideals(IdealKind k) {
      auto& slot = _ideals[static_cast<std::size_t>(k)];
      if (!slot) {
        slot = enumerate_ideals(t, k);
      }
      return *slot;
    }
    std::vector<SubsetMask> const& minimal(IdealKind k) {
      auto& slot = _minimal[static_cast<std::size_t>(k)];
      if (!slot) {
        slot = minimal_members(ideals(k));
      }
      return *slot;
    }
    bool has_left_identity() { return !ids().left_identities().empty(); }
    bool has_pure_left_identity() {
      return !ids().pure_left_identities().empty();
    }
    bool is_intra_regular() { return intra().intra_regular; }

   private:
    std::optional<IdentityProfile>       _ids;
    std::optional<IntraRegularityReport> _intra;
    std::array<std::optional<std::vector<SubsetMask>>, kAllIdealKinds.size()>
        _ideals;
    std::array<std::optional<std::vector<SubsetMask>>, kAllIdealKinds.size()>
        _minimal;
  };

  struct Failure {
    std::string             clause;
    std::string             direction;
    std::vector<SubsetMask> subsets;
    std::vector<Element>    elements;
    SubsetMask              lhs;
    SubsetMask              rhs;
  };

  struct Check {
    bool       holds;
    SubsetMask lhs;
    SubsetMask rhs;
  };

  Check equal(SubsetMask lhs, SubsetMask rhs) { return {lhs == rhs, lhs, rhs}; }

  Check kind_check(Facts& f, IdealKind k, SubsetMask a) {
    auto v = is_ideal(f.t, k, a);
    if (v.holds) {
      return {true, a, a};
    }
    return {false, v.witness->lhs, v.witness->rhs};
  }

  // ---------------------------------------------------------------------
  // Clause names used in certificates.
  // ---------------------------------------------------------------------

  constexpr std::string_view kHH            = "H∘H=H";
  constexpr std::string_view kEH            = "e∘H=H";
  constexpr std::string_view kHE            = "H∘e=H";
  constexpr std::string_view kPureLeft      = "e pure left identity";
  constexpr std::string_view kPureIdentity  = "e pure identity";
  constexpr std::string_view kCriterion     = "associative⇔criterion";
  constexpr std::string_view kIntra         = "intra-regular";
  constexpr std::string_view kCorollary     = "H∘a=H";
  constexpr std::string_view kBiEquation    = "(B∘H)∘B=B";
  constexpr std::string_view kIntEquation   = "(H∘B)∘H=B";
  constexpr std::string_view kRightLeft     = "R∩L=R∘L";
  constexpr std::string_view kIdempotent    = "I∘I=I";
  constexpr std::string_view kLeftSquare    = "A=(H∘A)²";
  constexpr std::string_view kEquivalence   = "equivalence";
  constexpr std::string_view kMinimal       = "minimal⇔intersection";
  constexpr std::string_view kRightIsBi     = "right⇒bi";
  constexpr std::string_view kSquareIdeal   = "I∘I two-sided";
  constexpr std::string_view kBiMeet        = "bi intersection";
  constexpr std::string_view kGenBiMeet     = "generalizedBi intersection";
  constexpr std::string_view kLawPrefix     = "law:";
  constexpr std::string_view kConverse      = "converse";

  Failure law_failure(LawVerdict const& v) {
    return {std::string(kLawPrefix) + std::string(law_name(v.law)), "", {},
            v.witness->elements, v.witness->lhs, v.witness->rhs};
  }

  Failure intra_failure(Facts& f, std::string direction = "") {
    Element const a = *f.intra().first_failing;
    SubsetMask const sa = SubsetMask::singleton(a);
    return {std::string(kIntra), std::move(direction), {}, {a},
            f.op(f.op(f.h, square(f.t, a)), f.h), sa};
  }

  // ---------------------------------------------------------------------
  // Subset equivalences T17–T23.
  // ---------------------------------------------------------------------

  using SubsetPredicate = Check (*)(Facts&, SubsetMask);

  struct Equivalence {
    SubsetPredicate lhs;
    SubsetPredicate rhs;
  };

  std::optional<Equivalence> equivalence(TheoremId id) {
    switch (id) {
      case TheoremId::T17:
        return Equivalence{
            [](Facts& f, SubsetMask a) { return kind_check(f, IdealKind::Bi, a); },
            [](Facts& f, SubsetMask a) {
              SubsetMask const l = f.op(f.op(a, f.h), a);
              if (l != a) {
                return equal(l, a);
              }
              return equal(f.op(a, a), a);
            }};
      case TheoremId::T18:
        return Equivalence{
            [](Facts& f, SubsetMask a) {
              return kind_check(f, IdealKind::Quasi, a);
            },
            [](Facts& f, SubsetMask a) {
              return equal(f.op(f.h, a) & f.op(a, f.h), a);
            }};
      case TheoremId::T19:
        return Equivalence{
            [](Facts& f, SubsetMask a) {
              return kind_check(f, IdealKind::Interior, a);
            },
            [](Facts& f, SubsetMask a) {
              return equal(f.op(f.op(f.h, a), f.h), a);
            }};
      case TheoremId::T20:
        return Equivalence{
            [](Facts& f, SubsetMask a) {
              return kind_check(f, IdealKind::OneTwo, a);
            },
            [](Facts& f, SubsetMask a) {
              SubsetMask const sq = f.op(a, a);
              SubsetMask const l  = f.op(f.op(a, f.h), sq);
              if (l != a) {
                return equal(l, a);
              }
              return equal(sq, a);
            }};
      case TheoremId::T21:
        return Equivalence{
            [](Facts& f, SubsetMask a) { return kind_check(f, IdealKind::Left, a); },
            [](Facts& f, SubsetMask a) {
              return kind_check(f, IdealKind::Right, a);
            }};
      case TheoremId::T22:
        return Equivalence{
            [](Facts& f, SubsetMask a) {
              return kind_check(f, IdealKind::OneTwo, a);
            },
            [](Facts& f, SubsetMask a) {
              return kind_check(f, IdealKind::TwoSided, a);
            }};
      case TheoremId::T23:
        return Equivalence{
            [](Facts& f, SubsetMask a) {
              return kind_check(f, IdealKind::TwoSided, a);
            },
            [](Facts& f, SubsetMask a) {
              return kind_check(f, IdealKind::Quasi, a);
            }};
      default: return std::nullopt;
    }
  }

  // ---------------------------------------------------------------------
  // Hypotheses.
  // ---------------------------------------------------------------------

  bool all_columns_full(Facts& f) {
    for (Element a = 0; a < f.t.order(); ++a) {
      if (f.t.column_union(a) != f.h) {
        return false;
      }
    }
    return true;
  }

  bool all_rows_full(Facts& f) {
    for (Element a = 0; a < f.t.order(); ++a) {
      if (f.t.row_union(a) != f.h) {
        return false;
      }
    }
    return true;
  }

  bool t9_main_hypothesis(Facts& f, TheoremOptions const& o) {
    if (!f.has_left_identity()) {
      return false;
    }
    if (o.strict_t9) {
      for (Element a = 0; a < f.t.order(); ++a) {
        if (f.t.column_union(a) != f.h && f.t.row_union(a) != f.h) {
          return false;
        }
      }
      return true;
    }
    return all_columns_full(f) || all_rows_full(f);
  }

  std::optional<std::pair<SubsetMask, SubsetMask>> t12_violation(Facts& f) {
    for (SubsetMask l : f.ideals(IdealKind::Left)) {
      for (SubsetMask r : f.ideals(IdealKind::Right)) {
        if (!is_ideal(f.t, IdealKind::Semiprime, r).holds) {
          continue;
        }
        if ((l | r) != f.op(l, r)) {
          return std::make_pair(l, r);
        }
      }
    }
    return std::nullopt;
  }

  bool inverse_hypothesis(Facts& f, bool membership) {
    for (Element e : f.ids().pure_left_identities()) {
      auto const r = invertibility(f.t, e);
      if (membership ? r.left_invertible : r.pure_left_invertible) {
        return true;
      }
    }
    return false;
  }

  // Returns the failed clauses; empty means the hypothesis holds. T9 is
  // handled separately because it has two independent parts.
  std::vector<std::string> hypothesis_failures(Facts& f, TheoremId id,
                                               TheoremOptions const& o) {
    std::vector<std::string> out;
    auto need_pure_left = [&] {
      if (!f.has_pure_left_identity()) {
        out.emplace_back("no pure left identity");
      }
    };
    auto need_left = [&] {
      if (!f.has_left_identity()) {
        out.emplace_back("no left identity");
      }
    };
    auto need_intra = [&] {
      if (!f.is_intra_regular()) {
        out.push_back("not intra-regular (" + f.t.label(*f.intra().first_failing)
                      + ")");
      }
    };
    switch (id) {
      case TheoremId::T1:
      case TheoremId::T7:
      case TheoremId::T25c: break;
      case TheoremId::T2:
      case TheoremId::T3:
      case TheoremId::T5:
      case TheoremId::T25a:
      case TheoremId::T25b: need_pure_left(); break;
      case TheoremId::T4:
      case TheoremId::T16: need_left(); break;
      case TheoremId::T6:
        if (f.ids().pure_right_identities().empty()) {
          out.emplace_back("no pure right identity");
        }
        break;
      case TheoremId::T8: {
        need_pure_left();
        if (out.empty()) {
          bool any = false;
          for (Element e : f.ids().pure_left_identities()) {
            auto const r = invertibility(f.t, e);
            any = any || r.left_invertible || r.right_invertible;
          }
          if (!any) {
            out.emplace_back("neither left nor right invertible");
          }
        }
        break;
      }
      case TheoremId::T9:
        if (!t9_main_hypothesis(f, o) && !all_rows_full(f)) {
          need_left();
          out.emplace_back(o.strict_t9
                               ? "some a has H∘a≠H and a∘H≠H"
                               : "neither all H∘a=H nor all a∘H=H");
        }
        break;
      case TheoremId::T10:
      case TheoremId::T11:
      case TheoremId::T17:
      case TheoremId::T18:
      case TheoremId::T19:
      case TheoremId::T20:
      case TheoremId::T21:
      case TheoremId::T22:
      case TheoremId::T23:
      case TheoremId::T24:
        need_intra();
        need_pure_left();
        break;
      case TheoremId::T12:
        need_pure_left();
        if (auto v = t12_violation(f)) {
          out.push_back("L∪R≠L∘R for L=" + format_mask(f.t, v->first)
                        + ", R=" + format_mask(f.t, v->second));
        }
        break;
      case TheoremId::T13: need_intra(); break;
      case TheoremId::T14:
        need_pure_left();
        if (out.empty() && !inverse_hypothesis(f, o.membership_t14)) {
          out.emplace_back(o.membership_t14 ? "not left invertible"
                                            : "not pure left invertible");
        }
        break;
      case TheoremId::T15:
        need_intra();
        need_left();
        break;
    }
    return out;
  }

  // ---------------------------------------------------------------------
  // Conclusions. Each returns the first failure found; `v` collects
  // directions and notes.
  // ---------------------------------------------------------------------

  std::optional<Failure> check_law_clause(Facts& f, LawId law) {
    auto v = check_law(f.t, law);
    if (v.holds) {
      return std::nullopt;
    }
    return law_failure(v);
  }

  std::optional<Failure> hh_clause(Facts& f) {
    SubsetMask const hh = f.op(f.h, f.h);
    if (hh != f.h) {
      return Failure{std::string(kHH), "", {}, {}, hh, f.h};
    }
    return std::nullopt;
  }

  std::optional<Failure> t5(Facts& f) {
    if (auto bad = hh_clause(f)) {
      return bad;
    }
    for (Element e : f.ids().pure_left_identities()) {
      SubsetMask const se = SubsetMask::singleton(e);
      if (SubsetMask eh = f.op(se, f.h); eh != f.h) {
        return Failure{std::string(kEH), "", {}, {e}, eh, f.h};
      }
      if (SubsetMask he = f.op(f.h, se); he != f.h) {
        return Failure{std::string(kHE), "", {}, {e}, he, f.h};
      }
    }
    return std::nullopt;
  }

  std::optional<Failure> t6(Facts& f) {
    for (Element e : f.ids().pure_right_identities()) {
      for (Element a = 0; a < f.t.order(); ++a) {
        SubsetMask const sa = SubsetMask::singleton(a);
        if (f.t.cell(e, a) != sa) {
          return Failure{std::string(kPureLeft), "", {}, {e, a}, f.t.cell(e, a),
                         sa};
        }
        SubsetMask const both = f.t.cell(e, a) & f.t.cell(a, e);
        if (both != sa) {
          return Failure{std::string(kPureIdentity), "", {}, {e, a}, both, sa};
        }
      }
    }
    if (auto bad = check_law_clause(f, LawId::Commutative)) {
      return bad;
    }
    return check_law_clause(f, LawId::Associative);
  }

  std::optional<Failure> t7(Facts& f) {
    auto const assoc = check_law(f.t, LawId::Associative);
    auto const crit  = check_law(f.t, LawId::SemihypergroupCriterion);
    if (assoc.holds == crit.holds) {
      return std::nullopt;
    }
    auto const& w = assoc.holds ? *crit.witness : *assoc.witness;
    return Failure{std::string(kCriterion), "", {}, w.elements, w.lhs, w.rhs};
  }

  std::optional<Failure> intra_clause(Facts& f) {
    if (f.is_intra_regular()) {
      return std::nullopt;
    }
    return intra_failure(f);
  }

  std::optional<Failure> t9(Facts& f, TheoremOptions const& o,
                            TheoremVerdict& v) {
    std::optional<Failure> first;
    if (t9_main_hypothesis(f, o)) {
      auto bad = intra_clause(f);
      v.directions.push_back({"main", !bad});
      if (bad && !first) {
        first = bad;
      }
    }
    if (all_rows_full(f)) {
      std::optional<Failure> bad;
      for (Element a = 0; a < f.t.order() && !bad; ++a) {
        if (f.t.column_union(a) != f.h) {
          bad = Failure{std::string(kCorollary), "", {}, {a},
                        f.t.column_union(a), f.h};
        }
      }
      v.directions.push_back({"corollary", !bad});
      if (bad && !first) {
        first = bad;
      }
    }
    return first;
  }

  std::optional<Failure> t10(Facts& f) {
    for (SubsetMask b : f.ideals(IdealKind::GeneralizedBi)) {
      SubsetMask const l = f.op(f.op(b, f.h), b);
      if (l != b) {
        return Failure{std::string(kBiEquation), "", {b}, {}, l, b};
      }
    }
    return std::nullopt;
  }

  std::optional<Failure> t11(Facts& f) {
    for (SubsetMask b : f.ideals(IdealKind::Interior)) {
      SubsetMask const l = f.op(f.op(f.h, b), f.h);
      if (l != b) {
        return Failure{std::string(kIntEquation), "", {b}, {}, l, b};
      }
    }
    return std::nullopt;
  }

  std::optional<Failure> right_left_pairs(Facts& f) {
    for (SubsetMask r : f.ideals(IdealKind::Right)) {
      for (SubsetMask l : f.ideals(IdealKind::Left)) {
        SubsetMask const meet = r & l;
        SubsetMask const prod = f.op(r, l);
        if (meet != prod) {
          return Failure{std::string(kRightLeft), "", {r, l}, {}, meet, prod};
        }
      }
    }
    return std::nullopt;
  }

  std::optional<Failure> left_square_sets(Facts& f) {
    for (SubsetMask a : f.ideals(IdealKind::Left)) {
      SubsetMask const ha = f.op(f.h, a);
      SubsetMask const sq = f.op(ha, ha);
      if (sq != a) {
        return Failure{std::string(kLeftSquare), "", {a}, {}, sq, a};
      }
    }
    return std::nullopt;
  }

  // intra-regular ⇔ `universal` for T14 and T16.
  std::optional<Failure> intra_equivalence(
      Facts& f, std::optional<Failure> (*universal)(Facts&),
      TheoremVerdict& v) {
    bool const             intra = f.is_intra_regular();
    std::optional<Failure> bad   = universal(f);
    bool const forward_ok  = !intra || !bad;
    bool const backward_ok = bad.has_value() || intra;
    v.directions.push_back({"forward", forward_ok});
    v.directions.push_back({"backward", backward_ok});
    if (!forward_ok) {
      bad->direction = "forward";
      return bad;
    }
    if (!backward_ok) {
      return intra_failure(f, "backward");
    }
    return std::nullopt;
  }

  std::optional<Failure> t15(Facts& f) {
    for (SubsetMask i : f.ideals(IdealKind::TwoSided)) {
      SubsetMask const sq = f.op(i, i);
      if (sq != i) {
        return Failure{std::string(kIdempotent), "", {i}, {}, sq, i};
      }
    }
    return std::nullopt;
  }

  std::optional<Failure> subset_equivalence(Facts& f, Equivalence const& eq,
                                            TheoremVerdict& v) {
    require_exhaustive_order(f.t);
    std::optional<Failure> forward;
    std::optional<Failure> backward;
    std::uint64_t const    top = f.h.bits();
    for (std::uint64_t bits = 1; bits <= top; ++bits) {
      SubsetMask const a(static_cast<std::uint32_t>(bits));
      Check const      p = eq.lhs(f, a);
      Check const      q = eq.rhs(f, a);
      if (p.holds && !q.holds && !forward) {
        forward = Failure{std::string(kEquivalence), "forward", {a}, {}, q.lhs,
                          q.rhs};
      }
      if (q.holds && !p.holds && !backward) {
        backward = Failure{std::string(kEquivalence), "backward", {a}, {},
                           p.lhs, p.rhs};
      }
    }
    v.directions.push_back({"forward", !forward});
    v.directions.push_back({"backward", !backward});
    return forward ? forward : backward;
  }

  bool is_meet_of_minimals(std::vector<SubsetMask> const& minimal,
                           SubsetMask q) {
    for (SubsetMask i : minimal) {
      for (SubsetMask j : minimal) {
        if ((i & j) == q) {
          return true;
        }
      }
    }
    return false;
  }

  std::optional<Failure> t24(Facts& f, TheoremVerdict& v) {
    auto const& two_sided = f.ideals(IdealKind::TwoSided);
    auto const& minimal   = f.minimal(IdealKind::TwoSided);
    std::optional<Failure> forward;
    std::optional<Failure> backward;
    for (SubsetMask q : two_sided) {
      bool const is_min =
          std::find(minimal.begin(), minimal.end(), q) != minimal.end();
      if (is_min && !forward && !is_meet_of_minimals(minimal, q)) {
        forward = Failure{std::string(kMinimal), "forward", {q}, {}, q, q};
      }
      if (!is_min && !backward) {
        for (SubsetMask i : minimal) {
          for (SubsetMask j : minimal) {
            if ((i & j) == q && !backward) {
              backward = Failure{std::string(kMinimal), "backward", {q, i, j},
                                 {}, i & j, q};
            }
          }
        }
      }
    }
    v.directions.push_back({"forward", !forward});
    v.directions.push_back({"backward", !backward});

    bool        principal_ok = true;
    std::string detail;
    for (SubsetMask q : minimal) {
      for (Element a : q) {
        auto const p = principal_sets(f.t, a);
        if ((p.h_a & p.a_h) != q && principal_ok) {
          principal_ok = false;
          detail = " (fails at a=" + f.t.label(a) + ", Q=" + format_mask(f.t, q)
                   + ")";
        }
      }
    }
    v.notes.push_back(std::string("principal construction H∘a∩a∘H=Q ")
                      + (principal_ok ? "holds" : "fails") + detail);
    return forward ? forward : backward;
  }

  std::optional<Failure> t25a(Facts& f) {
    for (SubsetMask r : f.ideals(IdealKind::Right)) {
      auto const bi = is_ideal(f.t, IdealKind::Bi, r);
      if (!bi.holds) {
        return Failure{std::string(kRightIsBi), "", {r}, {}, bi.witness->lhs,
                       bi.witness->rhs};
      }
    }
    return std::nullopt;
  }

  std::optional<Failure> t25b(Facts& f) {
    for (SubsetMask i : f.ideals(IdealKind::Left)) {
      SubsetMask const sq = f.op(i, i);
      auto const       v  = is_ideal(f.t, IdealKind::TwoSided, sq);
      if (!v.holds) {
        return Failure{std::string(kSquareIdeal), "", {i, sq}, {},
                       v.witness->lhs, v.witness->rhs};
      }
    }
    return std::nullopt;
  }

  std::optional<Failure> meets(Facts& f, IdealKind kind,
                               std::string_view clause) {
    auto const& family = f.ideals(kind);
    for (SubsetMask b : family) {
      for (SubsetMask c : family) {
        SubsetMask const m = b & c;
        if (m.empty()) {
          continue;
        }
        auto const v = is_ideal(f.t, kind, m);
        if (!v.holds) {
          return Failure{std::string(clause), "", {b, c, m}, {},
                         v.witness->lhs, v.witness->rhs};
        }
      }
    }
    return std::nullopt;
  }

  std::optional<Failure> t25c(Facts& f) {
    if (auto bad = meets(f, IdealKind::GeneralizedBi, kGenBiMeet)) {
      return bad;
    }
    return meets(f, IdealKind::Bi, kBiMeet);
  }

  std::optional<Failure> conclusion(Facts& f, TheoremId id,
                                    TheoremOptions const& o,
                                    TheoremVerdict& v) {
    switch (id) {
      case TheoremId::T1: return check_law_clause(f, LawId::Medial);
      case TheoremId::T2: return check_law_clause(f, LawId::LeftExchange);
      case TheoremId::T3: return check_law_clause(f, LawId::Paramedial);
      case TheoremId::T4:
      case TheoremId::T13: return hh_clause(f);
      case TheoremId::T5: return t5(f);
      case TheoremId::T6: return t6(f);
      case TheoremId::T7: return t7(f);
      case TheoremId::T8:
      case TheoremId::T12: return intra_clause(f);
      case TheoremId::T9: return t9(f, o, v);
      case TheoremId::T10: return t10(f);
      case TheoremId::T11: return t11(f);
      case TheoremId::T14: return intra_equivalence(f, right_left_pairs, v);
      case TheoremId::T15: return t15(f);
      case TheoremId::T16: return intra_equivalence(f, left_square_sets, v);
      case TheoremId::T17:
      case TheoremId::T18:
      case TheoremId::T19:
      case TheoremId::T20:
      case TheoremId::T21:
      case TheoremId::T22:
      case TheoremId::T23: return subset_equivalence(f, *equivalence(id), v);
      case TheoremId::T24: return t24(f, v);
      case TheoremId::T25a: return t25a(f);
      case TheoremId::T25b: return t25b(f);
      case TheoremId::T25c: return t25c(f);
    }
    return std::nullopt;
  }

  std::string join(std::vector<std::string> const& parts) {
    std::string out;
    for (auto const& p : parts) {
      if (!out.empty()) {
        out += "; ";
      }
      out += p;
    }
    return out;
  }

  void require_la(HyperTable const& t) {
    if (!is_la_semihypergroup(t).holds) {
      throw Error(ErrorCode::NotLaSemihypergroup,
                  "table does not satisfy the left invertive law");
    }
  }

  Certificate to_certificate(HyperTable const& t, Failure f) {
    return Certificate{t,
                       std::move(f.clause),
                       std::move(f.direction),
                       std::move(f.subsets),
                       std::move(f.elements),
                       f.lhs,
                       f.rhs};
  }

  TheoremVerdict evaluate(Facts& f, TheoremId id, TheoremOptions const& o) {
    TheoremVerdict v;
    v.id      = id;
    v.options = o;
    auto failures = hypothesis_failures(f, id, o);
    if (!failures.empty()) {
      v.outcome = Outcome::Vacuous;
      v.reason  = join(failures);
      return v;
    }
    if (auto bad = conclusion(f, id, o, v)) {
      v.outcome     = Outcome::Counterexample;
      v.certificate = to_certificate(f.t, std::move(*bad));
    } else {
      v.outcome = Outcome::Holds;
    }
    return v;
  }

  // ---------------------------------------------------------------------
  // Replay.
  // ---------------------------------------------------------------------

  bool not_intra_element(HyperTable const& t, Element a) {
    for (Element x = 0; x < t.order(); ++x) {
      for (Element y = 0; y < t.order(); ++y) {
        if (verify_intra_witness(t, a, x, y)) {
          return false;
        }
      }
    }
    return true;
  }

  bool holds_kind(HyperTable const& t, IdealKind k, SubsetMask a) {
    return !a.empty() && is_ideal(t, k, a).holds;
  }

  bool replay_instance(HyperTable const& t, TheoremVerdict const& v) {
    auto const&      c = *v.certificate;
    SubsetMask const h = t.all();
    auto sub = [&](std::size_t i) {
      return i < c.subsets.size() ? c.subsets[i] : SubsetMask();
    };
    auto elem = [&](std::size_t i) -> std::optional<Element> {
      if (i < c.elements.size() && c.elements[i] < t.order()) {
        return c.elements[i];
      }
      return std::nullopt;
    };
    auto op = [&](SubsetMask a, SubsetMask b) { return compose(t, a, b); };
    std::string_view const clause = c.clause;

    if (clause.starts_with(kLawPrefix)) {
      auto law = parse_law(clause.substr(kLawPrefix.size()));
      if (!law || c.elements.size() != equation(*law).arity) {
        return false;
      }
      auto const sides = evaluate_law(t, *law, c.elements);
      return sides.lhs != sides.rhs && sides.lhs == c.lhs && sides.rhs == c.rhs;
    }
    if (clause == kHH) {
      return op(h, h) != h;
    }
    if (clause == kEH || clause == kHE) {
      auto e = elem(0);
      if (!e || !classify_identities(t).flags[*e].pure_left_identity) {
        return false;
      }
      SubsetMask const se = SubsetMask::singleton(*e);
      return (clause == kEH ? op(se, h) : op(h, se)) != h;
    }
    if (clause == kPureLeft || clause == kPureIdentity) {
      auto e = elem(0);
      auto a = elem(1);
      if (!e || !a || !classify_identities(t).flags[*e].pure_right_identity) {
        return false;
      }
      SubsetMask const sa = SubsetMask::singleton(*a);
      if (clause == kPureLeft) {
        return t.cell(*e, *a) != sa;
      }
      return (t.cell(*e, *a) & t.cell(*a, *e)) != sa;
    }
    if (clause == kCriterion) {
      return check_law(t, LawId::Associative).holds
             != check_law(t, LawId::SemihypergroupCriterion).holds;
    }
    if (clause == kIntra) {
      auto a = elem(0);
      if (!a || !not_intra_element(t, *a)) {
        return false;
      }
      if (c.direction == "backward") {
        // The other side of the equivalence must hold universally.
        Facts fresh(t);
        return v.id == TheoremId::T14 ? !right_left_pairs(fresh)
                                      : !left_square_sets(fresh);
      }
      return true;
    }
    if (clause == kCorollary) {
      auto a = elem(0);
      return a && op(h, SubsetMask::singleton(*a)) != h;
    }
    if (clause == kBiEquation) {
      SubsetMask const b = sub(0);
      return holds_kind(t, IdealKind::GeneralizedBi, b) && op(op(b, h), b) != b;
    }
    if (clause == kIntEquation) {
      SubsetMask const b = sub(0);
      return holds_kind(t, IdealKind::Interior, b) && op(op(h, b), h) != b;
    }
    if (clause == kRightLeft) {
      SubsetMask const r = sub(0);
      SubsetMask const l = sub(1);
      return intra_regular(t).intra_regular && holds_kind(t, IdealKind::Right, r)
             && holds_kind(t, IdealKind::Left, l) && (r & l) != op(r, l);
    }
    if (clause == kIdempotent) {
      SubsetMask const i = sub(0);
      return holds_kind(t, IdealKind::TwoSided, i) && op(i, i) != i;
    }
    if (clause == kLeftSquare) {
      SubsetMask const a = sub(0);
      if (!intra_regular(t).intra_regular || !holds_kind(t, IdealKind::Left, a)) {
        return false;
      }
      SubsetMask const ha = op(h, a);
      return op(ha, ha) != a;
    }
    if (clause == kEquivalence) {
      auto eq = equivalence(v.id);
      SubsetMask const a = sub(0);
      if (!eq || a.empty() || !a.within(t.order())) {
        return false;
      }
      Facts fresh(t);
      bool const p = eq->lhs(fresh, a).holds;
      bool const q = eq->rhs(fresh, a).holds;
      return c.direction == "forward" ? (p && !q) : (q && !p);
    }
    if (clause == kMinimal) {
      SubsetMask const q = sub(0);
      if (!holds_kind(t, IdealKind::TwoSided, q)) {
        return false;
      }
      auto const minimal = minimal_ideals(t, IdealKind::TwoSided);
      bool const is_min =
          std::find(minimal.begin(), minimal.end(), q) != minimal.end();
      if (c.direction == "forward") {
        return is_min && !is_meet_of_minimals(minimal, q);
      }
      SubsetMask const i = sub(1);
      SubsetMask const j = sub(2);
      auto in_min = [&](SubsetMask m) {
        return std::find(minimal.begin(), minimal.end(), m) != minimal.end();
      };
      return !is_min && in_min(i) && in_min(j) && (i & j) == q;
    }
    if (clause == kRightIsBi) {
      SubsetMask const r = sub(0);
      return holds_kind(t, IdealKind::Right, r) && !is_ideal(t, IdealKind::Bi, r).holds;
    }
    if (clause == kSquareIdeal) {
      SubsetMask const i = sub(0);
      return holds_kind(t, IdealKind::Left, i)
             && !is_ideal(t, IdealKind::TwoSided, op(i, i)).holds;
    }
    if (clause == kBiMeet || clause == kGenBiMeet) {
      IdealKind const k =
          clause == kBiMeet ? IdealKind::Bi : IdealKind::GeneralizedBi;
      SubsetMask const b = sub(0);
      SubsetMask const d = sub(1);
      SubsetMask const m = b & d;
      return holds_kind(t, k, b) && holds_kind(t, k, d) && !m.empty()
             && !is_ideal(t, k, m).holds;
    }
    return false;
  }

  IdealKind converse_kind(TheoremId id) {
    return id == TheoremId::T10 ? IdealKind::GeneralizedBi
                                : IdealKind::Interior;
  }

  bool converse_equation(HyperTable const& t, TheoremId id, SubsetMask b) {
    SubsetMask const h = t.all();
    if (id == TheoremId::T10) {
      return compose(t, compose(t, b, h), b) == b;
    }
    return compose(t, compose(t, h, b), h) == b;
  }

}  // namespace

std::array<TheoremId, kTheoremCount> const& all_theorems() {
  return kTheorems;
}

std::string_view theorem_name(TheoremId id) noexcept {
  return kNames[index(id)];
}

std::string_view theorem_statement(TheoremId id) noexcept {
  return kStatements[index(id)];
}

std::optional<TheoremId> parse_theorem(std::string_view name) {
  for (TheoremId id : kTheorems) {
    if (theorem_name(id) == name) {
      return id;
    }
  }
  return std::nullopt;
}

std::string_view outcome_name(Outcome o) noexcept {
  switch (o) {
    case Outcome::Holds: return "Holds";
    case Outcome::Vacuous: return "Vacuous";
    case Outcome::Counterexample: return "Counterexample";
  }
  return "";
}

TheoremVerdict run_theorem(HyperTable const& t, TheoremId id,
                           TheoremOptions const& options) {
  require_la(t);
  Facts f(t);
  return evaluate(f, id, options);
}

std::vector<TheoremVerdict> run_all(HyperTable const& t,
                                    TheoremOptions const& options) {
  require_la(t);
  Facts                       f(t);
  std::vector<TheoremVerdict> out;
  out.reserve(kTheoremCount);
  for (TheoremId id : kTheorems) {
    out.push_back(evaluate(f, id, options));
  }
  return out;
}

TheoremVerdict check_converse(HyperTable const& t, TheoremId id) {
  if (id != TheoremId::T10 && id != TheoremId::T11) {
    throw Error(ErrorCode::UnsupportedConverse,
                "converse checks exist for T10 and T11 only, not "
                    + std::string(theorem_name(id)));
  }
  require_la(t);
  Facts          f(t);
  TheoremVerdict v;
  v.id       = id;
  v.converse = true;
  auto failures = hypothesis_failures(f, id, {});
  if (failures.empty()) {
    v.outcome = Outcome::Holds;
    v.notes.emplace_back("hypothesis holds; the converse cannot fail here");
    return v;
  }
  IdealKind const         kind = converse_kind(id);
  std::vector<SubsetMask> witnesses;
  for (SubsetMask b : f.ideals(kind)) {
    if (converse_equation(t, id, b)) {
      witnesses.push_back(b);
    }
  }
  if (witnesses.empty()) {
    v.outcome = Outcome::Vacuous;
    v.reason  = "no " + std::string(ideal_kind_name(kind))
               + " hyperideal satisfies the equation";
    return v;
  }
  v.outcome = Outcome::Counterexample;
  v.reason  = join(failures);
  std::vector<Element> elements;
  if (!f.is_intra_regular()) {
    elements.push_back(*f.intra().first_failing);
  }
  v.certificate = Certificate{t,
                              std::string(kConverse),
                              "",
                              witnesses,
                              std::move(elements),
                              witnesses.front(),
                              witnesses.front()};
  return v;
}

bool replay_certificate(TheoremVerdict const& v) {
  if (v.outcome != Outcome::Counterexample || !v.certificate) {
    return false;
  }
  HyperTable const& t = v.certificate->table;
  if (!is_la_semihypergroup(t).holds) {
    return false;
  }
  Facts f(t);
  if (v.converse) {
    if (hypothesis_failures(f, v.id, {}).empty()) {
      return false;
    }
    auto const& c = *v.certificate;
    if (c.subsets.empty()) {
      return false;
    }
    for (SubsetMask b : c.subsets) {
      if (!holds_kind(t, converse_kind(v.id), b)
          || !converse_equation(t, v.id, b)) {
        return false;
      }
    }
    for (Element a : c.elements) {
      if (a >= t.order() || !not_intra_element(t, a)) {
        return false;
      }
    }
    return true;
  }
  if (v.id == TheoremId::T9) {
    bool const main = v.certificate->clause == kIntra;
    if (main ? !t9_main_hypothesis(f, v.options) : !all_rows_full(f)) {
      return false;
    }
  } else if (!hypothesis_failures(f, v.id, v.options).empty()) {
    return false;
  }
  return replay_instance(t, v);
}

void SweepSummary::add(std::vector<TheoremVerdict> const& verdicts) {
  ++_tables;
  for (auto const& v : verdicts) {
    auto& tally = _tallies[index(v.id)];
    switch (v.outcome) {
      case Outcome::Holds: ++tally.holds; break;
      case Outcome::Vacuous: ++tally.vacuous; break;
      case Outcome::Counterexample:
        ++tally.counterexamples;
        _counterexamples.push_back(v);
        break;
    }
  }
}

void SweepSummary::merge(SweepSummary const& other) {
  _tables += other._tables;
  for (std::size_t i = 0; i < kTheoremCount; ++i) {
    _tallies[i].holds += other._tallies[i].holds;
    _tallies[i].vacuous += other._tallies[i].vacuous;
    _tallies[i].counterexamples += other._tallies[i].counterexamples;
  }
  _counterexamples.insert(_counterexamples.end(),
                          other._counterexamples.begin(),
                          other._counterexamples.end());
}

std::vector<TheoremId> SweepSummary::never_satisfied() const {
  std::vector<TheoremId> out;
  for (TheoremId id : kTheorems) {
    if (_tallies[index(id)].non_vacuous() == 0) {
      out.push_back(id);
    }
  }
  return out;
}

}  // namespace hyperlaw
