#include "hyperlaw/report.hpp"

#include <sstream>

namespace hyperlaw {

StructureReport build_report(HyperTable const& t, ReportOptions const& options) {
  StructureReport r{t, {}, classify_identities(t), intra_regular(t), {}, {}, {}};
  for (LawId law : kAllLaws) {
    r.laws.push_back(check_law(t, law));
  }
  auto const left = r.identities.left_identities();
  if (!left.empty()) {
    r.invertibility = invertibility(t, left.front());
  }
  if (t.order() <= kReportIdealOrder) {
    std::array<std::size_t, kAllIdealKinds.size()> counts{};
    for (std::size_t k = 0; k < kAllIdealKinds.size(); ++k) {
      counts[k] = enumerate_ideals(t, kAllIdealKinds[k]).size();
    }
    r.ideal_counts = counts;
  }
  if (options.theorems) {
    r.theorems = run_all(t, options.theorem_options);
  }
  return r;
}

Json mask_json(HyperTable const& t, SubsetMask m) {
  Json out = Json::array();
  for (Element e : m) {
    out.push_back(t.label(e));
  }
  return out;
}

Json table_json(HyperTable const& t) {
  Json out;
  out["order"]    = t.order();
  out["elements"] = t.labels();
  Json rows       = Json::array();
  for (Element a = 0; a < t.order(); ++a) {
    Json row = Json::array();
    for (Element b = 0; b < t.order(); ++b) {
      row.push_back(mask_json(t, t.cell(a, b)));
    }
    rows.push_back(std::move(row));
  }
  out["table"] = std::move(rows);
  return out;
}

namespace {

  Json labels_of(HyperTable const& t, std::vector<Element> const& es) {
    Json out = Json::array();
    for (Element e : es) {
      out.push_back(t.label(e));
    }
    return out;
  }

  Json optional_label(HyperTable const& t, std::optional<Element> e) {
    return e ? Json(t.label(*e)) : Json(nullptr);
  }

  Json inverse_column(HyperTable const& t,
                      std::vector<std::optional<Element>> const& col) {
    Json out = Json::array();
    for (auto const& e : col) {
      out.push_back(optional_label(t, e));
    }
    return out;
  }

  std::vector<Element> pure_identities(IdentityProfile const& p, bool pure) {
    std::vector<Element> out;
    for (Element a = 0; a < p.flags.size(); ++a) {
      if (pure ? p.flags[a].pure_identity : p.flags[a].identity) {
        out.push_back(a);
      }
    }
    return out;
  }

  std::string joined(HyperTable const& t, std::vector<Element> const& es) {
    std::string out;
    for (Element e : es) {
      out += (out.empty() ? "" : ", ") + t.label(e);
    }
    return out.empty() ? "none" : out;
  }

}  // namespace

Json to_json(StructureReport const& r) {
  HyperTable const& t = r.table;
  Json              out;
  out["order"]    = t.order();
  out["elements"] = t.labels();

  Json laws;
  for (auto const& v : r.laws) {
    Json entry;
    entry["holds"] = v.holds;
    if (v.witness) {
      entry["witness"] = {{"tuple", labels_of(t, v.witness->elements)},
                          {"lhs", mask_json(t, v.witness->lhs)},
                          {"rhs", mask_json(t, v.witness->rhs)}};
    } else {
      entry["witness"] = nullptr;
    }
    laws[std::string(law_name(v.law))] = std::move(entry);
  }
  out["laws"]          = std::move(laws);
  out["leftInvertive"] = r.laws.front().holds;

  out["identities"] = {
      {"left", labels_of(t, r.identities.left_identities())},
      {"pureLeft", labels_of(t, r.identities.pure_left_identities())},
      {"right", labels_of(t, r.identities.right_identities())},
      {"pureRight", labels_of(t, r.identities.pure_right_identities())},
      {"twoSided", labels_of(t, pure_identities(r.identities, false))},
      {"pureTwoSided", labels_of(t, pure_identities(r.identities, true))},
      {"zero", labels_of(t, r.identities.zeros())},
  };

  out["intraRegular"]   = r.intra.intra_regular;
  out["failingElement"] = optional_label(t, r.intra.first_failing);
  Json witnesses        = Json::array();
  for (Element a = 0; a < t.order(); ++a) {
    auto const& w = r.intra.witnesses[a];
    witnesses.push_back({{"element", t.label(a)},
                         {"x", w ? Json(t.label(w->first)) : Json(nullptr)},
                         {"y", w ? Json(t.label(w->second)) : Json(nullptr)}});
  }
  out["intraRegularity"] = std::move(witnesses);

  if (r.invertibility) {
    auto const& inv      = *r.invertibility;
    out["invertibility"] = {
        {"identity", t.label(inv.identity)},
        {"leftInvertible", inv.left_invertible},
        {"rightInvertible", inv.right_invertible},
        {"invertible", inv.invertible},
        {"pureLeftInvertible", inv.pure_left_invertible},
        {"pureRightInvertible", inv.pure_right_invertible},
        {"leftInverse", inverse_column(t, inv.left_inverse)},
        {"pureLeftInverse", inverse_column(t, inv.pure_left_inverse)},
        {"rightInverse", inverse_column(t, inv.right_inverse)},
        {"pureRightInverse", inverse_column(t, inv.pure_right_inverse)},
    };
  } else {
    out["invertibility"] = nullptr;
  }

  if (r.ideal_counts) {
    Json counts;
    for (std::size_t k = 0; k < kAllIdealKinds.size(); ++k) {
      counts[std::string(ideal_kind_name(kAllIdealKinds[k]))] =
          (*r.ideal_counts)[k];
    }
    out["idealCounts"] = std::move(counts);
  } else {
    out["idealCounts"] = nullptr;
  }

  if (r.theorems) {
    Json list = Json::array();
    for (auto const& v : *r.theorems) {
      list.push_back(verdict_json(v));
    }
    out["theorems"] = std::move(list);
  }
  return out;
}

std::string to_text(StructureReport const& r) {
  HyperTable const&  t = r.table;
  std::ostringstream out;
  out << "order " << t.order() << ": " << joined(t, [&] {
    std::vector<Element> all;
    for (Element a = 0; a < t.order(); ++a) {
      all.push_back(a);
    }
    return all;
  }()) << '\n';
  out << "laws:\n";
  for (auto const& v : r.laws) {
    out << "  " << law_name(v.law) << ": " << (v.holds ? "holds" : "fails");
    if (v.witness) {
      out << " at (" << joined(t, v.witness->elements) << "): "
          << format_mask(t, v.witness->lhs) << " vs "
          << format_mask(t, v.witness->rhs);
    }
    out << '\n';
  }
  out << "identities:\n"
      << "  left: " << joined(t, r.identities.left_identities()) << '\n'
      << "  pure left: " << joined(t, r.identities.pure_left_identities())
      << '\n'
      << "  right: " << joined(t, r.identities.right_identities()) << '\n'
      << "  pure right: " << joined(t, r.identities.pure_right_identities())
      << '\n'
      << "  zero: " << joined(t, r.identities.zeros()) << '\n';
  out << "intra-regular: " << (r.intra.intra_regular ? "yes" : "no");
  if (r.intra.first_failing) {
    out << " (fails at " << t.label(*r.intra.first_failing) << ")";
  }
  out << '\n';
  for (Element a = 0; a < t.order(); ++a) {
    if (auto const& w = r.intra.witnesses[a]) {
      out << "  " << t.label(a) << " in (" << t.label(w->first) << "∘"
          << t.label(a) << "²)∘" << t.label(w->second) << '\n';
    }
  }
  if (r.invertibility) {
    auto const& inv = *r.invertibility;
    out << "invertibility w.r.t. " << t.label(inv.identity) << ": left "
        << (inv.left_invertible ? "yes" : "no") << ", right "
        << (inv.right_invertible ? "yes" : "no") << ", pure left "
        << (inv.pure_left_invertible ? "yes" : "no") << ", pure right "
        << (inv.pure_right_invertible ? "yes" : "no") << '\n';
  }
  if (r.ideal_counts) {
    out << "hyperideals:\n";
    for (std::size_t k = 0; k < kAllIdealKinds.size(); ++k) {
      out << "  " << ideal_kind_name(kAllIdealKinds[k]) << ": "
          << (*r.ideal_counts)[k] << '\n';
    }
  }
  if (r.theorems) {
    out << "theorems:\n";
    for (auto const& v : *r.theorems) {
      out << "  " << verdict_text(v) << '\n';
    }
  }
  return out.str();
}

Json verdict_json(TheoremVerdict const& v) {
  Json out;
  out["theorem"]   = std::string(theorem_name(v.id));
  out["converse"]  = v.converse;
  out["statement"] = std::string(theorem_statement(v.id));
  out["options"]   = {{"strictT9", v.options.strict_t9},
                      {"membershipT14", v.options.membership_t14}};
  out["outcome"]   = std::string(outcome_name(v.outcome));
  out["reason"]    = v.reason;
  Json dirs        = Json::array();
  for (auto const& d : v.directions) {
    dirs.push_back({{"name", d.name}, {"holds", d.holds}});
  }
  out["directions"] = std::move(dirs);
  out["notes"]      = v.notes;
  if (v.certificate) {
    auto const&       c = *v.certificate;
    HyperTable const& t = c.table;
    Json              subsets = Json::array();
    for (auto m : c.subsets) {
      subsets.push_back(mask_json(t, m));
    }
    out["certificate"] = {{"clause", c.clause},
                          {"direction", c.direction},
                          {"subsets", std::move(subsets)},
                          {"elements", labels_of(t, c.elements)},
                          {"lhs", mask_json(t, c.lhs)},
                          {"rhs", mask_json(t, c.rhs)},
                          {"table", table_json(t)}};
  } else {
    out["certificate"] = nullptr;
  }
  return out;
}

std::string verdict_text(TheoremVerdict const& v) {
  std::ostringstream out;
  out << theorem_name(v.id) << (v.converse ? " converse" : "") << ": "
      << outcome_name(v.outcome);
  if (!v.reason.empty()) {
    out << " (" << v.reason << ")";
  }
  if (v.certificate) {
    auto const&       c = *v.certificate;
    HyperTable const& t = c.table;
    out << "\n    clause " << c.clause;
    if (!c.direction.empty()) {
      out << " [" << c.direction << "]";
    }
    for (auto m : c.subsets) {
      out << "\n    B = " << format_mask(t, m);
    }
    if (!c.elements.empty()) {
      out << "\n    at " << joined(t, c.elements);
    }
    out << "\n    " << format_mask(t, c.lhs) << " vs " << format_mask(t, c.rhs);
  }
  for (auto const& d : v.directions) {
    if (!d.holds) {
      out << "\n    " << d.name << " fails";
    }
  }
  for (auto const& n : v.notes) {
    out << "\n    note: " << n;
  }
  return out.str();
}

}  // namespace hyperlaw
