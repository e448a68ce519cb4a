#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperlaw/core.hpp"
#include "hyperlaw/ideals.hpp"
#include "hyperlaw/laws.hpp"
#include "hyperlaw/regularity.hpp"
#include "hyperlaw/theorems.hpp"

namespace hyperlaw {

using Json = nlohmann::ordered_json;

// Ideal counts are skipped above this order.
inline constexpr std::size_t kReportIdealOrder = 12;

struct StructureReport {
  HyperTable                         table;
  std::vector<LawVerdict>            laws;
  IdentityProfile                    identities;
  IntraRegularityReport              intra;
  std::optional<InvertibilityReport> invertibility;  // w.r.t. first left identity
  std::optional<std::array<std::size_t, kAllIdealKinds.size()>> ideal_counts;
  std::optional<std::vector<TheoremVerdict>>                    theorems;
};

struct ReportOptions {
  bool           theorems = false;
  TheoremOptions theorem_options;
};

StructureReport build_report(HyperTable const& t,
                             ReportOptions const& options = {});

Json        to_json(StructureReport const& r);
std::string to_text(StructureReport const& r);

Json mask_json(HyperTable const& t, SubsetMask m);
Json table_json(HyperTable const& t);
Json        verdict_json(TheoremVerdict const& v);
std::string verdict_text(TheoremVerdict const& v);

}  // namespace hyperlaw
