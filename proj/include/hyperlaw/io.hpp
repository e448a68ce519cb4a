#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "hyperlaw/core.hpp"

namespace hyperlaw {

// Compact text format:
//
//   # comment
//   elements: x y z w
//   x|x,w|x,w|w
//   ...
//
// One row per line, cells separated by '|', elements by ','. Without the
// `elements:` line the labels are 0..n-1. Errors carry (line, column), both
// 1-based.
HyperTable  parse_compact(std::string_view text);
std::string to_compact(HyperTable const& t);

// Structured document: {"order": n, "elements": [...], "table": [[[...]]]}.
// Malformed JSON reports the failing (line, column); a well-formed document
// with the wrong shape reports (0, 0).
HyperTable  parse_document(std::string_view text);
std::string to_document(HyperTable const& t);

// Picks the format from the first non-blank character ('{' means document).
HyperTable parse_table(std::string_view text);
HyperTable load_table(std::filesystem::path const& path);

}  // namespace hyperlaw
