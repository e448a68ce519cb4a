#include "hyperlaw/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hyperlaw {

namespace {

  [[noreturn]] void syntax_error(std::size_t line, std::size_t col,
                                 std::string const& what) {
    throw Error(ErrorCode::SyntaxError,
                std::to_string(line) + ":" + std::to_string(col) + ": " + what,
                {static_cast<std::int64_t>(line),
                 static_cast<std::int64_t>(col)});
  }

  bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
  }

  // A piece of a line together with its 1-based starting column.
  struct Span {
    std::string_view text;
    std::size_t      col;
  };

  Span trim(Span s) {
    while (!s.text.empty() && is_space(s.text.front())) {
      s.text.remove_prefix(1);
      ++s.col;
    }
    while (!s.text.empty() && is_space(s.text.back())) {
      s.text.remove_suffix(1);
    }
    return s;
  }

  std::vector<Span> split(Span s, char sep) {
    std::vector<Span> out;
    std::size_t       start = 0;
    for (std::size_t i = 0; i <= s.text.size(); ++i) {
      if (i == s.text.size() || s.text[i] == sep) {
        out.push_back(trim({s.text.substr(start, i - start), s.col + start}));
        start = i + 1;
      }
    }
    return out;
  }

  struct Line {
    std::size_t      number;
    std::string_view text;
  };

  std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t       number = 0;
    while (!text.empty() || number == 0) {
      ++number;
      std::size_t const end  = text.find('\n');
      std::string_view  line = text.substr(0, end);
      text.remove_prefix(end == std::string_view::npos ? text.size() : end + 1);
      Span const t = trim({line, 1});
      if (!t.text.empty() && t.text.front() != '#') {
        out.push_back({number, line});
      }
      if (end == std::string_view::npos) {
        break;
      }
    }
    return out;
  }

  constexpr std::string_view kHeader = "elements:";

  bool representable(std::string const& label) {
    return !label.empty() && label.front() != '#'
           && std::none_of(label.begin(), label.end(), [](char c) {
                return is_space(c) || c == '\n' || c == ',' || c == '|';
              });
  }

}  // namespace

HyperTable parse_compact(std::string_view text) {
  std::vector<Line>        lines = content_lines(text);
  std::vector<std::string> labels;
  bool                     have_header = false;
  if (!lines.empty()) {
    Span const first = trim({lines.front().text, 1});
    if (first.text.substr(0, kHeader.size()) == kHeader) {
      have_header = true;
      Span rest{first.text.substr(kHeader.size()), first.col + kHeader.size()};
      std::string_view s = rest.text;
      std::size_t      i = 0;
      while (i < s.size()) {
        if (is_space(s[i]) || s[i] == ',') {
          ++i;
          continue;
        }
        std::size_t j = i;
        while (j < s.size() && !is_space(s[j]) && s[j] != ',') {
          ++j;
        }
        std::string label(s.substr(i, j - i));
        if (!representable(label)) {
          syntax_error(lines.front().number, rest.col + i, "bad label");
        }
        labels.push_back(std::move(label));
        i = j;
      }
      if (labels.empty()) {
        syntax_error(lines.front().number, rest.col, "no labels declared");
      }
      lines.erase(lines.begin());
    }
  }

  std::size_t const n = lines.size();
  RawTable raw;
  raw.order  = n;
  raw.labels = labels;
  for (Line const& line : lines) {
    auto const cells = split({line.text, 1}, '|');
    for (Span const& cell : cells) {
      std::vector<long long> elements;
      if (!cell.text.empty()) {
        for (Span const& tok : split(cell, ',')) {
          if (tok.text.empty()) {
            syntax_error(line.number, tok.col, "empty element");
          }
          if (have_header) {
            auto it = std::find(labels.begin(), labels.end(), tok.text);
            if (it == labels.end()) {
              syntax_error(line.number, tok.col,
                           "unknown element '" + std::string(tok.text) + "'");
            }
            elements.push_back(it - labels.begin());
          } else {
            long long   v     = 0;
            char const* begin = tok.text.data();
            char const* end   = begin + tok.text.size();
            auto [ptr, ec]    = std::from_chars(begin, end, v);
            if (ec != std::errc{} || ptr != end) {
              syntax_error(line.number, tok.col,
                           "expected an element index, found '"
                               + std::string(tok.text) + "'");
            }
            elements.push_back(v);
          }
        }
      }
      raw.cells.push_back(std::move(elements));
    }
    if (cells.size() != n) {
      syntax_error(line.number, 1,
                   "expected " + std::to_string(n) + " cells, found "
                       + std::to_string(cells.size()));
    }
  }
  if (have_header && labels.size() != n) {
    syntax_error(1, 1,
                 "declared " + std::to_string(labels.size())
                     + " elements but found " + std::to_string(n) + " rows");
  }
  return validate(raw);
}

std::string to_compact(HyperTable const& t) {
  std::ostringstream out;
  out << std::string(kHeader);
  for (auto const& l : t.labels()) {
    if (!representable(l)) {
      throw Error(ErrorCode::SyntaxError,
                  "label '" + l + "' cannot be written in compact form",
                  {0, 0});
    }
    out << ' ' << l;
  }
  out << '\n';
  std::size_t const n = t.order();
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (b > 0) {
        out << '|';
      }
      bool first = true;
      for (Element e : t.cell(a, b)) {
        out << (first ? "" : ",") << t.label(e);
        first = false;
      }
    }
    out << '\n';
  }
  return out.str();
}

namespace {

  [[noreturn]] void shape_error(std::string const& what) {
    syntax_error(0, 0, what);
  }

  std::pair<std::size_t, std::size_t> position(std::string_view text,
                                               std::size_t      byte) {
    std::size_t line = 1;
    std::size_t col  = 1;
    for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

}  // namespace

HyperTable parse_document(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (nlohmann::json::parse_error const& e) {
    // `byte` is one past the offending character.
    auto [line, col] = position(text, e.byte == 0 ? 0 : e.byte - 1);
    syntax_error(line, col, "malformed JSON");
  }
  if (!doc.is_object()) {
    shape_error("document must be an object");
  }
  if (!doc.contains("order") || !doc["order"].is_number_integer()) {
    shape_error("missing integer 'order'");
  }
  long long const order = doc["order"].get<long long>();
  if (order < 1 || order > static_cast<long long>(kMaxOrder)) {
    throw Error(ErrorCode::OrderOutOfBounds,
                "order must be in 1.." + std::to_string(kMaxOrder),
                {order});
  }
  std::size_t const n = static_cast<std::size_t>(order);

  RawTable raw;
  raw.order = n;
  if (doc.contains("elements")) {
    auto const& el = doc["elements"];
    if (!el.is_array()) {
      shape_error("'elements' must be a list of strings");
    }
    for (auto const& l : el) {
      if (!l.is_string()) {
        shape_error("'elements' must be a list of strings");
      }
      raw.labels.push_back(l.get<std::string>());
    }
  }
  std::vector<std::string> const names =
      raw.labels.empty() ? default_labels(n) : raw.labels;

  if (!doc.contains("table") || !doc["table"].is_array()
      || doc["table"].size() != n) {
    shape_error("'table' must list " + std::to_string(n) + " rows");
  }
  for (auto const& row : doc["table"]) {
    if (!row.is_array() || row.size() != n) {
      shape_error("every row must list " + std::to_string(n) + " cells");
    }
    for (auto const& cell : row) {
      if (!cell.is_array()) {
        shape_error("every cell must be a list of elements");
      }
      std::vector<long long> elements;
      for (auto const& e : cell) {
        if (e.is_number_integer()) {
          elements.push_back(e.get<long long>());
        } else if (e.is_string()) {
          auto const s  = e.get<std::string>();
          auto       it = std::find(names.begin(), names.end(), s);
          if (it == names.end()) {
            shape_error("unknown element '" + s + "'");
          }
          elements.push_back(it - names.begin());
        } else {
          shape_error("cell entries must be labels or indices");
        }
      }
      raw.cells.push_back(std::move(elements));
    }
  }
  return validate(raw);
}

std::string to_document(HyperTable const& t) {
  auto q = [](std::string const& s) { return nlohmann::json(s).dump(); };
  std::size_t const n = t.order();
  std::ostringstream out;
  out << "{\n  \"order\": " << n << ",\n  \"elements\": [";
  for (Element a = 0; a < n; ++a) {
    out << (a ? ", " : "") << q(t.label(a));
  }
  out << "],\n  \"table\": [\n";
  for (Element a = 0; a < n; ++a) {
    out << "    [";
    for (Element b = 0; b < n; ++b) {
      out << (b ? ", " : "") << '[';
      bool first = true;
      for (Element e : t.cell(a, b)) {
        out << (first ? "" : ", ") << q(t.label(e));
        first = false;
      }
      out << ']';
    }
    out << (a + 1 < n ? "],\n" : "]\n");
  }
  out << "  ]\n}\n";
  return out.str();
}

HyperTable parse_table(std::string_view text) {
  auto const pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string_view::npos && text[pos] == '{') {
    return parse_document(text);
  }
  return parse_compact(text);
}

HyperTable load_table(std::filesystem::path const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::SyntaxError,
                "cannot read '" + path.string() + "'", {0, 0});
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_table(buf.str());
}

}  // namespace hyperlaw
