#pragma once

#include <cctype>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "dtm/rational.hpp"
#include "dtm/sequence.hpp"

namespace dtm {

/// Input that could not be read as a sequence. `line` is 1-based (0 when the
/// error has no line, e.g. inside a JSON document) and `position` is a byte
/// offset or array index, depending on the format.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t position)
      : std::runtime_error(what), line_(line), position_(position) {}
  std::size_t line() const { return line_; }
  std::size_t position() const { return position_; }

 private:
  std::size_t line_;
  std::size_t position_;
};

namespace detail {

inline std::string_view trim_ws(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline bool parse_index(std::string_view s, std::int64_t& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) return false;
  std::int64_t v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
    if (v > (std::numeric_limits<std::int64_t>::max() - (s[i] - '0')) / 10) return false;
    v = v * 10 + (s[i] - '0');
  }
  out = neg ? -v : v;
  return true;
}

inline Sequence parse_json_form(std::string_view text, Trim trim) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 0, e.byte);
  }
  if (!doc.is_object() || !doc.contains("offset") || !doc.contains("values")) {
    throw ParseError("sequence JSON needs \"offset\" and \"values\"", 0, 0);
  }
  if (!doc["offset"].is_number_integer()) throw ParseError("offset is not an integer", 0, 0);
  if (!doc["values"].is_array()) throw ParseError("values is not an array", 0, 0);
  const auto offset = doc["offset"].get<std::int64_t>();
  std::vector<Rational> values;
  std::size_t pos = 0;
  for (const auto& item : doc["values"]) {
    try {
      if (item.is_string()) {
        values.push_back(Rational::parse(item.get<std::string>()));
      } else if (item.is_number_integer()) {
        values.push_back(Rational(item.get<std::int64_t>()));
      } else {
        throw RationalFormatError("value is neither a string nor an integer");
      }
    } catch (const RationalFormatError& e) {
      throw ParseError("values[" + std::to_string(pos) + "]: " + e.what(), 0, pos);
    }
    ++pos;
  }
  try {
    return Sequence(offset, std::move(values), trim);
  } catch (const SequenceError& e) {
    throw ParseError(e.what(), 0, 0);
  }
}

inline Sequence parse_line_form(std::string_view text, Trim trim) {
  std::vector<std::pair<std::int64_t, Rational>> entries;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    auto line = trim_ws(text.substr(start, end - start));
    start = end + 1;
    if (line.empty() || line.front() == '#') continue;
    const auto sep = line.find_first_of(" \t");
    if (sep == std::string_view::npos) {
      throw ParseError("line " + std::to_string(line_no) + ": expected '<index> <rational>'", line_no, 0);
    }
    std::int64_t index = 0;
    if (!parse_index(line.substr(0, sep), index)) {
      throw ParseError("line " + std::to_string(line_no) + ": index is not an integer", line_no, 0);
    }
    const auto value_text = trim_ws(line.substr(sep));
    Rational value;
    try {
      value = Rational::parse(value_text);
    } catch (const RationalFormatError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), line_no, sep + 1);
    }
    if (!entries.empty() && index <= entries.back().first) {
      throw ParseError("line " + std::to_string(line_no) +
                           (index == entries.back().first ? ": duplicate index " : ": index not increasing ") +
                           std::to_string(index),
                       line_no, 0);
    }
    entries.emplace_back(index, std::move(value));
  }
  if (entries.empty()) throw ParseError("empty sequence input", 0, 0);
  const std::int64_t first = entries.front().first;
  std::vector<Rational> values(static_cast<std::size_t>(entries.back().first - first + 1));
  for (auto& [index, value] : entries) values[static_cast<std::size_t>(index - first)] = std::move(value);
  try {
    return Sequence(first, std::move(values), trim);
  } catch (const SequenceError& e) {
    throw ParseError(e.what(), 0, 0);
  }
}

}  // namespace detail

/// Reads either accepted serialization. Input starting with '{' is the JSON
/// form `{"offset": k, "values": ["p/q", ...]}`; anything else is the line
/// form `<index> <rational>` with strictly increasing indices (gaps are zero,
/// blank lines and '#' comments are skipped).
inline Sequence parse_sequence(std::string_view text, Trim trim = Trim::strict) {
  const auto body = detail::trim_ws(text);
  if (body.empty()) throw ParseError("empty sequence input", 0, 0);
  if (body.front() == '{') return detail::parse_json_form(body, trim);
  return detail::parse_line_form(text, trim);
}

inline nlohmann::json sequence_to_json(const Sequence& f) {
  nlohmann::json values = nlohmann::json::array();
  for (const auto& v : f.values()) values.push_back(v.str());
  return {{"offset", f.offset()}, {"values", values}};
}

inline Sequence sequence_from_json(const nlohmann::json& j) { return detail::parse_json_form(j.dump(), Trim::strict); }

/// Compact JSON form, e.g. {"offset":-4,"values":["10","0",...,"10"]}.
inline std::string serialize_sequence(const Sequence& f) { return sequence_to_json(f).dump(); }

/// Line form, nonzero entries only.
inline std::string serialize_sequence_lines(const Sequence& f) {
  std::ostringstream out;
  for (std::size_t i = 0; i < f.width(); ++i) {
    if (f.values()[i].is_zero()) continue;
    out << f.offset() + static_cast<std::int64_t>(i) << ' ' << f.values()[i].str() << '\n';
  }
  return out.str();
}

}  // namespace dtm
