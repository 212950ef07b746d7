#pragma once

// CSV export of a transform over [a - pad, b + pad]:
//
//   # kind=<kind> support=[a,b] tail_law=<statement>
//   n,value_num,value_den[,optimal_radius][,value_approx]
//   <rows>
//
// The zero sequence has support=[] and no rows. value_approx is a decimal
// rendering, present only on request; the exact value is num/den.

#include <cstdint>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dtm/rational.hpp"
#include "dtm/sequence_io.hpp"
#include "dtm/transforms.hpp"

namespace dtm {

struct TransformRow {
  std::int64_t n = 0;
  Rational value;
  std::optional<std::int64_t> optimal_radius;

  friend bool operator==(const TransformRow&, const TransformRow&) = default;
};

struct TransformTable {
  std::string kind;
  std::optional<std::pair<std::int64_t, std::int64_t>> support;
  std::string tail_law;
  std::vector<TransformRow> rows;
};

inline std::vector<TransformRow> transform_rows(const MaximalTransform& t, std::int64_t pad) {
  std::vector<TransformRow> rows;
  if (t.is_zero()) return rows;
  for (auto n = t.window_start() - pad; n <= t.window_end() + pad; ++n) {
    rows.push_back({n, t.value_at(n), t.radius_at(n)});
  }
  return rows;
}

/// `kind_label` overrides the header kind (used for the naive oracle path).
inline std::string write_transform_csv(const MaximalTransform& t, std::int64_t pad, bool decimal = false,
                                       std::string_view kind_label = {}) {
  std::ostringstream out;
  out << "# kind=" << (kind_label.empty() ? to_string(t.kind()) : kind_label) << " support=[";
  if (!t.is_zero()) out << t.window_start() << ',' << t.window_end();
  out << "] tail_law=" << kTailLawStatement << '\n';
  const bool radius = t.kind() == TransformKind::centered;
  out << "n,value_num,value_den";
  if (radius) out << ",optimal_radius";
  if (decimal) out << ",value_approx";
  out << '\n';
  for (const auto& row : transform_rows(t, pad)) {
    out << row.n << ',' << row.value.numerator().get_str() << ',' << row.value.denominator().get_str();
    if (radius) out << ',' << *row.optimal_radius;
    if (decimal) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g", row.value.approx());
      out << ',' << buf;
    }
    out << '\n';
  }
  return out.str();
}

namespace detail {

inline std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  while (true) {
    const auto comma = line.find(',');
    out.push_back(trim_ws(line.substr(0, comma)));
    if (comma == std::string_view::npos) return out;
    line.remove_prefix(comma + 1);
  }
}

inline std::string_view header_field(std::string_view header, std::string_view key) {
  const auto at = header.find(key);
  if (at == std::string_view::npos) return {};
  const auto rest = header.substr(at + key.size());
  if (key == "tail_law=") return rest;
  std::size_t len = 0;
  while (len < rest.size() && rest[len] != ' ') ++len;
  return rest.substr(0, len);
}

}  // namespace detail

/// Inverse of write_transform_csv.
inline TransformTable parse_transform_csv(std::string_view text) {
  TransformTable table;
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    lines.push_back(text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  if (lines.size() < 2 || !lines[0].starts_with("# ")) throw ParseError("missing transform CSV header", 1, 0);
  const auto header = lines[0];
  table.kind = std::string(detail::header_field(header, "kind="));
  table.tail_law = std::string(detail::header_field(header, "tail_law="));
  auto support = detail::header_field(header, "support=");
  if (support.size() < 2 || support.front() != '[' || support.back() != ']') {
    throw ParseError("bad support field", 1, 0);
  }
  support = support.substr(1, support.size() - 2);
  if (!support.empty()) {
    const auto parts = detail::split_commas(support);
    std::int64_t a = 0;
    std::int64_t b = 0;
    if (parts.size() != 2 || !detail::parse_index(parts[0], a) || !detail::parse_index(parts[1], b)) {
      throw ParseError("bad support field", 1, 0);
    }
    table.support = std::make_pair(a, b);
  }
  const auto columns = detail::split_commas(lines[1]);
  if (columns.size() < 3 || columns[0] != "n" || columns[1] != "value_num" || columns[2] != "value_den") {
    throw ParseError("bad column header", 2, 0);
  }
  const bool radius = columns.size() > 3 && columns[3] == "optimal_radius";
  for (std::size_t i = 2; i < lines.size(); ++i) {
    if (detail::trim_ws(lines[i]).empty()) continue;
    const auto cells = detail::split_commas(lines[i]);
    if (cells.size() != columns.size()) throw ParseError("wrong number of cells", i + 1, 0);
    TransformRow row;
    if (!detail::parse_index(cells[0], row.n)) throw ParseError("bad index", i + 1, 0);
    try {
      row.value = Rational::parse(std::string(cells[1]) + "/" + std::string(cells[2]));
    } catch (const std::exception&) {
      throw ParseError("bad value", i + 1, 0);
    }
    if (radius) {
      std::int64_t r = 0;
      if (!detail::parse_index(cells[3], r)) throw ParseError("bad radius", i + 1, 0);
      row.optimal_radius = r;
    }
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace dtm
