#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "dtm/rational.hpp"

namespace dtm {

enum class Outcome { holds, violated, vacuous };

inline std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::holds: return "holds";
    case Outcome::violated: return "violated";
    case Outcome::vacuous: return "vacuous";
  }
  return "?";
}

inline Outcome parse_outcome(std::string_view s) {
  if (s == "holds") return Outcome::holds;
  if (s == "violated") return Outcome::violated;
  if (s == "vacuous") return Outcome::vacuous;
  throw std::invalid_argument("unknown outcome '" + std::string(s) + "'");
}

/// One place where a checked relation `lhs relation rhs` failed (or, for
/// census-style checks, a noteworthy point). `index` is a lattice point, a
/// chain link number, or absent.
struct Witness {
  std::optional<std::int64_t> index;
  Rational lhs;
  Rational rhs;
  std::string relation;  // the relation that was expected: "<=", "="
  std::string note;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct VerificationReport {
  std::string check_name;
  nlohmann::json input;  // canonical inputs; enough to rerun the check
  Outcome outcome = Outcome::vacuous;
  std::vector<Witness> witnesses;
  std::optional<Rational> ratio;
  nlohmann::json details = nlohmann::json::object();

  std::string input_digest() const { return input.dump(); }
};

inline nlohmann::json to_json(const Witness& w) {
  nlohmann::json j;
  j["index"] = w.index ? nlohmann::json(*w.index) : nlohmann::json(nullptr);
  j["lhs"] = w.lhs.str();
  j["rhs"] = w.rhs.str();
  j["relation"] = w.relation;
  if (!w.note.empty()) j["note"] = w.note;
  return j;
}

inline Witness witness_from_json(const nlohmann::json& j) {
  Witness w;
  if (!j.at("index").is_null()) w.index = j.at("index").get<std::int64_t>();
  w.lhs = Rational::parse(j.at("lhs").get<std::string>());
  w.rhs = Rational::parse(j.at("rhs").get<std::string>());
  w.relation = j.at("relation").get<std::string>();
  if (j.contains("note")) w.note = j.at("note").get<std::string>();
  return w;
}

/// JSON-lines record: name, input, outcome, ratio ("p/q" or null), witness
/// (array or null), details.
inline nlohmann::json to_json(const VerificationReport& r, bool decimal = false) {
  nlohmann::json j;
  j["name"] = r.check_name;
  j["input"] = r.input;
  j["outcome"] = std::string(to_string(r.outcome));
  j["ratio"] = r.ratio ? nlohmann::json(r.ratio->str()) : nlohmann::json(nullptr);
  if (decimal && r.ratio) j["ratio_approx"] = r.ratio->approx();
  if (r.witnesses.empty()) {
    j["witness"] = nullptr;
  } else {
    j["witness"] = nlohmann::json::array();
    for (const auto& w : r.witnesses) j["witness"].push_back(to_json(w));
  }
  j["details"] = r.details;
  return j;
}

inline VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.check_name = j.at("name").get<std::string>();
  r.input = j.at("input");
  r.outcome = parse_outcome(j.at("outcome").get<std::string>());
  if (!j.at("ratio").is_null()) r.ratio = Rational::parse(j.at("ratio").get<std::string>());
  if (!j.at("witness").is_null()) {
    for (const auto& w : j.at("witness")) r.witnesses.push_back(witness_from_json(w));
  }
  if (j.contains("details")) r.details = j.at("details");
  return r;
}

}  // namespace dtm
