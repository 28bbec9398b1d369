#pragma once

#include <json.hpp>

#include <fstream>
#include <limits>
#include <string>
#include <string_view>
#include <utility>

#include "tscl/central_extension.hpp"
#include "tscl/pl_lift.hpp"
#include "tscl/tree_pair.hpp"
#include "tscl/word.hpp"

namespace tscl {

using nlohmann::json;

inline json int_to_json(const Int& v) {
  if (v >= std::numeric_limits<long long>::min() &&
      v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

inline Int int_from_json(const json& v, const char* what) {
  if (v.is_number_integer()) return Int(v.get<long long>());
  if (v.is_string()) {
    try {
      return Int(v.get<std::string>());
    } catch (const std::exception&) {
      throw ParseError(std::string(what) + ": invalid integer '" + v.get<std::string>() + "'");
    }
  }
  throw ParseError(std::string(what) + ": expected an integer");
}

inline Rational rational_from_json(const json& v, const char* what) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(Int(v.get<long long>()));
  throw ParseError(std::string(what) + ": expected a rational as a \"p/q\" string");
}

// Element format: { "breakpoints": [["x", "y"], ...] } with rationals in
// "p/q" form, read as a canonical lift. Every lift invariant is enforced;
// violations are reported by name.
inline json lift_to_json(const CanonicalLift& f) {
  json arr = json::array();
  for (const Breakpoint& bp : f.lift().points())
    arr.push_back(json::array({to_string(bp.x), to_string(bp.y)}));
  return json{{"breakpoints", arr}};
}

inline CanonicalLift lift_from_json(const json& j) {
  if (!j.is_object() || !j.contains("breakpoints") || !j["breakpoints"].is_array())
    throw ParseError("element JSON must be an object with a \"breakpoints\" array");
  std::vector<Breakpoint> pts;
  for (const json& entry : j["breakpoints"]) {
    if (!entry.is_array() || entry.size() != 2)
      throw ParseError("breakpoints: each entry must be an [x, y] pair");
    pts.push_back({rational_from_json(entry[0], "breakpoint x"),
                   rational_from_json(entry[1], "breakpoint y")});
  }
  return CanonicalLift(PLLift::from_breakpoints(std::move(pts)));
}

// Element given as text: a tree pair "bits | bits | r" when a '|' is
// present, otherwise a word in the builtin generators id, A, B, R
// (empty text is the identity).
inline CanonicalLift element_from_text(std::string_view text) {
  if (text.find('|') != std::string_view::npos) return to_plmap(parse_tree_pair(text));
  PLLift acc;
  for (const WordTerm& term : parse_word(text)) {
    Int e = term.exponent;
    if (e > detail::kMaxExpansion || e < -detail::kMaxExpansion)
      throw ParseError("exponent out of range in element expression");
    acc = compose(acc, power_lift(builtin(term.name).lift(), e.convert_to<long long>()));
  }
  return canonicalize(acc).lift;
}

inline json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
}

inline CanonicalLift element_from_file(const std::string& path) {
  return lift_from_json(parse_json_file(path));
}

// TnElement format: { "n": int, "j": int, "t": <element object or text> }.
// Inside a table, "n" may be omitted and defaults to the table level.
inline TnElement tn_from_json(const json& j, const Int* expected_n = nullptr) {
  if (!j.is_object()) throw ParseError("TnElement JSON must be an object");
  Int n;
  if (j.contains("n")) {
    n = int_from_json(j["n"], "field n");
    if (expected_n != nullptr && n != *expected_n)
      throw LevelMismatchError("generator declares n=" + n.str() +
                               " but the table is at n=" + expected_n->str());
  } else if (expected_n != nullptr) {
    n = *expected_n;
  } else {
    throw ParseError("TnElement JSON is missing \"n\"");
  }
  if (!j.contains("j")) throw ParseError("TnElement JSON is missing \"j\"");
  Int jj = int_from_json(j["j"], "field j");
  if (!j.contains("t")) throw ParseError("TnElement JSON is missing \"t\"");
  CanonicalLift t = j["t"].is_string() ? element_from_text(j["t"].get<std::string>())
                                       : lift_from_json(j["t"]);
  return TnElement(std::move(t), std::move(jj), std::move(n));
}

inline json tn_to_json(const TnElement& g) {
  return json{{"n", int_to_json(g.n())}, {"j", int_to_json(g.j())}, {"t", lift_to_json(g.t())}};
}

// Table format: { "n": int, "generators": { name: TnElement }, "relators": [string] }.
inline GeneratorTable table_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n"))
    throw ParseError("table JSON must be an object with \"n\"");
  GeneratorTable t;
  t.n = int_from_json(j["n"], "table n");
  if (t.n == 0) throw ParseError("table n must be non-zero");
  if (j.contains("generators")) {
    if (!j["generators"].is_object()) throw ParseError("table \"generators\" must be an object");
    for (const auto& [name, val] : j["generators"].items())
      t.images.emplace(name, tn_from_json(val, &t.n));
  }
  if (j.contains("relators")) {
    if (!j["relators"].is_array()) throw ParseError("table \"relators\" must be an array");
    for (const json& r : j["relators"]) {
      if (!r.is_string()) throw ParseError("table relators must be strings");
      t.relators.push_back(r.get<std::string>());
    }
  }
  return t;
}

inline json table_to_json(const GeneratorTable& t) {
  json gens = json::object();
  for (const auto& [name, g] : t.images) gens[name] = tn_to_json(g);
  return json{{"n", int_to_json(t.n)}, {"generators", gens}, {"relators", t.relators}};
}

inline GeneratorTable table_from_file(const std::string& path) {
  return table_from_json(parse_json_file(path));
}

}  // namespace tscl
