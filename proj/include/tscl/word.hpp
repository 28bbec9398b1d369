#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tscl/central_extension.hpp"
#include "tscl/tree_pair.hpp"

namespace tscl {

struct WordTerm {
  std::string name;
  Int exponent;
  friend bool operator==(const WordTerm&, const WordTerm&) = default;
};

// Flattened word: parenthesized subwords are expanded at parse time, so a
// Word is just an ordered product of generator powers.
using Word = std::vector<WordTerm>;

namespace detail {

constexpr long long kMaxExpansion = 1'000'000;

inline Word word_power(const Word& w, const Int& e) {
  if (e == 0) return {};
  if (w.size() == 1) return {{w.front().name, w.front().exponent * e}};
  Word base;
  if (e > 0) {
    base = w;
  } else {
    base.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) base.push_back({it->name, -it->exponent});
  }
  Int reps = e > 0 ? e : Int(-e);
  if (reps > kMaxExpansion) throw ParseError("word exponent too large to expand");
  Word out;
  out.reserve(base.size() * reps.convert_to<std::size_t>());
  for (Int i = 0; i < reps; ++i) out.insert(out.end(), base.begin(), base.end());
  return out;
}

/*
 * Grammar:
 *   word := term*
 *   term := atom ('^' signedInt)?
 *   atom := NAME | '(' word ')'
 * Juxtaposition is the product, left to right. NAME is letters, digits and
 * underscores, not starting with a digit. The empty input is the identity.
 */
struct WordParser {
  std::string_view s;
  std::size_t pos = 0;

  bool eof() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }
  void skip_ws() {
    while (!eof() && (peek() == ' ' || peek() == '\t')) ++pos;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("word syntax error at position " + std::to_string(pos) + ": " + msg);
  }

  static bool name_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  Word parse_sequence() {
    Word out;
    for (;;) {
      skip_ws();
      if (eof() || peek() == ')') return out;
      Word term = parse_term();
      out.insert(out.end(), term.begin(), term.end());
    }
  }

  Word parse_term() {
    Word atom = parse_atom();
    skip_ws();
    if (!eof() && peek() == '^') {
      ++pos;
      skip_ws();
      return word_power(atom, parse_int());
    }
    return atom;
  }

  Word parse_atom() {
    skip_ws();
    if (eof()) fail("expected a generator name or '('");
    char c = peek();
    if (c == '(') {
      ++pos;
      Word w = parse_sequence();
      skip_ws();
      if (eof() || peek() != ')') fail("missing ')'");
      ++pos;
      return w;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) fail("generator names cannot start with a digit");
    if (!name_start(c)) fail(std::string("unexpected character '") + c + "'");
    std::size_t b = pos;
    while (!eof() && name_char(peek())) ++pos;
    return {{std::string(s.substr(b, pos - b)), Int(1)}};
  }

  Int parse_int() {
    bool neg = false;
    if (!eof() && (peek() == '-' || peek() == '+')) {
      neg = peek() == '-';
      ++pos;
    }
    std::size_t b = pos;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    if (b == pos) fail("expected an integer exponent after '^'");
    Int v{std::string(s.substr(b, pos - b))};
    return neg ? Int(-v) : v;
  }
};

}  // namespace detail

inline Word parse_word(std::string_view text) {
  detail::WordParser p{text};
  Word w = p.parse_sequence();
  p.skip_ws();
  if (!p.eof()) p.fail("unexpected ')'");
  return w;
}

/*
 * Named generator images at a fixed level n. The builtin tables for the
 * braided Ptolemy-Thompson groups additionally resolve the whole family
 * sigma_1, sigma_2, ... to (id, 1): the abelianization of the braid group
 * sends every sigma_i to 1, so those images are forced. The central
 * coordinates of the Thompson-side names are a convention, not forced; see
 * builtin_table.
 */
struct GeneratorTable {
  Int n;
  std::map<std::string, TnElement> images;
  std::vector<std::string> relators;
  bool braid_sigmas = false;

  std::optional<TnElement> lookup(const std::string& name) const {
    auto it = images.find(name);
    if (it != images.end()) return it->second;
    if (braid_sigmas && is_sigma_name(name))
      return TnElement(CanonicalLift(), Int(1), n);
    return std::nullopt;
  }

  static bool is_sigma_name(std::string_view name) {
    constexpr std::string_view prefix = "sigma_";
    if (name.substr(0, prefix.size()) != prefix) return false;
    std::string_view rest = name.substr(prefix.size());
    if (rest.empty() || rest[0] == '0') return false;
    return rest.find_first_not_of("0123456789") == std::string_view::npos;
  }
};

// Base table at a bare level n: Thompson-side names only.
inline GeneratorTable builtin_table_for_level(const Int& n) {
  if (n == 0) throw ParseError("extension level n must be non-zero");
  GeneratorTable t;
  t.n = n;
  t.images.emplace("alpha", TnElement(builtin("A"), Int(0), n));
  t.images.emplace("beta", TnElement(builtin("B"), Int(0), n));
  t.images.emplace("rho", TnElement(builtin("R"), Int(0), n));
  return t;
}

/*
 * "t-star"  -> level 12, "t-sharp" -> level 21. Words in the sigma_i alone
 * have table-independent values; words mixing alpha/beta/rho depend on the
 * central coordinates chosen here (0 by default), which are configurable
 * through a custom table file.
 */
inline GeneratorTable builtin_table(std::string_view group) {
  Int n;
  if (group == "t-star") {
    n = 12;
  } else if (group == "t-sharp") {
    n = 21;
  } else {
    throw ParseError("unknown group '" + std::string(group) +
                     "' (expected t-star, t-sharp, or tn:<n>)");
  }
  GeneratorTable t = builtin_table_for_level(n);
  t.braid_sigmas = true;
  t.relators = {"sigma_1 sigma_2 sigma_1 (sigma_2 sigma_1 sigma_2)^-1"};
  return t;
}

inline TnElement evaluate_word(const Word& w, const GeneratorTable& table) {
  TnElement acc = TnElement::identity(table.n);
  for (const WordTerm& term : w) {
    std::optional<TnElement> img = table.lookup(term.name);
    if (!img) throw ParseError("unknown generator '" + term.name + "'");
    acc = multiply(acc, power(*img, term.exponent));
  }
  return acc;
}

inline Rational scl_of_word(const Word& w, const GeneratorTable& table,
                            const SearchLimits& limits = {}) {
  return scl_value(evaluate_word(w, table), limits);
}

// Relators that do not evaluate to (id, 0); a table only defines a
// homomorphism when this comes back empty.
inline std::vector<std::string> verify_relations(const GeneratorTable& table) {
  std::vector<std::string> failed;
  TnElement id = TnElement::identity(table.n);
  for (const std::string& r : table.relators) {
    if (!(evaluate_word(parse_word(r), table) == id)) failed.push_back(r);
  }
  return failed;
}

}  // namespace tscl
