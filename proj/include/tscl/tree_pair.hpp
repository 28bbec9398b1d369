#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tscl/pl_lift.hpp"
#include "tscl/rational.hpp"

namespace tscl {

// Finite rooted binary tree, serialized in preorder as a bitstring with
// '1' for internal nodes and '0' for leaves. The leaves enumerate, left to
// right, a partition of [0,1] into standard dyadic intervals.
class BinTree {
 public:
  static BinTree parse(std::string_view bits) {
    if (bits.empty()) throw ParseError("malformed tree bitstring: empty");
    int need = 1;
    int leaves = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (need == 0)
        throw ParseError("malformed tree bitstring: trailing characters after a complete tree");
      char c = bits[i];
      if (c == '1') {
        ++need;  // consumes one pending node, adds two children
      } else if (c == '0') {
        --need;
        ++leaves;
      } else {
        throw ParseError(std::string("malformed tree bitstring: invalid character '") + c + "'");
      }
    }
    if (need != 0) throw ParseError("malformed tree bitstring: truncated");
    return BinTree(std::string(bits), leaves);
  }

  int leaves() const { return leaves_; }
  const std::string& bits() const { return bits_; }

  // The N+1 dyadic endpoints 0 = d_0 < ... < d_N = 1 of the leaf partition.
  std::vector<Rational> partition() const {
    std::vector<Rational> pts;
    pts.reserve(static_cast<std::size_t>(leaves_) + 1);
    std::vector<std::pair<Rational, Rational>> stack;
    stack.push_back({Rational(0), Rational(1)});
    for (char c : bits_) {
      auto [a, b] = stack.back();
      stack.pop_back();
      if (c == '1') {
        Rational mid = (a + b) / Rational(2);
        stack.push_back({mid, b});
        stack.push_back({a, mid});
      } else {
        pts.push_back(a);
      }
    }
    pts.push_back(Rational(1));
    return pts;
  }

 private:
  BinTree(std::string b, int l) : bits_(std::move(b)), leaves_(l) {}

  std::string bits_;
  int leaves_;
};

// Tree-pair diagram with rotation: leaf i of the domain tree maps affinely
// onto leaf (i + rotation) mod N of the range tree. Input-only constructor
// for elements of T; the canonical internal form is the PL lift.
struct TreePair {
  BinTree domain;
  BinTree range;
  int rotation;
};

namespace detail {
inline std::string_view trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t") + 1;
  return s.substr(b, e - b);
}
}  // namespace detail

// Accepts "domainBits | rangeBits | r".
inline TreePair parse_tree_pair(std::string_view text) {
  std::size_t p1 = text.find('|');
  std::size_t p2 = (p1 == std::string_view::npos) ? p1 : text.find('|', p1 + 1);
  if (p1 == std::string_view::npos || p2 == std::string_view::npos ||
      text.find('|', p2 + 1) != std::string_view::npos)
    throw ParseError("tree pair must look like 'domainBits | rangeBits | rotation'");

  BinTree dom = BinTree::parse(detail::trim(text.substr(0, p1)));
  BinTree ran = BinTree::parse(detail::trim(text.substr(p1 + 1, p2 - p1 - 1)));
  if (dom.leaves() != ran.leaves())
    throw ParseError("leaf count mismatch: domain has " + std::to_string(dom.leaves()) +
                     " leaves, range has " + std::to_string(ran.leaves()));

  std::string_view rs = detail::trim(text.substr(p2 + 1));
  bool neg = !rs.empty() && rs[0] == '-';
  std::string_view digits = neg ? rs.substr(1) : rs;
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
    throw ParseError("invalid rotation '" + std::string(rs) + "'");
  long long r = 0;
  for (char c : digits) {
    r = r * 10 + (c - '0');
    if (r > dom.leaves()) break;  // already out of range, avoid overflow
  }
  if (neg) r = -r;
  if (r < 0 || r >= dom.leaves())
    throw ParseError("rotation out of range: need 0 <= r < " + std::to_string(dom.leaves()));
  return TreePair{std::move(dom), std::move(ran), static_cast<int>(r)};
}

// The PL map sending domain leaf-interval i affinely onto range
// leaf-interval (i + r) mod N, lifted with the convention e_{k+N} = e_k + 1.
// Unreduced pairs normalize through breakpoint pruning.
inline CanonicalLift to_plmap(const TreePair& tp) {
  int n = tp.domain.leaves();
  if (n != tp.range.leaves())
    throw ParseError("leaf count mismatch: domain has " + std::to_string(n) +
                     " leaves, range has " + std::to_string(tp.range.leaves()));
  if (tp.rotation < 0 || tp.rotation >= n)
    throw ParseError("rotation out of range: need 0 <= r < " + std::to_string(n));
  std::vector<Rational> d = tp.domain.partition();
  std::vector<Rational> e = tp.range.partition();
  std::vector<Breakpoint> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    int k = i + tp.rotation;
    Rational y = (k < n) ? e[static_cast<std::size_t>(k)]
                         : e[static_cast<std::size_t>(k - n)] + Rational(1);
    pts.push_back({d[static_cast<std::size_t>(i)], std::move(y)});
  }
  return CanonicalLift(PLLift::from_breakpoints(std::move(pts)));
}

/*
 * Standard generators of T:
 *   A = x_0: x/2 on [0,1/2], x - 1/4 on [1/2,3/4], 2x - 1 on [3/4,1]
 *   B = x_1: identity on [0,1/2], half-scale copy of A on [1/2,1]
 *   R: rotation by 1/2
 */
inline CanonicalLift builtin(std::string_view name) {
  auto mk = [](std::vector<Breakpoint> pts) {
    return CanonicalLift(PLLift::from_breakpoints(std::move(pts)));
  };
  if (name == "id") return CanonicalLift();
  if (name == "A")
    return mk({{Rational(0), Rational(0)},
               {Rational(1, 2), Rational(1, 4)},
               {Rational(3, 4), Rational(1, 2)}});
  if (name == "B")
    return mk({{Rational(0), Rational(0)},
               {Rational(1, 2), Rational(1, 2)},
               {Rational(3, 4), Rational(5, 8)},
               {Rational(7, 8), Rational(3, 4)}});
  if (name == "R") return mk({{Rational(0), Rational(1, 2)}});
  throw ParseError("unknown builtin element '" + std::string(name) +
                   "' (expected id, A, B, or R)");
}

}  // namespace tscl
