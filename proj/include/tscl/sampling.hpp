#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "tscl/central_extension.hpp"
#include "tscl/rational.hpp"
#include "tscl/tree_pair.hpp"

namespace tscl {

/*
 * Deterministic sample stream for the verify suites and the tests. The
 * generator is splitmix64 with bounded draws by plain modulo, so a seed
 * reproduces the identical stream on every platform. Random elements of T
 * are built from tree pairs: leaf count uniform in 1..max_leaves, then a
 * uniform shape for that leaf count (Catalan-weighted splits), both trees
 * drawn independently, rotation uniform. Central coordinates are uniform
 * in [-bound, bound].
 */
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  long long range(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
};

namespace detail {
// C_0 .. C_8; trees with L leaves number C_{L-1}.
inline constexpr std::array<std::uint64_t, 9> kCatalan = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
}  // namespace detail

inline std::string random_tree_bits(Rng& rng, int leaves) {
  if (leaves <= 1) return "0";
  std::uint64_t r = rng.below(detail::kCatalan[static_cast<std::size_t>(leaves - 1)]);
  int left = 1;
  for (; left < leaves - 1; ++left) {
    std::uint64_t w = detail::kCatalan[static_cast<std::size_t>(left - 1)] *
                      detail::kCatalan[static_cast<std::size_t>(leaves - left - 1)];
    if (r < w) break;
    r -= w;
  }
  return "1" + random_tree_bits(rng, left) + random_tree_bits(rng, leaves - left);
}

inline TreePair random_tree_pair(Rng& rng, int max_leaves = 8) {
  int leaves = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_leaves)));
  BinTree dom = BinTree::parse(random_tree_bits(rng, leaves));
  BinTree ran = BinTree::parse(random_tree_bits(rng, leaves));
  int rot = static_cast<int>(rng.below(static_cast<std::uint64_t>(leaves)));
  return TreePair{std::move(dom), std::move(ran), rot};
}

inline CanonicalLift random_thompson(Rng& rng, int max_leaves = 8) {
  return to_plmap(random_tree_pair(rng, max_leaves));
}

inline TnElement random_tn_element(Rng& rng, const Int& n, int max_leaves = 8,
                                   long long central_bound = 5) {
  CanonicalLift t = random_thompson(rng, max_leaves);
  return TnElement(std::move(t), Int(rng.range(-central_bound, central_bound)), n);
}

inline Rational random_rational(Rng& rng, long long num_bound = 999, long long den_bound = 999) {
  return Rational(rng.range(-num_bound, num_bound), rng.range(1, den_bound));
}

}  // namespace tscl
