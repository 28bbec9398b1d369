#pragma once

#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tscl/pl_lift.hpp"
#include "tscl/rational.hpp"
#include "tscl/rotation.hpp"

namespace tscl {

/*
 * Element (t, j) of the central extension T_n = T x Z with product
 * (s, i)(t, j) = (st, i + j + n chi(s, t)). The level n travels on every
 * element so that cross-level products fail loudly instead of silently.
 */
class TnElement {
 public:
  TnElement(CanonicalLift t, Int j, Int n)
      : t_(std::move(t)), j_(std::move(j)), n_(std::move(n)) {
    if (n_ == 0) throw std::invalid_argument("TnElement: extension level n must be non-zero");
    if (!validate_thompson(t_.lift()))
      throw ParseError(
          "element rejected: circle part must have dyadic breakpoints and "
          "power-of-two slopes");
  }

  static TnElement identity(const Int& n) { return TnElement(CanonicalLift(), Int(0), n); }

  const CanonicalLift& t() const { return t_; }
  const Int& j() const { return j_; }
  const Int& n() const { return n_; }

  friend bool operator==(const TnElement&, const TnElement&) = default;

 private:
  CanonicalLift t_;
  Int j_;
  Int n_;
};

inline void require_same_level(const TnElement& g, const TnElement& h) {
  if (g.n() != h.n())
    throw LevelMismatchError("level mismatch: cannot combine elements at n=" + g.n().str() +
                             " and n=" + h.n().str());
}

inline TnElement multiply(const TnElement& g, const TnElement& h) {
  require_same_level(g, h);
  Canonicalized c = canonicalize(compose(g.t().lift(), h.t().lift()));
  return TnElement(std::move(c.lift), g.j() + h.j() + g.n() * c.shift, g.n());
}

// (t, j)^{-1} = (t^{-1}, -j - n chi(t^{-1}, t)).
inline TnElement inverse(const TnElement& g) {
  Canonicalized inv = canonicalize(invert(g.t().lift()));
  Int chi = euler_cocycle(inv.lift, g.t());
  return TnElement(std::move(inv.lift), -g.j() - g.n() * chi, g.n());
}

inline TnElement power(const TnElement& g, Int k) {
  if (k < 0) return power(inverse(g), -k);
  TnElement acc = TnElement::identity(g.n());
  TnElement base = g;
  while (k > 0) {
    if ((k & 1) != 0) acc = multiply(acc, base);
    k >>= 1;
    if (k > 0) base = multiply(base, base);
  }
  return acc;
}

inline Rational phi_of(const TnElement& g, const SearchLimits& limits = {}) {
  return phi(g.n(), g.t(), g.j(), limits);
}

// scl(g) = |phi_n(g)| / (2|n|): the quasimorphism has defect |n|, and every
// element of T_n has a power in the commutator subgroup, so the closed form
// applies unconditionally.
inline Rational scl_value(const TnElement& g, const SearchLimits& limits = {}) {
  using boost::multiprecision::abs;
  return tscl::abs(phi_of(g, limits)) / Rational(2 * abs(g.n()));
}

// Largest |phi_n(gh) - phi_n(g) - phi_n(h)| over the sample; never exceeds
// |n|, the defect of phi_n.
inline Rational defect_sample(const Int& n,
                              const std::vector<std::pair<TnElement, TnElement>>& pairs,
                              const SearchLimits& limits = {}) {
  Rational best(0);
  for (const auto& [g, h] : pairs) {
    if (g.n() != n || h.n() != n)
      throw LevelMismatchError("defect_sample: pair is not at level n=" + n.str());
    Rational d =
        abs(phi_of(multiply(g, h), limits) - phi_of(g, limits) - phi_of(h, limits));
    if (d > best) best = d;
  }
  return best;
}

inline std::ostream& operator<<(std::ostream& os, const TnElement& g) {
  return os << "(t=" << g.t() << ", j=" << g.j().str() << ", n=" << g.n().str() << ")";
}

}  // namespace tscl
