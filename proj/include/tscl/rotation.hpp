#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "tscl/pl_lift.hpp"
#include "tscl/rational.hpp"

namespace tscl {

struct SearchLimits {
  long long mediant_budget = 64;
  Int denominator_cap = Int(1) << 20;
};

struct RotationCertificate {
  Rational value;            // translation number p/q in lowest terms
  Rational witness;          // x in [0,1) with F^q(x) = x + p, exactly
  long long iterations = 0;  // Stern-Brocot steps used
};

namespace detail {

// Leftmost zero in [0,1) of the displacement F(x) - x - p. Callers
// guarantee the extremes straddle zero; flat zero pieces resolve to their
// left endpoint.
inline Rational smallest_displacement_zero(const PLLift& f, const Int& p) {
  const auto& pts = f.points();
  const std::size_t n = pts.size();
  Rational rp(p);
  auto disp = [&](std::size_t i) { return pts[i].y - pts[i].x - rp; };
  Rational d0 = disp(0);
  for (std::size_t i = 0; i < n; ++i) {
    Rational di = disp(i);
    if (di == Rational(0)) return pts[i].x;
    Rational dn = (i + 1 < n) ? disp(i + 1) : d0;
    Rational xn = (i + 1 < n) ? pts[i + 1].x : pts.front().x + Rational(1);
    if ((di < Rational(0) && dn > Rational(0)) || (di > Rational(0) && dn < Rational(0)))
      return pts[i].x + (xn - pts[i].x) * (-di) / (dn - di);
  }
  throw std::logic_error("displacement has no zero although extremes straddle 0");
}

}  // namespace detail

/*
 * Exact translation number by Stern-Brocot bisection.
 *
 * extremes(F, 0) brackets tau(F) in an interval of length < 1, so at most
 * one integer can be the translation number; if one lies inside, a
 * displacement zero witnesses it directly. Otherwise tau sits strictly
 * between consecutive integers m and m+1, and we walk the Stern-Brocot tree
 * from (m/1, (m+1)/1): at the mediant p/q the sign of the displacement
 * extremes of F^q - p decides left, right, or an exact hit with a
 * periodic-point witness. Every mediant denominator is the sum of the two
 * current bounds' denominators, so F^q is assembled from two cached powers
 * with a single composition per step. Rational tau is reached in finitely
 * many steps; anything else exhausts the budget or the denominator cap.
 */
inline RotationCertificate translation_number(const PLLift& f,
                                              const SearchLimits& limits = {}) {
  Extremes e0 = extremes(f, Int(0));
  Int m = ceil_int(e0.min);
  if (Rational(m) <= e0.max)
    return {Rational(m), detail::smallest_displacement_zero(f, m), 0};

  Int lo_p = floor_int(e0.min), lo_q = 1;
  Int hi_p = lo_p + 1, hi_q = 1;
  std::map<Int, PLLift> powers;
  powers.emplace(Int(1), f);
  for (long long step = 1; step <= limits.mediant_budget; ++step) {
    Int p = lo_p + hi_p;
    Int q = lo_q + hi_q;
    if (q > limits.denominator_cap)
      throw BudgetError("denominator cap " + limits.denominator_cap.str() +
                        " exceeded in the rotation-number search");
    auto it = powers.find(q);
    if (it == powers.end())
      it = powers.emplace(q, compose(powers.at(lo_q), powers.at(hi_q))).first;
    Extremes e = extremes(it->second, p);
    if (e.min > Rational(0)) {
      lo_p = std::move(p);  // tau > p/q
      lo_q = std::move(q);
    } else if (e.max < Rational(0)) {
      hi_p = std::move(p);  // tau < p/q
      hi_q = std::move(q);
    } else {
      return {Rational(p, q), detail::smallest_displacement_zero(it->second, p), step};
    }
  }
  throw BudgetError("mediant budget (" + std::to_string(limits.mediant_budget) +
                    " steps) exhausted; the translation number has a larger "
                    "denominator or is irrational");
}

// Finite Birkhoff estimate F^k(0)/k; always within 1/k of the exact value.
inline Rational translation_estimate(const PLLift& f, long long k) {
  if (k < 1) throw std::invalid_argument("translation_estimate: k must be >= 1");
  Rational x(0);
  for (long long i = 0; i < k; ++i) x = f(x);
  return x / Rational(k);
}

// chi(s, t) = s~(t~(0)) - (st)~(0) for canonical lifts: the integer dropped
// when the composite is re-canonicalized. Always 0 or 1, and 0 whenever
// either argument is the identity.
inline int euler_cocycle(const CanonicalLift& s, const CanonicalLift& t) {
  return canonicalize(compose(s.lift(), t.lift())).shift.convert_to<int>();
}

// a(t, k) = chi(t, t) + chi(t^2, t) + ... + chi(t^{k-1}, t); a(t, 1) = 0.
inline Int partial_sum_a(const CanonicalLift& t, long long k) {
  if (k < 1) throw std::invalid_argument("partial_sum_a: k must be >= 1");
  Int sum = 0;
  CanonicalLift pow = t;  // canonical lift of t^i
  for (long long i = 1; i < k; ++i) {
    Canonicalized c = canonicalize(compose(pow.lift(), t.lift()));
    sum += c.shift;  // chi(t^i, t)
    pow = std::move(c.lift);
  }
  return sum;
}

// floor(t~^k(0)) for the canonical lift: the independent route that must
// agree with partial_sum_a by telescoping.
inline Int floor_of_iterate(const CanonicalLift& t, long long k) {
  if (k < 1) throw std::invalid_argument("floor_of_iterate: k must be >= 1");
  Rational x(0);
  for (long long i = 0; i < k; ++i) x = t(x);
  return floor_int(x);
}

// phi_n(t, j) = j + n * tau(t~). The limit of a(t, k)/k equals the
// translation number of the canonical lift, so this is exact.
inline Rational phi(const Int& n, const CanonicalLift& t, const Int& j,
                    const SearchLimits& limits = {}) {
  if (n == 0) throw std::invalid_argument("phi: extension level n must be non-zero");
  return Rational(j) + Rational(n) * translation_number(t.lift(), limits).value;
}

}  // namespace tscl
