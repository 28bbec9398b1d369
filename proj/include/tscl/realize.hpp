#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "tscl/central_extension.hpp"
#include "tscl/pl_lift.hpp"
#include "tscl/rational.hpp"

namespace tscl {

/*
 * The element of T cyclically shifting the dyadic partition
 * 0 = a_0 < a_1 < ... < a_q = 1, a_i = 1 - 2^{-i}, by p intervals:
 * [a_i, a_{i+1}] maps affinely onto [a_{i+p}, a_{i+p+1}] with the lift
 * convention a_{i+q} = a_i + 1. F(a_i) = a_{i+p} exactly, so F^q = x + p on
 * the partition and the translation number is p/q. The partition choice is
 * one closed form among many; any dyadic q-partition would do.
 */
inline CanonicalLift partition_cycler(const Int& p, const Int& q) {
  if (q < 1 || p < 0 || p >= q)
    throw std::invalid_argument("partition_cycler: need q >= 1 and 0 <= p < q");
  if (boost::multiprecision::gcd(p, q) != 1)
    throw std::invalid_argument("partition_cycler: p/q must be in lowest terms");
  if (q > 65536) throw std::invalid_argument("partition_cycler: q too large");

  long long qq = q.convert_to<long long>();
  long long pp = p.convert_to<long long>();
  std::vector<Rational> a(static_cast<std::size_t>(qq) + 1);
  a[0] = Rational(0);
  Int pow2 = 1;
  for (long long i = 1; i < qq; ++i) {
    pow2 <<= 1;
    a[static_cast<std::size_t>(i)] = Rational(pow2 - 1, pow2);
  }
  a[static_cast<std::size_t>(qq)] = Rational(1);

  std::vector<Breakpoint> pts;
  pts.reserve(static_cast<std::size_t>(qq));
  for (long long i = 0; i < qq; ++i) {
    long long k = i + pp;
    Rational y = (k < qq) ? a[static_cast<std::size_t>(k)]
                          : a[static_cast<std::size_t>(k - qq)] + Rational(1);
    pts.push_back({a[static_cast<std::size_t>(i)], std::move(y)});
  }
  return CanonicalLift(PLLift::from_breakpoints(std::move(pts)));
}

struct RealizationCertificate {
  Rational target;
  TnElement element;
  Rational verified_phi;
  Rational verified_scl;
};

/*
 * An explicit element of T_n with scl exactly `target`: write
 * 2 n target = j + n tau with j integral and tau in [0, 1), take the
 * partition cycler with rotation number tau and central coordinate j, then
 * re-derive phi and scl through the rotation-number engine and insist the
 * round trip is exact.
 */
inline RealizationCertificate realize_scl(const Rational& target, const Int& n,
                                          const SearchLimits& limits = {}) {
  if (n == 0) throw std::invalid_argument("realize_scl: extension level n must be non-zero");
  if (target < Rational(0)) throw ParseError("scl target must be non-negative");

  Rational v = Rational(2) * Rational(n) * target;
  Int j = (n > 0) ? floor_int(v) : ceil_int(v);
  Rational tau = (v - Rational(j)) / Rational(n);  // in [0, 1)
  TnElement g(partition_cycler(tau.numerator(), tau.denominator()), std::move(j), n);

  Rational vphi = phi_of(g, limits);
  Rational vscl = abs(vphi) / Rational(2 * boost::multiprecision::abs(n));
  if (vscl != target) throw std::logic_error("realization certificate mismatch");
  return {target, std::move(g), std::move(vphi), std::move(vscl)};
}

}  // namespace tscl
