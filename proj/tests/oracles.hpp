#pragma once

// Test-only oracles: closed-form evaluations that bypass the breakpoint
// machinery entirely, used to pin expected values independently.

#include "tscl/rational.hpp"

namespace oracles {

using tscl::Int;
using tscl::Rational;

// A = x_0 by its defining formula: x/2 on [0,1/2], x - 1/4 on [1/2,3/4],
// 2x - 1 on [3/4,1], extended by A(x+1) = A(x)+1.
inline Rational A_map(const Rational& x) {
  Int m = tscl::floor_int(x);
  Rational u = x - Rational(m);
  Rational v;
  if (u < Rational(1, 2)) {
    v = u / Rational(2);
  } else if (u < Rational(3, 4)) {
    v = u - Rational(1, 4);
  } else {
    v = Rational(2) * u - Rational(1);
  }
  return v + Rational(m);
}

// B = x_1: identity on [0,1/2], half-scale copy of A on [1/2,1].
inline Rational B_map(const Rational& x) {
  Int m = tscl::floor_int(x);
  Rational u = x - Rational(m);
  Rational v;
  if (u < Rational(1, 2)) {
    v = u;
  } else {
    v = Rational(1, 2) + A_map(Rational(2) * u - Rational(1)) / Rational(2);
  }
  return v + Rational(m);
}

}  // namespace oracles
