#include "tscl/pl_lift.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tscl/sampling.hpp"
#include "tscl/tree_pair.hpp"

using tscl::Breakpoint;
using tscl::CanonicalLift;
using tscl::Int;
using tscl::PLLift;
using tscl::Rational;

namespace {

PLLift lift(std::vector<Breakpoint> pts) { return PLLift::from_breakpoints(std::move(pts)); }

std::string thrown_message(std::vector<Breakpoint> pts) {
  try {
    PLLift::from_breakpoints(std::move(pts));
  } catch (const tscl::ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(PLLift, EvaluateIdentityAndRotation) {
  EXPECT_EQ(PLLift::identity()(Rational(1, 3)), Rational(1, 3));
  PLLift r = tscl::builtin("R").lift();
  EXPECT_EQ(r(Rational(3, 4)), Rational(5, 4));
  EXPECT_EQ(r(Rational(0)), Rational(1, 2));
  EXPECT_EQ(r(Rational(-1, 2)), Rational(0));
}

TEST(PLLift, EvaluateMatchesClosedFormForA) {
  PLLift a = tscl::builtin("A").lift();
  EXPECT_EQ(a(Rational(1, 2)), Rational(1, 4));
  for (int num = -32; num <= 32; ++num) {
    Rational x(num, 16);
    EXPECT_EQ(a(x), oracles::A_map(x)) << "at x = " << x;
  }
  tscl::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    Rational x(rng.range(-300, 300), 1 << rng.below(8));
    EXPECT_EQ(a(x), oracles::A_map(x)) << "at x = " << x;
  }
}

TEST(PLLift, EvaluateMatchesClosedFormForB) {
  PLLift b = tscl::builtin("B").lift();
  tscl::Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    Rational x(rng.range(-300, 300), 1 << rng.below(8));
    EXPECT_EQ(b(x), oracles::B_map(x)) << "at x = " << x;
  }
}

TEST(PLLift, PeriodicityHoldsEverywhere) {
  tscl::Rng rng(13);
  for (int i = 0; i < 50; ++i) {
    PLLift f = tscl::random_thompson(rng).lift();
    Rational x = tscl::random_rational(rng, 40, 16);
    EXPECT_EQ(f(x + Rational(1)), f(x) + Rational(1));
  }
}

TEST(PLLift, ComposeIdentityIsNeutral) {
  PLLift a = tscl::builtin("A").lift();
  EXPECT_EQ(tscl::compose(a, PLLift::identity()), a);
  EXPECT_EQ(tscl::compose(PLLift::identity(), a), a);
}

TEST(PLLift, HalfRotationSquaredIsFullShift) {
  PLLift r = tscl::builtin("R").lift();
  PLLift rr = tscl::compose(r, r);
  EXPECT_EQ(rr, lift({{Rational(0), Rational(1)}}));
}

TEST(PLLift, ComposeWithInverseGivesIdentity) {
  PLLift a = tscl::builtin("A").lift();
  EXPECT_EQ(tscl::compose(a, tscl::invert(a)), PLLift::identity());
  EXPECT_EQ(tscl::compose(tscl::invert(a), a), PLLift::identity());
}

TEST(PLLift, InvertExamples) {
  EXPECT_EQ(tscl::invert(PLLift::identity()), PLLift::identity());
  PLLift rinv = tscl::invert(tscl::builtin("R").lift());
  EXPECT_EQ(rinv, lift({{Rational(0), Rational(-1, 2)}}));
  EXPECT_EQ(tscl::invert(tscl::builtin("A").lift())(Rational(1, 4)), Rational(1, 2));
}

TEST(PLLift, InverseAtSolvesExactly) {
  tscl::Rng rng(14);
  for (int i = 0; i < 50; ++i) {
    PLLift f = tscl::random_thompson(rng).lift();
    Rational x = tscl::random_rational(rng, 40, 16);
    EXPECT_EQ(f.inverse_at(f(x)), x);
  }
}

TEST(PLLift, CanonicalizeExamples) {
  auto [c1, k1] = tscl::canonicalize(lift({{Rational(0), Rational(5, 2)}}));
  EXPECT_EQ(c1.lift(), lift({{Rational(0), Rational(1, 2)}}));
  EXPECT_EQ(k1, Int(2));

  auto [c2, k2] = tscl::canonicalize(PLLift::identity());
  EXPECT_EQ(c2, CanonicalLift::identity());
  EXPECT_EQ(k2, Int(0));

  auto [c3, k3] = tscl::canonicalize(lift({{Rational(0), Rational(-1, 4)}}));
  EXPECT_EQ(c3.lift(), lift({{Rational(0), Rational(3, 4)}}));
  EXPECT_EQ(k3, Int(-1));
}

TEST(PLLift, ExtremesExamples) {
  tscl::Extremes e_id = tscl::extremes(PLLift::identity(), Int(0));
  EXPECT_EQ(e_id.min, Rational(0));
  EXPECT_EQ(e_id.max, Rational(0));

  tscl::Extremes e_r = tscl::extremes(tscl::builtin("R").lift(), Int(0));
  EXPECT_EQ(e_r.min, Rational(1, 2));
  EXPECT_EQ(e_r.max, Rational(1, 2));

  tscl::Extremes e_a = tscl::extremes(tscl::builtin("A").lift(), Int(0));
  EXPECT_EQ(e_a.min, Rational(-1, 4));
  EXPECT_EQ(e_a.max, Rational(0));

  tscl::Extremes e_shift = tscl::extremes(tscl::builtin("A").lift(), Int(1));
  EXPECT_EQ(e_shift.min, Rational(-5, 4));
  EXPECT_EQ(e_shift.max, Rational(-1));
}

TEST(PLLift, ValidateThompson) {
  EXPECT_TRUE(tscl::validate_thompson(tscl::builtin("A").lift()));
  EXPECT_TRUE(tscl::validate_thompson(tscl::builtin("B").lift()));
  EXPECT_TRUE(tscl::validate_thompson(tscl::builtin("R").lift()));
  // non-dyadic breakpoint
  EXPECT_FALSE(tscl::validate_thompson(lift({{Rational(0), Rational(0)},
                                             {Rational(1, 3), Rational(1, 2)}})));
  // dyadic data but slope 3 on [0, 1/4]
  EXPECT_FALSE(tscl::validate_thompson(lift({{Rational(0), Rational(0)},
                                             {Rational(1, 4), Rational(3, 4)}})));
}

TEST(PLLift, ConstructionRejectsBadData) {
  EXPECT_NE(thrown_message({}).find("must not be empty"), std::string::npos);
  EXPECT_NE(thrown_message({{Rational(1, 4), Rational(0)}}).find("first x-coordinate"),
            std::string::npos);
  EXPECT_NE(thrown_message({{Rational(0), Rational(0)}, {Rational(3, 2), Rational(2)}})
                .find("lie in [0,1)"),
            std::string::npos);
  EXPECT_NE(thrown_message({{Rational(0), Rational(0)},
                            {Rational(1, 2), Rational(1, 4)},
                            {Rational(1, 2), Rational(1, 2)}})
                .find("strictly increasing"),
            std::string::npos);
  EXPECT_NE(thrown_message({{Rational(0), Rational(1, 2)}, {Rational(1, 2), Rational(1, 4)}})
                .find("y-values"),
            std::string::npos);
  EXPECT_NE(thrown_message({{Rational(0), Rational(0)}, {Rational(1, 2), Rational(3, 2)}})
                .find("wrap"),
            std::string::npos);
}

TEST(PLLift, PruningRemovesCollinearPoints) {
  // x + 0 written with three stored points collapses to the identity.
  PLLift padded = lift({{Rational(0), Rational(0)},
                        {Rational(1, 4), Rational(1, 4)},
                        {Rational(1, 2), Rational(1, 2)}});
  EXPECT_EQ(padded, PLLift::identity());
  EXPECT_EQ(padded.pieces(), 1u);
  // a rotation written with a redundant midpoint
  PLLift r2 = lift({{Rational(0), Rational(1, 2)}, {Rational(1, 2), Rational(1)}});
  EXPECT_EQ(r2, tscl::builtin("R").lift());
}

TEST(PLLift, CanonicalLiftRejectsShiftedMaps) {
  EXPECT_THROW(CanonicalLift(lift({{Rational(0), Rational(3, 2)}})), tscl::ParseError);
  EXPECT_THROW(CanonicalLift(lift({{Rational(0), Rational(-1, 4)}})), tscl::ParseError);
  EXPECT_NO_THROW(CanonicalLift(lift({{Rational(0), Rational(3, 4)}})));
}

TEST(PLLift, SampledAlgebra) {
  tscl::Rng rng(15);
  for (int i = 0; i < 40; ++i) {
    PLLift f = tscl::random_thompson(rng, 6).lift();
    PLLift g = tscl::random_thompson(rng, 6).lift();
    PLLift h = tscl::random_thompson(rng, 6).lift();
    EXPECT_EQ(tscl::compose(tscl::compose(f, g), h), tscl::compose(f, tscl::compose(g, h)));
    EXPECT_EQ(tscl::compose(f, tscl::invert(f)), PLLift::identity());
    Rational x = tscl::random_rational(rng, 30, 16);
    EXPECT_EQ(tscl::compose(f, g)(x), f(g(x)));
    EXPECT_TRUE(tscl::validate_thompson(tscl::compose(f, g)));
    EXPECT_TRUE(tscl::validate_thompson(tscl::invert(f)));
  }
}

TEST(PLLift, ExtremesBracketDisplacement) {
  tscl::Rng rng(16);
  for (int i = 0; i < 40; ++i) {
    PLLift f = tscl::random_thompson(rng).lift();
    for (long long p = -1; p <= 2; ++p) {
      tscl::Extremes e = tscl::extremes(f, Int(p));
      Rational x = tscl::frac(tscl::random_rational(rng, 30, 16));
      Rational d = f(x) - x - Rational(p);
      EXPECT_LE(e.min, d);
      EXPECT_LE(d, e.max);
    }
  }
}

TEST(PLLift, PowerLift) {
  PLLift r = tscl::builtin("R").lift();
  EXPECT_EQ(tscl::power_lift(r, 2), lift({{Rational(0), Rational(1)}}));
  EXPECT_EQ(tscl::power_lift(r, 0), PLLift::identity());
  EXPECT_EQ(tscl::power_lift(r, -1), tscl::invert(r));
  PLLift a = tscl::builtin("A").lift();
  EXPECT_EQ(tscl::power_lift(a, 3), tscl::compose(a, tscl::compose(a, a)));
  EXPECT_EQ(tscl::compose(tscl::power_lift(a, 3), tscl::power_lift(a, -3)), PLLift::identity());
}
