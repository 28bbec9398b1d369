#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "tscl/central_extension.hpp"
#include "tscl/realize.hpp"
#include "tscl/rotation.hpp"
#include "tscl/sampling.hpp"
#include "tscl/word.hpp"

namespace tscl {

struct PropertyResult {
  std::string suite;
  std::string name;
  bool pass = true;
  std::string detail;
};

namespace verify_detail {

struct Check {
  bool pass = true;
  std::string detail;
  void expect(bool ok, const std::string& what) {
    if (pass && !ok) {
      pass = false;
      detail = what;
    }
  }
};

inline void run_property(std::vector<PropertyResult>& out, const std::string& suite,
                         const std::string& name,
                         const std::function<void(Check&)>& body) {
  Check c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.pass = false;
    c.detail = std::string("exception: ") + e.what();
  }
  out.push_back({suite, name, c.pass, std::move(c.detail)});
}

inline std::uint64_t suite_seed(std::uint64_t seed, std::uint64_t tag) {
  return seed * 0x100000001b3ull + tag;
}

}  // namespace verify_detail

inline void suite_arith(std::vector<PropertyResult>& out, long long samples,
                        std::uint64_t seed) {
  using verify_detail::Check;
  using verify_detail::run_property;
  run_property(out, "arith", "floor-bracket", [&](Check& c) {
    Rng rng(verify_detail::suite_seed(seed, 1));
    for (long long i = 0; i < samples; ++i) {
      Rational a = random_rational(rng);
      Int f = floor_int(a);
      c.expect(Rational(f) <= a && a < Rational(f + 1), "floor bracket fails at " + to_string(a));
    }
  });
  run_property(out, "arith", "mediant-strictly-between", [&](Check& c) {
    Rng rng(verify_detail::suite_seed(seed, 2));
    for (long long i = 0; i < samples; ++i) {
      Rational a = random_rational(rng);
      Rational b = random_rational(rng);
      if (a == b) continue;
      if (b < a) std::swap(a, b);
      Rational m = mediant(a, b);
      c.expect(a < m && m < b, "mediant not between " + to_string(a) + " and " + to_string(b));
    }
  });
  run_property(out, "arith", "add-sub-roundtrip", [&](Check& c) {
    Rng rng(verify_detail::suite_seed(seed, 3));
    for (long long i = 0; i < samples; ++i) {
      Rational a = random_rational(rng);
      Rational b = random_rational(rng);
      c.expect((a + b) - b == a, "(a+b)-b != a at a=" + to_string(a) + " b=" + to_string(b));
    }
  });
}

inline void suite_plmap(std::vector<PropertyResult>& out, long long samples,
                        std::uint64_t seed) {
  using verify_detail::Check;
  using verify_detail::run_property;
  run_property(out, "plmap", "compose-associative", [&](Check& c) {
    Rng rng(verify_detail::suite_seed(seed, 11));
    for (long long i = 0; i < samples; ++i) {
      PLLift f = random_thompson(rng, 6).lift();
      PLLift g = random_thompson(rng, 6).lift();
      PLLift h = random_thompson(rng, 6).lift();
      c.expect(compose(compose(f, g), h) == compose(f, compose(g, h)),
               "associativity fails on sample " + std::to_string(i));
    }
  });
  run_property(out, "plmap", "invert-two-sided", [&](Check& c) {
    Rng rng(verify_detail::suite_seed(seed, 12));
    for (long long i = 0; i < samples; ++i) {
      PLLift f = random_thompson(rng).lift();
      c.expect(compose(f, invert(f)) == PLLift::identity() &&
                   compose(invert(f), f) == PLLift::identity(),
               "inverse not two-sided on sample " + std::to_string(i));
    }
  });
  run_property(out, "plmap", "compose-evaluates-pointwise", [&](Check& c) {
    Rng rng(verify_detail::suite_seed(seed, 13));
    for (long long i = 0; i < samples; ++i) {
      PLLift f = random_thompson(rng).lift();
      PLLift g = random_thompson(rng).lift();
      PLLift fg = compose(f, g);
      for (int k = 0; k < 3; ++k) {
        Rational x = random_rational(rng, 50, 16);
        c.expect(fg(x) == f(g(x)), "composite value mismatch at x=" + to_string(x));
      }
    }
  });
  run_property(out, "plmap", "extremes-bracket-displacement", [&](Check& c) {
    Rng rng(verify_detail::suite_seed(seed, 14));
    for (long long i = 0; i < samples; ++i) {
      PLLift f = random_thompson(rng).lift();
      for (long long p = -1; p <= 1; ++p) {
        Extremes e = extremes(f, Int(p));
        Rational x = frac(random_rational(rng, 50, 16));
        Rational d = f(x) - x - Rational(p);
        c.expect(e.min <= d && d <= e.max, "extremes do not bracket at x=" + to_string(x));
      }
    }
  });
  run_property(out, "plmap", "thompson-closed-under-ops", [&](Check& c) {
    Rng rng(verify_detail::suite_seed(seed, 15));
    for (long long i = 0; i < samples; ++i) {
      PLLift f = random_thompson(rng).lift();
      PLLift g = random_thompson(rng).lift();
      c.expect(validate_thompson(compose(f, g)) && validate_thompson(invert(f)),
               "Thompson validation not closed on sample " + std::to_string(i));
    }
  });
}

inline void suite_dynamics(std::vector<PropertyResult>& out, long long samples,
                           std::uint64_t seed, const SearchLimits& limits) {
  using verify_detail::Check;
  using verify_detail::run_property;
  auto circle_product = [](const CanonicalLift& a, const CanonicalLift& b) {
    return canonicalize(compose(a.lift(), b.lift())).lift;
  };
  run_property(out, "dynamics", "cocycle-identity", [&](Check& c) {
    Rng rng(verify_detail::suite_seed(seed, 21));
    for (long long i = 0; i < samples; ++i) {
      CanonicalLift s = random_thompson(rng);
      CanonicalLift t = random_thompson(rng);
      CanonicalLift u = random_thompson(rng);
      int lhs = euler_cocycle(s, t) + euler_cocycle(circle_product(s, t), u);
      int rhs = euler_cocycle(t, u) + euler_cocycle(s, circle_product(t, u));
      c.expect(lhs == rhs, "cocycle identity fails on sample " + std::to_string(i));
    }
  });
  run_property(out, "dynamics", "cocycle-in-01", [&](Check& c) {
    Rng rng(verify_detail::suite_seed(seed, 22));
    for (long long i = 0; i < samples; ++i) {
      int chi = euler_cocycle(random_thompson(rng), random_thompson(rng));
      c.expect(chi == 0 || chi == 1, "cocycle value " + std::to_string(chi));
    }
  });
  run_property(out, "dynamics", "partial-sum-floor-identity", [&](Check& c) {
    Rng rng(verify_detail::suite_seed(seed, 23));
    for (long long i = 0; i < samples; ++i) {
      CanonicalLift t = random_thompson(rng);
      long long k = 1 + static_cast<long long>(rng.below(32));
      c.expect(partial_sum_a(t, k) == floor_of_iterate(t, k),
               "a(t,k) != floor(t^k(0)) at k=" + std::to_string(k));
    }
  });
  run_property(out, "dynamics", "translation-homogeneous", [&](Check& c) {
    Rng rng(verify_detail::suite_seed(seed, 24));
    for (long long i = 0; i < samples; ++i) {
      PLLift f = random_thompson(rng, 6).lift();
      long long k = 1 + static_cast<long long>(rng.below(8));
      Rational tau = translation_number(f, limits).value;
      Rational tau_k = translation_number(power_lift(f, k), limits).value;
      c.expect(tau_k == Rational(k) * tau, "tau(F^k) != k tau(F) at k=" + std::to_string(k));
    }
  });
  // Lift-level conjugation preserves the translation number exactly; at
  // circle level only its fractional part survives (the dropped integer is
  // absorbed by the central coordinate in T_n).
  run_property(out, "dynamics", "conjugation-invariance", [&](Check& c) {
    Rng rng(verify_detail::suite_seed(seed, 25));
    for (long long i = 0; i < samples; ++i) {
      CanonicalLift f = random_thompson(rng, 6);
      CanonicalLift g = random_thompson(rng, 6);
      Rational tau = translation_number(f.lift(), limits).value;
      PLLift conj_lift = compose(compose(g.lift(), f.lift()), invert(g.lift()));
      c.expect(translation_number(conj_lift, limits).value == tau,
               "lift-level conjugation changed tau on sample " + std::to_string(i));
      CanonicalLift conj_circle = canonicalize(conj_lift).lift;
      c.expect(frac(translation_number(conj_circle.lift(), limits).value) == frac(tau),
               "circle-level conjugation changed the rotation number mod 1");
    }
  });
  run_property(out, "dynamics", "estimate-brackets-rotation", [&](Check& c) {
    Rng rng(verify_detail::suite_seed(seed, 26));
    for (long long i = 0; i < samples; ++i) {
      PLLift f = random_thompson(rng).lift();
      Rational tau = translation_number(f, limits).value;
      for (long long k : {10LL, 100LL}) {
        Rational err = abs(translation_estimate(f, k) - tau);
        c.expect(err <= Rational(1, k), "estimate off by " + to_string(err) + " at k=" + std::to_string(k));
      }
    }
  });
  run_property(out, "dynamics", "phi-homogeneous", [&](Check& c) {
    Rng rng(verify_detail::suite_seed(seed, 27));
    const Int levels[] = {Int(1), Int(12), Int(21)};
    for (long long i = 0; i < samples; ++i) {
      const Int& n = levels[i % 3];
      TnElement g = random_tn_element(rng, n, 6);
      long long k = 1 + static_cast<long long>(rng.below(8));
      Rational lhs = phi_of(power(g, Int(k)), limits);
      Rational rhs = Rational(k) * phi_of(g, limits);
      c.expect(lhs == rhs, "phi(g^k) != k phi(g) at k=" + std::to_string(k));
      c.expect(phi_of(inverse(g), limits) == -phi_of(g, limits), "phi(g^-1) != -phi(g)");
    }
  });
  run_property(out, "dynamics", "defect-scaling-and-bound", [&](Check& c) {
    Rng rng(verify_detail::suite_seed(seed, 28));
    const Int levels[] = {Int(1), Int(12), Int(21)};
    for (long long i = 0; i < samples; ++i) {
      CanonicalLift s = random_thompson(rng, 6);
      CanonicalLift t = random_thompson(rng, 6);
      long long is = rng.range(-5, 5), it = rng.range(-5, 5);
      Rational delta1;
      for (const Int& n : levels) {
        TnElement g(s, Int(is), n), h(t, Int(it), n);
        Rational delta =
            phi_of(multiply(g, h), limits) - phi_of(g, limits) - phi_of(h, limits);
        // the displayed form: n (chi(s,t) + tau(st) - tau(s) - tau(t))
        Rational expr =
            Rational(n) *
            (Rational(euler_cocycle(s, t)) +
             translation_number(circle_product(s, t).lift(), limits).value -
             translation_number(s.lift(), limits).value -
             translation_number(t.lift(), limits).value);
        c.expect(delta == expr, "defect differs from the displayed expression");
        if (n == 1) delta1 = delta;
        c.expect(delta == Rational(n) * delta1, "defect does not scale by n");
        c.expect(abs(delta) <= Rational(n), "defect exceeds n=" + n.str());
      }
    }
  });
}

inline void suite_extension(std::vector<PropertyResult>& out, long long samples,
                            std::uint64_t seed, const SearchLimits& limits) {
  using verify_detail::Check;
  using verify_detail::run_property;
  const Int levels[] = {Int(1), Int(12), Int(21)};
  run_property(out, "extension", "group-axioms", [&](Check& c) {
    Rng rng(verify_detail::suite_seed(seed, 31));
    for (long long i = 0; i < samples; ++i) {
      const Int& n = levels[i % 3];
      TnElement g = random_tn_element(rng, n, 6);
      TnElement h = random_tn_element(rng, n, 6);
      TnElement k = random_tn_element(rng, n, 6);
      TnElement id = TnElement::identity(n);
      c.expect(multiply(multiply(g, h), k) == multiply(g, multiply(h, k)),
               "associativity fails on sample " + std::to_string(i));
      c.expect(multiply(g, id) == g && multiply(id, g) == g, "identity fails");
      c.expect(multiply(g, inverse(g)) == id && multiply(inverse(g), g) == id,
               "inverses fail");
    }
  });
  run_property(out, "extension", "center-commutes", [&](Check& c) {
    Rng rng(verify_detail::suite_seed(seed, 32));
    for (long long i = 0; i < samples; ++i) {
      const Int& n = levels[i % 3];
      TnElement g = random_tn_element(rng, n);
      TnElement z(CanonicalLift(), Int(rng.range(-8, 8)), n);
      c.expect(multiply(g, z) == multiply(z, g), "central element does not commute");
    }
  });
  run_property(out, "extension", "phi-class-function", [&](Check& c) {
    Rng rng(verify_detail::suite_seed(seed, 33));
    for (long long i = 0; i < samples; ++i) {
      const Int& n = levels[i % 3];
      TnElement g = random_tn_element(rng, n, 6);
      TnElement h = random_tn_element(rng, n, 6);
      TnElement conj = multiply(multiply(h, g), inverse(h));
      c.expect(phi_of(conj, limits) == phi_of(g, limits), "phi not conjugation-invariant");
    }
  });
  run_property(out, "extension", "level-scaling", [&](Check& c) {
    Rng rng(verify_detail::suite_seed(seed, 34));
    for (long long i = 0; i < samples; ++i) {
      CanonicalLift t = random_thompson(rng, 6);
      Int j(rng.range(-5, 5));
      for (const Int& n : {Int(12), Int(21)}) {
        Rational lhs = phi(n, t, n * j, limits);
        Rational rhs = Rational(n) * phi(Int(1), t, j, limits);
        c.expect(lhs == rhs, "phi_n(t, n j) != n phi_1(t, j) at n=" + n.str());
      }
    }
  });
  run_property(out, "extension", "scl-conjugation-and-powers", [&](Check& c) {
    Rng rng(verify_detail::suite_seed(seed, 35));
    for (long long i = 0; i < samples; ++i) {
      const Int& n = levels[i % 3];
      TnElement g = random_tn_element(rng, n, 5);
      TnElement h = random_tn_element(rng, n, 5);
      Rational s = scl_value(g, limits);
      c.expect(scl_value(multiply(multiply(h, g), inverse(h)), limits) == s,
               "scl not constant on a conjugacy sample");
      long long k = 1 + static_cast<long long>(rng.below(4));
      c.expect(scl_value(power(g, Int(k)), limits) == Rational(k) * s,
               "scl(g^k) != k scl(g) at k=" + std::to_string(k));
    }
  });
  run_property(out, "extension", "level-mismatch-rejected", [&](Check& c) {
    if (samples < 1) return;
    TnElement a = TnElement::identity(Int(12));
    TnElement b = TnElement::identity(Int(21));
    bool threw = false;
    try {
      multiply(a, b);
    } catch (const LevelMismatchError&) {
      threw = true;
    }
    c.expect(threw, "cross-level product did not raise a level mismatch");
  });
}

inline void suite_word(std::vector<PropertyResult>& out, long long samples,
                       std::uint64_t seed, const SearchLimits& limits) {
  using verify_detail::Check;
  using verify_detail::run_property;
  GeneratorTable table = builtin_table_for_level(Int(12));
  table.images.emplace("z", TnElement(CanonicalLift(), Int(1), Int(12)));
  const std::string names[] = {"alpha", "beta", "rho", "z"};
  auto random_word = [&](Rng& rng, int max_len) {
    Word w;
    int len = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_len)));
    for (int i = 0; i < len; ++i) {
      long long e = rng.range(-2, 2);
      if (e == 0) e = 1;
      w.push_back({names[rng.below(4)], Int(e)});
    }
    return w;
  };
  auto inverse_word = [](const Word& w) {
    Word out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->name, -it->exponent});
    return out;
  };
  run_property(out, "word", "evaluation-homomorphism", [&](Check& c) {
    Rng rng(verify_detail::suite_seed(seed, 41));
    for (long long i = 0; i < samples; ++i) {
      Word u = random_word(rng, 3);
      Word v = random_word(rng, 3);
      Word uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      c.expect(evaluate_word(uv, table) ==
                   multiply(evaluate_word(u, table), evaluate_word(v, table)),
               "eval(uv) != eval(u) eval(v) on sample " + std::to_string(i));
    }
  });
  run_property(out, "word", "scl-power", [&](Check& c) {
    Rng rng(verify_detail::suite_seed(seed, 42));
    for (long long i = 0; i < samples; ++i) {
      Word w = random_word(rng, 2);
      long long k = 2 + static_cast<long long>(rng.below(2));
      Word wk;
      for (long long r = 0; r < k; ++r) wk.insert(wk.end(), w.begin(), w.end());
      c.expect(scl_of_word(wk, table, limits) == Rational(k) * scl_of_word(w, table, limits),
               "scl(w^k) != k scl(w) at k=" + std::to_string(k));
    }
  });
  run_property(out, "word", "scl-conjugation-invariant", [&](Check& c) {
    Rng rng(verify_detail::suite_seed(seed, 43));
    for (long long i = 0; i < samples; ++i) {
      Word w = random_word(rng, 2);
      Word u = random_word(rng, 2);
      Word conj = u;
      conj.insert(conj.end(), w.begin(), w.end());
      Word ui = inverse_word(u);
      conj.insert(conj.end(), ui.begin(), ui.end());
      c.expect(scl_of_word(conj, table, limits) == scl_of_word(w, table, limits),
               "scl(u w u^-1) != scl(w) on sample " + std::to_string(i));
    }
  });
}

inline void suite_realizer(std::vector<PropertyResult>& out, long long samples,
                           std::uint64_t seed, const SearchLimits& user_limits) {
  using verify_detail::Check;
  using verify_detail::run_property;
  // The grid targets are fixed, and the deepest of them (tau = 1/105 at
  // n = 21) needs ~104 mediant steps, so the grid carries its own budget
  // rather than inheriting the CLI default.
  SearchLimits limits = user_limits;
  if (limits.mediant_budget < 1024) limits.mediant_budget = 1024;
  if (limits.denominator_cap < (Int(1) << 24)) limits.denominator_cap = Int(1) << 24;
  // The round-trip grid is fixed (targets a/b, 0 <= a <= 10, 1 <= b <= 10);
  // samples only gates whether it runs at all.
  run_property(out, "realizer", "roundtrip-grid", [&](Check& c) {
    if (samples < 1) return;
    for (const Int& n : {Int(1), Int(12), Int(21)}) {
      for (long long a = 0; a <= 10; ++a) {
        for (long long b = 1; b <= 10; ++b) {
          Rational q(a, b);
          RealizationCertificate cert = realize_scl(q, n, limits);
          if (scl_value(cert.element, limits) != q) {
            c.expect(false, "round trip fails at q=" + to_string(q) + " n=" + n.str());
            return;
          }
        }
      }
    }
  });
  run_property(out, "realizer", "cycler-permutes-partition", [&](Check& c) {
    Rng rng(verify_detail::suite_seed(seed, 52));
    for (long long i = 0; i < samples; ++i) {
      long long q = 1 + static_cast<long long>(rng.below(12));
      long long p = static_cast<long long>(rng.below(static_cast<std::uint64_t>(q)));
      if (boost::multiprecision::gcd(Int(p), Int(q)) != 1) continue;
      CanonicalLift f = partition_cycler(Int(p), Int(q));
      std::vector<Rational> a(static_cast<std::size_t>(q) + 1);
      a[0] = Rational(0);
      Int pow2 = 1;
      for (long long t = 1; t < q; ++t) {
        pow2 <<= 1;
        a[static_cast<std::size_t>(t)] = Rational(pow2 - 1, pow2);
      }
      a[static_cast<std::size_t>(q)] = Rational(1);
      for (long long t = 0; t < q; ++t) {
        long long k = t + p;
        Rational want = (k < q) ? a[static_cast<std::size_t>(k)]
                                : a[static_cast<std::size_t>(k - q)] + Rational(1);
        c.expect(f(a[static_cast<std::size_t>(t)]) == want,
                 "cycler image wrong at partition point " + std::to_string(t));
      }
    }
  });
  run_property(out, "realizer", "cycler-is-thompson", [&](Check& c) {
    Rng rng(verify_detail::suite_seed(seed, 53));
    for (long long i = 0; i < samples; ++i) {
      long long q = 1 + static_cast<long long>(rng.below(16));
      long long p = static_cast<long long>(rng.below(static_cast<std::uint64_t>(q)));
      if (boost::multiprecision::gcd(Int(p), Int(q)) != 1) continue;
      c.expect(validate_thompson(partition_cycler(Int(p), Int(q)).lift()),
               "cycler fails Thompson validation at p/q=" + std::to_string(p) + "/" + std::to_string(q));
    }
  });
  // Every rational on a small grid occurs as a phi_12 value of a realized
  // element (negatives through inverses).
  run_property(out, "realizer", "phi-hits-grid", [&](Check& c) {
    if (samples < 1) return;
    const Int n(12);
    for (long long a = 0; a <= 5; ++a) {
      for (long long b = 1; b <= 5; ++b) {
        for (int sign : {1, -1}) {
          Rational r(sign * a, b);
          Rational q = abs(r) / Rational(2 * n);
          TnElement g = realize_scl(q, n, limits).element;
          if (sign < 0) g = inverse(g);
          if (phi_of(g, limits) != r) {
            c.expect(false, "no realized element with phi = " + to_string(r));
            return;
          }
        }
      }
    }
  });
}

inline std::vector<PropertyResult> run_suite(const std::string& suite, long long samples,
                                             std::uint64_t seed,
                                             const SearchLimits& limits = {}) {
  std::vector<PropertyResult> out;
  bool all = suite == "all";
  bool known = all;
  if (all || suite == "arith") suite_arith(out, samples, seed), known = true;
  if (all || suite == "plmap") suite_plmap(out, samples, seed), known = true;
  if (all || suite == "dynamics") suite_dynamics(out, samples, seed, limits), known = true;
  if (all || suite == "extension") suite_extension(out, samples, seed, limits), known = true;
  if (all || suite == "word") suite_word(out, samples, seed, limits), known = true;
  if (all || suite == "realizer") suite_realizer(out, samples, seed, limits), known = true;
  if (!known)
    throw ParseError("unknown suite '" + suite +
                     "' (expected arith, plmap, dynamics, extension, word, realizer, or all)");
  return out;
}

}  // namespace tscl
