#pragma once

#include <cstddef>
#include <ostream>
#include <set>
#include <utility>
#include <vector>

#include "tscl/rational.hpp"

namespace tscl {

struct Breakpoint {
  Rational x;
  Rational y;
  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/*
 * One period of the lift F : R -> R of an orientation-preserving PL circle
 * homeomorphism. Breakpoints (x_i, y_i) satisfy
 *
 *   0 = x_0 < x_1 < ... < x_{N-1} < 1,   y_0 < y_1 < ... < y_{N-1} < y_0 + 1.
 *
 * F interpolates affinely between consecutive breakpoints, the last segment
 * runs to (x_0 + 1, y_0 + 1), and F(x + 1) = F(x) + 1 extends the map to the
 * whole line. x = 0 is always stored even when it is not a genuine corner;
 * every other collinear breakpoint is removed on construction, so two maps
 * are equal exactly when their breakpoint lists are.
 */
class PLLift {
 public:
  PLLift() : pts_{Breakpoint{Rational(0), Rational(0)}} {}  // identity

  static PLLift from_breakpoints(std::vector<Breakpoint> pts) {
    validate(pts);
    prune(pts);
    return PLLift(std::move(pts), 0);
  }

  static const PLLift& identity() {
    static const PLLift id;
    return id;
  }

  const std::vector<Breakpoint>& points() const { return pts_; }
  std::size_t pieces() const { return pts_.size(); }

  // Exact value of the lift at any rational point.
  Rational operator()(const Rational& x) const {
    Int m = floor_int(x);
    Rational u = x - Rational(m);
    Segment s = segment(segment_below(u));
    return s.y0 + (u - s.x0) * (s.y1 - s.y0) / (s.x1 - s.x0) + Rational(std::move(m));
  }

  // The unique x with F(x) = y, solved exactly on the containing piece.
  Rational inverse_at(const Rational& y) const {
    Int k = floor_int(y - pts_.front().y);
    Rational v = y - Rational(k);  // now in [y_0, y_0 + 1)
    std::size_t lo = 0, hi = pts_.size();
    while (hi - lo > 1) {
      std::size_t mid = lo + (hi - lo) / 2;
      if (pts_[mid].y <= v) lo = mid; else hi = mid;
    }
    Segment s = segment(lo);
    return s.x0 + (v - s.y0) * (s.x1 - s.x0) / (s.y1 - s.y0) + Rational(std::move(k));
  }

  friend bool operator==(const PLLift&, const PLLift&) = default;

 private:
  struct Segment {
    Rational x0, y0, x1, y1;
  };

  PLLift(std::vector<Breakpoint> pts, int) : pts_(std::move(pts)) {}

  Segment segment(std::size_t i) const {
    const Breakpoint& a = pts_[i];
    if (i + 1 < pts_.size()) {
      const Breakpoint& b = pts_[i + 1];
      return {a.x, a.y, b.x, b.y};
    }
    return {a.x, a.y, pts_.front().x + Rational(1), pts_.front().y + Rational(1)};
  }

  // Index of the last breakpoint with x_i <= u, for u in [0, 1).
  std::size_t segment_below(const Rational& u) const {
    std::size_t lo = 0, hi = pts_.size();
    while (hi - lo > 1) {
      std::size_t mid = lo + (hi - lo) / 2;
      if (pts_[mid].x <= u) lo = mid; else hi = mid;
    }
    return lo;
  }

  static bool collinear(const Breakpoint& a, const Breakpoint& b, const Breakpoint& c) {
    return (b.y - a.y) * (c.x - b.x) == (c.y - b.y) * (b.x - a.x);
  }

  static void validate(const std::vector<Breakpoint>& pts) {
    if (pts.empty()) throw ParseError("breakpoints: list must not be empty");
    if (pts.front().x != Rational(0))
      throw ParseError("breakpoints: first x-coordinate must be 0");
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (pts[i].x < Rational(0) || pts[i].x >= Rational(1))
        throw ParseError("breakpoints: x-coordinates must lie in [0,1)");
      if (i > 0 && !(pts[i - 1].x < pts[i].x))
        throw ParseError("breakpoints: x-coordinates must be strictly increasing");
      if (i > 0 && !(pts[i - 1].y < pts[i].y))
        throw ParseError("breakpoints: y-values must be strictly increasing");
    }
    if (!(pts.front().y + Rational(1) > pts.back().y))
      throw ParseError("breakpoints: wrap segment requires y_0 + 1 > y_last");
  }

  static void prune(std::vector<Breakpoint>& pts) {
    if (pts.size() < 2) return;
    std::vector<Breakpoint> kept;
    kept.reserve(pts.size());
    kept.push_back(pts.front());
    Breakpoint wrap{pts.front().x + Rational(1), pts.front().y + Rational(1)};
    for (std::size_t i = 1; i < pts.size(); ++i) {
      const Breakpoint& next = (i + 1 < pts.size()) ? pts[i + 1] : wrap;
      if (!collinear(kept.back(), pts[i], next)) kept.push_back(pts[i]);
    }
    pts = std::move(kept);
  }

  std::vector<Breakpoint> pts_;
};

/*
 * f after g. Corners of the composite sit at corners of g and at
 * g-preimages of corners of f; evaluating at every candidate and pruning
 * recovers the exact piece list, so composition never accumulates fake
 * breakpoints (powers of an interval-cycling map stay small, for instance).
 */
inline PLLift compose(const PLLift& f, const PLLift& g) {
  std::set<Rational> xs;
  xs.insert(Rational(0));
  for (const Breakpoint& bp : g.points()) xs.insert(bp.x);
  for (const Breakpoint& bp : f.points()) xs.insert(frac(g.inverse_at(bp.x)));
  std::vector<Breakpoint> pts;
  pts.reserve(xs.size());
  for (const Rational& x : xs) pts.push_back({x, f(g(x))});
  return PLLift::from_breakpoints(std::move(pts));
}

inline PLLift invert(const PLLift& f) {
  std::set<Rational> xs;
  xs.insert(Rational(0));
  for (const Breakpoint& bp : f.points()) xs.insert(frac(bp.y));
  std::vector<Breakpoint> pts;
  pts.reserve(xs.size());
  for (const Rational& x : xs) pts.push_back({x, f.inverse_at(x)});
  return PLLift::from_breakpoints(std::move(pts));
}

inline PLLift power_lift(const PLLift& f, long long k) {
  if (k < 0) return power_lift(invert(f), -k);
  PLLift acc;
  PLLift base = f;
  while (k > 0) {
    if (k & 1) acc = compose(acc, base);
    k >>= 1;
    if (k > 0) base = compose(base, base);
  }
  return acc;
}

struct Extremes {
  Rational min;
  Rational max;
};

// Exact extremes of F(x) - x - p over one period. The displacement is PL
// with the same breakpoints and matches itself at the wrap, so scanning the
// stored breakpoints is enough.
inline Extremes extremes(const PLLift& f, const Int& p) {
  Rational rp(p);
  const auto& pts = f.points();
  Rational d0 = pts.front().y - pts.front().x - rp;
  Extremes e{d0, d0};
  for (const Breakpoint& bp : pts) {
    Rational d = bp.y - bp.x - rp;
    if (d < e.min) e.min = d;
    if (d > e.max) e.max = d;
  }
  return e;
}

// Membership test for Thompson's group T: all breakpoint coordinates dyadic
// and every slope (wrap segment included) an integer power of two.
inline bool validate_thompson(const PLLift& f) {
  const auto& pts = f.points();
  for (const Breakpoint& bp : pts) {
    if (!is_dyadic(bp.x) || !is_dyadic(bp.y)) return false;
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Rational x1 = (i + 1 < pts.size()) ? pts[i + 1].x : pts.front().x + Rational(1);
    Rational y1 = (i + 1 < pts.size()) ? pts[i + 1].y : pts.front().y + Rational(1);
    if (!is_power_of_two((y1 - pts[i].y) / (x1 - pts[i].x))) return false;
  }
  return true;
}

// The unique lift of a circle homeomorphism with F(0) in [0, 1).
class CanonicalLift {
 public:
  CanonicalLift() = default;  // identity
  explicit CanonicalLift(PLLift f) : lift_(std::move(f)) {
    const Rational& y0 = lift_.points().front().y;
    if (y0 < Rational(0) || y0 >= Rational(1))
      throw ParseError("not a canonical lift: F(0) must lie in [0,1)");
  }

  static const CanonicalLift& identity() {
    static const CanonicalLift id;
    return id;
  }

  const PLLift& lift() const { return lift_; }
  Rational operator()(const Rational& x) const { return lift_(x); }

  friend bool operator==(const CanonicalLift&, const CanonicalLift&) = default;

 private:
  PLLift lift_;
};

struct Canonicalized {
  CanonicalLift lift;
  Int shift;  // F = lift + shift
};

inline Canonicalized canonicalize(const PLLift& f) {
  Int k = floor_int(f.points().front().y);
  if (k == 0) return {CanonicalLift(f), Int(0)};
  std::vector<Breakpoint> pts = f.points();
  for (Breakpoint& bp : pts) bp.y = bp.y - Rational(k);
  return {CanonicalLift(PLLift::from_breakpoints(std::move(pts))), std::move(k)};
}

inline std::ostream& operator<<(std::ostream& os, const PLLift& f) {
  os << "{";
  bool first = true;
  for (const Breakpoint& bp : f.points()) {
    if (!first) os << ", ";
    os << "(" << bp.x << ", " << bp.y << ")";
    first = false;
  }
  return os << "}";
}

inline std::ostream& operator<<(std::ostream& os, const CanonicalLift& f) {
  return os << f.lift();
}

}  // namespace tscl
