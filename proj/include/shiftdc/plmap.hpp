#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "shiftdc/rational.hpp"

namespace shiftdc {

struct Breakpoint {
  Rational in;
  Rational out;
  friend bool operator==(const Breakpoint &, const Breakpoint &) = default;
};

/**
 * Piecewise-linear order automorphism of Q.
 *
 * The map is linear with slope left_slope() before the first breakpoint,
 * interpolates between consecutive breakpoints, and is linear with slope
 * right_slope() after the last one. Instances are always canonical: no
 * breakpoint is collinear with its neighbours, and an affine map keeps a
 * single nominal breakpoint at input 0. Structural equality is therefore
 * functional equality.
 */
class PLMap {
public:
  /// Validates (strictly increasing coordinates, positive slopes) and
  /// canonicalizes. Throws std::invalid_argument.
  PLMap(std::vector<Breakpoint> breakpoints, Rational left_slope, Rational right_slope);

  static PLMap identity();
  static PLMap translation(const Rational &by);
  /// x -> slope * x + offset
  static PLMap affine(const Rational &slope, const Rational &offset);
  /// Identity outside [pts.front().in, pts.back().in]; the first and last
  /// points must be fixed points.
  static PLMap supported_on(std::vector<Breakpoint> pts);

  const std::vector<Breakpoint> &breakpoints() const { return bps_; }
  const Rational &left_slope() const { return left_; }
  const Rational &right_slope() const { return right_; }

  Rational apply(const Rational &x) const;
  Rational operator()(const Rational &x) const { return apply(x); }

  /// Slope of the linear piece on (x, x + eps) for small eps.
  Rational slope_right_of(const Rational &x) const;
  /// Slope of the linear piece on (x - eps, x).
  Rational slope_left_of(const Rational &x) const;
  /// Smallest breakpoint input strictly greater than x.
  std::optional<Rational> next_break_after(const Rational &x) const;
  /// Largest breakpoint input strictly less than x.
  std::optional<Rational> prev_break_before(const Rational &x) const;

  bool is_identity() const;

  friend bool operator==(const PLMap &, const PLMap &) = default;

private:
  PLMap() = default;
  void canonicalize();

  std::vector<Breakpoint> bps_;
  Rational left_{1};
  Rational right_{1};
};

/// (f . g)(x) = f(g(x))
PLMap compose(const PLMap &f, const PLMap &g);
PLMap invert(const PLMap &f);

struct SqueezeTarget {
  ClosedInterval blocked;
  Interval gap;
};

/**
 * Order-preserving map that is the identity outside `cover` and sends each
 * blocked interval into the middle third of its paired gap.
 *
 * `cover` must be bounded. Blocked intervals and gaps must lie inside it and
 * be listed left to right; otherwise std::invalid_argument is thrown. When
 * every blocked interval already sits inside its gap the identity is
 * returned.
 */
PLMap squeeze_map(const Interval &cover, const std::vector<SqueezeTarget> &targets);

} // namespace shiftdc
