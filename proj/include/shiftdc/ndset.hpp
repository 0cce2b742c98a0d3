#pragma once

#include <optional>
#include <vector>

#include "shiftdc/plmap.hpp"
#include "shiftdc/rational.hpp"

namespace shiftdc {

/**
 * The sequence limit + coeff * ratio^k for k >= head_drop.
 *
 * Terms approach `limit` monotonically from the side given by the sign of
 * `coeff`; the limit itself is never a term.
 */
struct GeomTail {
  Rational limit;
  Rational coeff;
  Rational ratio;
  long head_drop = 0;

  GeomTail(Rational limit, Rational coeff, Rational ratio, long head_drop = 0);

  Rational term(long k) const;
  /// +1 when terms lie above the limit, -1 below.
  int side() const { return coeff.sign(); }
  /// Same term set with head_drop folded into coeff.
  GeomTail normalized() const;
  /// True iff q is a term.
  bool has_term(const Rational &q) const;

  friend bool operator==(const GeomTail &, const GeomTail &) = default;
};

/// Finitely presented nowhere-dense subset of Q: finite points plus tails.
class NDSet {
public:
  NDSet() = default;
  NDSet(std::vector<Rational> points, std::vector<GeomTail> tails);

  static NDSet of_points(std::vector<Rational> points) { return NDSet(std::move(points), {}); }
  static NDSet of_tail(GeomTail t) { return NDSet({}, {std::move(t)}); }

  const std::vector<Rational> &points() const { return points_; }
  const std::vector<GeomTail> &tails() const { return tails_; }
  bool empty() const { return points_.empty() && tails_.empty(); }

  bool contains(const Rational &q) const;
  bool closure_contains(const Rational &q) const;

  /// Smallest point of closure(E) inside [iv.lo, iv.hi], if any.
  std::optional<Rational> closure_meets(const ClosedInterval &iv) const;
  /// max(closure(E) ∩ (-inf, x)); x must not lie in closure(E).
  std::optional<Rational> closure_max_below(const Rational &x) const;
  /// min(closure(E) ∩ (x, +inf)); x must not lie in closure(E).
  std::optional<Rational> closure_min_above(const Rational &x) const;

  /// Every element of E inside the closed interval. Throws std::logic_error
  /// when a tail accumulates inside it (the answer would be infinite).
  std::vector<Rational> members_in(const ClosedInterval &iv) const;

  NDSet negated() const;

  friend bool operator==(const NDSet &, const NDSet &) = default;

private:
  void canonicalize();

  std::vector<Rational> points_;
  std::vector<GeomTail> tails_;
};

/// Tail terms inside [lo, hi]; the tail must not accumulate there.
std::vector<Rational> tail_terms_in(const GeomTail &t, const ClosedInterval &iv);

NDSet image(const PLMap &f, const NDSet &e);
NDSet set_union(const NDSet &e, const NDSet &f);

/**
 * Deterministic closure-free subinterval of `iv`.
 *
 * Unbounded inputs are first cut to a unit interval at the finite end (or to
 * (0, 1) for all of Q). The scan then takes the leftmost stretch between
 * consecutive points/limits, steps a third inward from any end where a tail
 * accumulates, lists the finitely many tail terms left, and returns the
 * middle third of the first empty stretch between them. The result J = (a, b)
 * satisfies [a, b] ⊆ iv and [a, b] ∩ closure(E) = ∅.
 */
Interval find_gap(const NDSet &e, const Interval &iv);

enum class Verdict { Yes, No, Unknown };

struct SubsetResult {
  Verdict verdict = Verdict::Yes;
  /// For No: an element of the first set outside the closure of the second.
  std::optional<Rational> witness;
};

/**
 * Decides F ⊆ closure(E).
 *
 * Points are checked directly. A tail of F against the tails of E sharing its
 * limit and side reduces, via a common primitive root of the ratios, to a
 * periodic covering condition on term indices; Unknown is returned only when
 * that period exceeds a fixed cap.
 */
SubsetResult subset_of_closure(const NDSet &f, const NDSet &e);

} // namespace shiftdc
