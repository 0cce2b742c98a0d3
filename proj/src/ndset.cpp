#include "shiftdc/ndset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace shiftdc {

GeomTail::GeomTail(Rational limit_, Rational coeff_, Rational ratio_, long head_drop_)
    : limit(std::move(limit_)), coeff(std::move(coeff_)), ratio(std::move(ratio_)), head_drop(head_drop_) {
  if (coeff.is_zero())
    throw std::invalid_argument("GeomTail: coefficient must be nonzero");
  if (!(Rational(0) < ratio && ratio < Rational(1)))
    throw std::invalid_argument("GeomTail: ratio must lie in (0, 1)");
  if (head_drop < 0)
    throw std::invalid_argument("GeomTail: negative headDrop");
}

Rational GeomTail::term(long k) const { return limit + coeff * ratio.pow(k); }

GeomTail GeomTail::normalized() const {
  if (head_drop == 0)
    return *this;
  return GeomTail(limit, coeff * ratio.pow(head_drop), ratio, 0);
}

bool GeomTail::has_term(const Rational &q) const {
  const Rational x = (q - limit) / coeff;
  if (x.sign() <= 0)
    return false;
  // ratio = p/s in lowest terms, so ratio^k = p^k / s^k in lowest terms too.
  const mpz_class p = ratio.num();
  const mpz_class s = ratio.den();
  mpz_class v = x.den();
  unsigned long k = 0;
  while (mpz_divisible_p(v.get_mpz_t(), s.get_mpz_t())) {
    v /= s;
    ++k;
  }
  if (v != 1 || static_cast<long>(k) < head_drop)
    return false;
  mpz_class pk;
  mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), k);
  return x.num() == pk;
}

namespace {

bool tail_subsumed(const GeomTail &a, const GeomTail &b) {
  // a, b normalized. a ⊆ b iff same limit and side, a.ratio = b.ratio^m with
  // m >= 1, and a.coeff = b.coeff * b.ratio^j with j >= 0.
  if (a.limit != b.limit || a.side() != b.side())
    return false;
  const auto m = exact_log(a.ratio, b.ratio);
  if (!m || *m < 1)
    return false;
  const auto j = exact_log(a.coeff / b.coeff, b.ratio);
  return j && *j >= 0;
}

bool tail_less(const GeomTail &a, const GeomTail &b) {
  return std::tie(a.limit, a.coeff, a.ratio) < std::tie(b.limit, b.coeff, b.ratio);
}

} // namespace

NDSet::NDSet(std::vector<Rational> points, std::vector<GeomTail> tails)
    : points_(std::move(points)), tails_(std::move(tails)) {
  canonicalize();
}

void NDSet::canonicalize() {
  for (auto &t : tails_)
    t = t.normalized();
  std::sort(tails_.begin(), tails_.end(), tail_less);
  tails_.erase(std::unique(tails_.begin(), tails_.end()), tails_.end());

  std::vector<GeomTail> kept;
  for (std::size_t i = 0; i < tails_.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < tails_.size() && !drop; ++j)
      drop = i != j && tail_subsumed(tails_[i], tails_[j]);
    if (!drop)
      kept.push_back(tails_[i]);
  }
  tails_ = std::move(kept);

  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());

  // Absorb points that extend a tail by one term at its far end.
  for (auto &t : tails_) {
    for (;;) {
      const Rational before = t.limit + t.coeff / t.ratio;
      const auto it = std::lower_bound(points_.begin(), points_.end(), before);
      if (it == points_.end() || *it != before)
        break;
      points_.erase(it);
      t.coeff = t.coeff / t.ratio;
    }
  }
  std::erase_if(points_, [&](const Rational &p) {
    return std::any_of(tails_.begin(), tails_.end(), [&](const GeomTail &t) { return t.has_term(p); });
  });
  std::sort(tails_.begin(), tails_.end(), tail_less);
}

bool NDSet::contains(const Rational &q) const {
  if (std::binary_search(points_.begin(), points_.end(), q))
    return true;
  return std::any_of(tails_.begin(), tails_.end(), [&](const GeomTail &t) { return t.has_term(q); });
}

bool NDSet::closure_contains(const Rational &q) const {
  if (contains(q))
    return true;
  return std::any_of(tails_.begin(), tails_.end(), [&](const GeomTail &t) { return t.limit == q; });
}

std::vector<Rational> tail_terms_in(const GeomTail &tail, const ClosedInterval &iv) {
  const GeomTail t = tail.normalized();
  const bool above = t.side() > 0;
  // Terms are limit ± d with d = |coeff| ratio^k decreasing to 0.
  const Rational near_d = above ? iv.lo - t.limit : t.limit - iv.hi;
  const Rational far_d = above ? iv.hi - t.limit : t.limit - iv.lo;
  std::vector<Rational> out;
  if (far_d.sign() <= 0)
    return out;
  if (near_d.sign() <= 0)
    throw std::logic_error("tail_terms_in: tail accumulates inside the interval");
  for (Rational d = t.coeff.abs(); d >= near_d; d *= t.ratio)
    if (d <= far_d)
      out.push_back(above ? t.limit + d : t.limit - d);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Rational> NDSet::closure_meets(const ClosedInterval &iv) const {
  std::optional<Rational> best;
  auto offer = [&](const Rational &q) {
    if (!best || q < *best)
      best = q;
  };
  const auto it = std::lower_bound(points_.begin(), points_.end(), iv.lo);
  if (it != points_.end() && *it <= iv.hi)
    offer(*it);
  for (const auto &t : tails_) {
    if (iv.contains(t.limit)) {
      offer(t.limit);
      continue;
    }
    const auto terms = tail_terms_in(t, iv);
    if (!terms.empty())
      offer(terms.front());
  }
  return best;
}

std::vector<Rational> NDSet::members_in(const ClosedInterval &iv) const {
  std::vector<Rational> out;
  for (auto it = std::lower_bound(points_.begin(), points_.end(), iv.lo); it != points_.end() && *it <= iv.hi; ++it)
    out.push_back(*it);
  for (const auto &t : tails_) {
    auto terms = tail_terms_in(t, iv);
    out.insert(out.end(), terms.begin(), terms.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<Rational> NDSet::closure_max_below(const Rational &x) const {
  std::optional<Rational> best;
  auto offer = [&](const Rational &q) {
    if (!best || *best < q)
      best = q;
  };
  const auto it = std::lower_bound(points_.begin(), points_.end(), x);
  if (it != points_.begin())
    offer(*std::prev(it));
  for (const auto &t : tails_) {
    const Rational c = t.coeff.abs();
    if (t.limit < x) {
      offer(t.limit);
      if (t.side() > 0) {
        // Largest term below x: first d with limit + d < x.
        const Rational room = x - t.limit;
        Rational d = c;
        while (d >= room)
          d *= t.ratio;
        offer(t.limit + d);
      }
    } else if (t.side() < 0) {
      const Rational room = t.limit - x;
      if (room.sign() == 0)
        throw std::logic_error("closure_max_below: x is a limit point");
      // Terms below x are limit - d with d > room; the largest has the smallest such d.
      std::optional<Rational> last;
      for (Rational d = c; d > room; d *= t.ratio)
        last = d;
      if (last)
        offer(t.limit - *last);
    }
  }
  return best;
}

std::optional<Rational> NDSet::closure_min_above(const Rational &x) const {
  const auto below = negated().closure_max_below(-x);
  if (!below)
    return std::nullopt;
  return -*below;
}

NDSet NDSet::negated() const {
  std::vector<Rational> pts;
  pts.reserve(points_.size());
  for (const auto &p : points_)
    pts.push_back(-p);
  std::vector<GeomTail> tails;
  tails.reserve(tails_.size());
  for (const auto &t : tails_)
    tails.emplace_back(-t.limit, -t.coeff, t.ratio, t.head_drop);
  return NDSet(std::move(pts), std::move(tails));
}

NDSet image(const PLMap &f, const NDSet &e) {
  std::vector<Rational> pts;
  pts.reserve(e.points().size());
  for (const auto &p : e.points())
    pts.push_back(f.apply(p));

  std::vector<GeomTail> tails;
  for (const auto &raw : e.tails()) {
    const GeomTail t = raw.normalized();
    const bool above = t.side() > 0;
    // The piece of f adjacent to the limit on the tail's side, and where it ends.
    const auto edge = above ? f.next_break_after(t.limit) : f.prev_break_before(t.limit);
    const Rational slope = above ? f.slope_right_of(t.limit) : f.slope_left_of(t.limit);
    Rational d = t.coeff.abs();
    if (edge) {
      const Rational room = above ? *edge - t.limit : t.limit - *edge;
      while (d > room) {
        pts.push_back(f.apply(above ? t.limit + d : t.limit - d));
        d *= t.ratio;
      }
    }
    tails.emplace_back(f.apply(t.limit), above ? slope * d : -(slope * d), t.ratio);
  }
  return NDSet(std::move(pts), std::move(tails));
}

NDSet set_union(const NDSet &e, const NDSet &f) {
  std::vector<Rational> pts = e.points();
  pts.insert(pts.end(), f.points().begin(), f.points().end());
  std::vector<GeomTail> tails = e.tails();
  tails.insert(tails.end(), f.tails().begin(), f.tails().end());
  return NDSet(std::move(pts), std::move(tails));
}

Interval find_gap(const NDSet &e, const Interval &iv) {
  Rational lo, hi;
  if (iv.bounded()) {
    lo = iv.lower().value;
    hi = iv.upper().value;
  } else if (iv.upper().finite()) {
    hi = iv.upper().value;
    lo = hi - Rational(1);
  } else if (iv.lower().finite()) {
    lo = iv.lower().value;
    hi = lo + Rational(1);
  } else {
    lo = Rational(0);
    hi = Rational(1);
  }

  // Leftmost stretch (x, y) free of points and limits.
  Rational y = hi;
  for (const auto &p : e.points())
    if (lo < p && p < y)
      y = p;
  for (const auto &t : e.tails())
    if (lo < t.limit && t.limit < y)
      y = t.limit;
  const Rational x = lo;

  const Rational third = (y - x) / Rational(3);
  Rational from = x;
  Rational to = y;
  for (const auto &t : e.tails()) {
    if (t.limit == x && t.side() > 0)
      from = x + third;
    if (t.limit == y && t.side() < 0)
      to = y - third;
  }

  std::vector<Rational> marks{from, to};
  const ClosedInterval window(from, to);
  for (const auto &t : e.tails()) {
    auto terms = tail_terms_in(t, window);
    marks.insert(marks.end(), terms.begin(), terms.end());
  }
  std::sort(marks.begin(), marks.end());
  marks.erase(std::unique(marks.begin(), marks.end()), marks.end());

  const Rational &u = marks[0];
  const Rational &v = marks[1];
  const Rational w = (v - u) / Rational(3);
  return Interval(u + w, v - w);
}

namespace {

struct TailCover {
  long b; // covering tail ratio = rho^b
  long e; // coeff ratio = rho^e
};

} // namespace

SubsetResult subset_of_closure(const NDSet &f, const NDSet &e) {
  for (const auto &p : f.points())
    if (!e.closure_contains(p))
      return {Verdict::No, p};

  constexpr long kPeriodCap = 4096;
  constexpr long kSearchCap = 100000;
  bool unknown = false;

  for (const auto &raw : f.tails()) {
    const GeomTail t = raw.normalized();
    const auto [rho, a] = primitive_root(t.ratio);

    std::vector<TailCover> covers;
    for (const auto &u : e.tails()) {
      if (u.limit != t.limit || u.side() != t.side())
        continue;
      const auto [rho_u, b] = primitive_root(u.ratio);
      if (rho_u != rho)
        continue;
      const auto ex = exact_log(t.coeff / u.coeff, rho);
      if (ex)
        covers.push_back({b, *ex});
    }

    // Term k of t equals term j of a cover iff a*k + e = b*j with j >= 0.
    long period = 1;
    long k_stable = 0;
    for (const auto &c : covers) {
      period = std::lcm(period, c.b);
      if (c.e < 0)
        k_stable = std::max(k_stable, (-c.e + a - 1) / a);
    }
    if (period > kPeriodCap) {
      unknown = true;
      continue;
    }

    std::optional<long> open_class;
    for (long res = 0; res < period && !open_class; ++res) {
      const bool covered = std::any_of(covers.begin(), covers.end(), [&](const TailCover &c) {
        return ((a * res + c.e) % c.b + c.b) % c.b == 0;
      });
      if (!covered)
        open_class = res;
    }

    if (open_class) {
      // Infinitely many terms escape the tails; all but finitely many escape the closure.
      long k = k_stable + ((*open_class - k_stable) % period + period) % period;
      for (long step = 0; step < kSearchCap; ++step, k += period) {
        const Rational q = t.term(k);
        if (!e.closure_contains(q))
          return {Verdict::No, q};
      }
      unknown = true;
      continue;
    }
    for (long k = 0; k < k_stable; ++k) {
      const Rational q = t.term(k);
      if (!e.closure_contains(q))
        return {Verdict::No, q};
    }
  }
  return {unknown ? Verdict::Unknown : Verdict::Yes, std::nullopt};
}

} // namespace shiftdc
