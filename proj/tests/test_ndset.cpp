#include <doctest.h>

#include "shiftdc/ndset.hpp"
#include "shiftdc/sampling.hpp"
#include "shiftdc/scan.hpp"

using namespace shiftdc;

namespace {

Rational r(long n, long d = 1) { return Rational(n, d); }
const NDSet halves = NDSet::of_tail(GeomTail(r(0), r(1), r(1, 2)));

// q in the tail iff q = limit + coeff * ratio^k for some k >= head_drop,
// searched over k up to a bound from magnitudes (|q - limit| halves at least
// every step once ratio <= 1/2; here all test ratios are <= 1/2).
bool tail_member_by_search(const GeomTail &t, const Rational &q) {
  Rational term = t.coeff * t.ratio.pow(t.head_drop);
  for (int k = 0; k < 200; ++k, term *= t.ratio)
    if (t.limit + term == q)
      return true;
  return false;
}

} // namespace

TEST_CASE("contains") {
  CHECK_FALSE(NDSet().contains(r(0)));
  CHECK(halves.contains(r(1, 8)));
  CHECK_FALSE(halves.contains(r(1, 3)));
  CHECK_FALSE(halves.contains(r(0)));
  CHECK(halves.contains(r(1)));
  CHECK_FALSE(halves.contains(r(2)));
  const GeomTail dropped(r(0), r(1), r(1, 2), 2);
  CHECK_FALSE(NDSet::of_tail(dropped).contains(r(1, 2)));
  CHECK(NDSet::of_tail(dropped).contains(r(1, 4)));
  Rng rng(1);
  for (int i = 0; i < 300; ++i) {
    const Rational q = rng.coin() ? r(1, 1L << rng.range(0, 20)) * r(rng.range(1, 3)) : random_rational(rng, 24, 64);
    CHECK(halves.contains(q) == tail_member_by_search(halves.tails().front(), q));
  }
}

TEST_CASE("closure_contains") {
  CHECK(halves.closure_contains(r(0)));
  CHECK(NDSet::of_points({r(1, 2)}).closure_contains(r(1, 2)));
  CHECK_FALSE(NDSet::of_points({r(1, 2)}).closure_contains(r(1, 3)));
}

TEST_CASE("canonical presentation") {
  // Tail terms listed as points are dropped; a point extending the tail is absorbed.
  const NDSet a({r(1, 4), r(2), r(5)}, {GeomTail(r(0), r(1), r(1, 2))});
  CHECK(a.points() == std::vector<Rational>{r(5)});
  CHECK(a.tails().size() == 1);
  CHECK(a.tails().front().coeff == r(2));
  const NDSet b({}, {GeomTail(r(0), r(1), r(1, 2), 3)});
  CHECK(b.tails().front().head_drop == 0);
  CHECK(b.tails().front().coeff == r(1, 8));
  // A subsumed tail disappears.
  const NDSet c({}, {GeomTail(r(0), r(1), r(1, 2)), GeomTail(r(0), r(1), r(1, 4))});
  CHECK(c.tails().size() == 1);
  CHECK(c == halves);
}

TEST_CASE("image") {
  Rng rng(2);
  const NDSet e = random_ndset(rng);
  CHECK(image(PLMap::identity(), e) == e);
  CHECK(image(PLMap::translation(r(1)), halves) == NDSet::of_tail(GeomTail(r(1), r(1), r(1, 2))));

  // f has a breakpoint at 1/4 and slope 3 near 0.
  const PLMap f({{r(0), r(0)}, {r(1, 4), r(3, 4)}, {r(1), r(1)}}, r(3), r(1));
  const NDSet img = image(f, halves);
  for (int k = 0; k < 10; ++k) {
    const Rational term = r(1, 1L << k);
    CHECK(img.contains(f(term)));
    CHECK_FALSE(img.contains(f(term * r(3, 4))));
  }
  CHECK(img.closure_contains(r(0)));
  REQUIRE(img.tails().size() == 1);
  CHECK(img.tails().front().limit == r(0));
  CHECK(img.tails().front().ratio == r(1, 2));
}

TEST_CASE("union") {
  Rng rng(4);
  const NDSet e = random_ndset(rng);
  CHECK(set_union(e, NDSet()) == e);
  CHECK(set_union(NDSet::of_points({r(0)}), NDSet::of_points({r(0)})) == NDSet::of_points({r(0)}));
  const NDSet u = set_union(NDSet::of_points({r(1, 2)}), NDSet::of_tail(GeomTail(r(1, 2), r(1), r(1, 3))));
  CHECK(u.points().size() == 1);
  CHECK(u.tails().size() == 1);
  CHECK(u.closure_contains(r(1, 2)));
}

TEST_CASE("closure_meets and neighbours") {
  CHECK(halves.closure_meets(ClosedInterval(r(-1), r(-1, 2))) == std::nullopt);
  CHECK(halves.closure_meets(ClosedInterval(r(-1), r(1))) == r(0));
  CHECK(halves.closure_meets(ClosedInterval(r(1, 3), r(2, 5))) == std::nullopt);
  CHECK(halves.closure_meets(ClosedInterval(r(1, 3), r(1, 2))) == r(1, 2));
  CHECK(halves.closure_max_below(r(1, 3)) == r(1, 4));
  CHECK(halves.closure_min_above(r(1, 3)) == r(1, 2));
  CHECK(halves.closure_min_above(r(2)) == std::nullopt);
  CHECK(halves.closure_max_below(r(-1)) == std::nullopt);
  CHECK(halves.closure_min_above(r(-1)) == r(0));
}

TEST_CASE("find_gap") {
  CHECK(find_gap(NDSet(), Interval(r(0), r(1))) == Interval(r(1, 3), r(2, 3)));

  // Any singleton is nowhere dense: gaps exist around it on every interval.
  Rng rng(9);
  for (int i = 0; i < 200; ++i) {
    const NDSet single = NDSet::of_points({random_rational(rng)});
    const Interval iv = random_interval(rng);
    const Interval j = find_gap(single, iv);
    REQUIRE(j.bounded());
    CHECK(iv.contains_closed(j.lower().value, j.upper().value));
    CHECK_FALSE(single.closure_meets(ClosedInterval(j.lower().value, j.upper().value)));
  }

  const Interval j = find_gap(halves, Interval(r(0), r(1)));
  const Rational a = j.lower().value, b = j.upper().value;
  bool between_terms = false;
  for (long k = 0; k < 60 && !between_terms; ++k)
    between_terms = r(1, 1L << (k + 1)) < a && b < r(1, 1L << k);
  CHECK(between_terms);
  CHECK_FALSE(scan_closure(halves, ClosedInterval(a, b), 64, Exec::Serial).has_value());

  // Deterministic.
  CHECK(find_gap(halves, Interval(r(-1), r(1))) == find_gap(halves, Interval(r(-1), r(1))));
}

TEST_CASE("subset_of_closure") {
  Rng rng(6);
  const NDSet e = random_ndset(rng);
  CHECK(subset_of_closure(e, e).verdict == Verdict::Yes);
  CHECK(subset_of_closure(NDSet::of_points({r(1, 4)}), halves).verdict == Verdict::Yes);
  CHECK(subset_of_closure(NDSet::of_points({r(0)}), halves).verdict == Verdict::Yes);

  const NDSet thirds = NDSet::of_tail(GeomTail(r(0), r(1), r(1, 3)));
  const SubsetResult no = subset_of_closure(thirds, halves);
  CHECK(no.verdict == Verdict::No);
  REQUIRE(no.witness.has_value());
  // Factorization oracle: the witness is 3^-k, never a power of two unless k = 0.
  CHECK(thirds.contains(*no.witness));
  mpz_class den = no.witness->den();
  while (den % 2 == 0)
    den /= 2;
  CHECK((den != 1 || no.witness->num() != 1));
  CHECK_FALSE(halves.closure_contains(*no.witness));

  // Quarter-powers sit inside the halves; not conversely.
  const NDSet quarters = NDSet::of_tail(GeomTail(r(0), r(1), r(1, 4)));
  CHECK(subset_of_closure(quarters, halves).verdict == Verdict::Yes);
  CHECK(subset_of_closure(halves, quarters).verdict == Verdict::No);
  // 8^-k = 2^-3k is a term of the halves; as a power of 1/4 it needs 3k even.
  const NDSet eighths = NDSet::of_tail(GeomTail(r(0), r(1), r(1, 8)));
  CHECK(subset_of_closure(eighths, halves).verdict == Verdict::Yes);
  CHECK(subset_of_closure(eighths, quarters).verdict == Verdict::No);
  // Union of two residue classes mod 2 of 2^-k covers the halves.
  const NDSet evens_odds({}, {GeomTail(r(0), r(1), r(1, 4)), GeomTail(r(0), r(1, 2), r(1, 4))});
  CHECK(subset_of_closure(halves, evens_odds).verdict == Verdict::Yes);
  // Different limits: the tail's terms near 1 are not in closure of halves.
  CHECK(subset_of_closure(NDSet::of_tail(GeomTail(r(1), r(-1, 4), r(1, 2))), halves).verdict == Verdict::No);
}
