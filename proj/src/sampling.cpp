#include "shiftdc/sampling.hpp"

#include <algorithm>

namespace shiftdc {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rational random_rational(Rng &rng, long max_num, long max_den) {
  return Rational(rng.range(-max_num, max_num), rng.range(1, max_den));
}

Rational random_positive(Rng &rng, long max) { return Rational(rng.range(1, max), rng.range(1, max)); }

PLMap random_plmap(Rng &rng, int max_breaks) {
  const int k = static_cast<int>(rng.range(1, max_breaks));
  std::vector<Rational> ins;
  while (static_cast<int>(ins.size()) < k) {
    Rational q = random_rational(rng, 12, 4);
    if (std::find(ins.begin(), ins.end(), q) == ins.end())
      ins.push_back(std::move(q));
  }
  std::sort(ins.begin(), ins.end());
  std::vector<Breakpoint> bps;
  Rational out = random_rational(rng, 12, 4);
  for (std::size_t i = 0; i < ins.size(); ++i) {
    if (i > 0)
      out += (ins[i] - ins[i - 1]) * random_positive(rng, 4);
    bps.push_back({ins[i], out});
  }
  return PLMap(std::move(bps), random_positive(rng, 4), random_positive(rng, 4));
}

GeomTail random_tail(Rng &rng) {
  const long q = rng.range(2, 5);
  const long p = rng.range(1, q - 1);
  Rational coeff(rng.range(1, 4), rng.range(1, 4));
  if (rng.coin())
    coeff = -coeff;
  return GeomTail(random_rational(rng, 12, 4), coeff, Rational(p, q), rng.range(0, 2));
}

NDSet random_ndset(Rng &rng, int max_points, int max_tails) {
  std::vector<Rational> pts;
  const long np = rng.range(0, max_points);
  for (long i = 0; i < np; ++i)
    pts.push_back(random_rational(rng));
  std::vector<GeomTail> tails;
  const long nt = rng.range(0, max_tails);
  for (long i = 0; i < nt; ++i)
    tails.push_back(random_tail(rng));
  return NDSet(std::move(pts), std::move(tails));
}

Interval random_interval(Rng &rng) {
  switch (rng.below(8)) {
  case 0:
    return Interval(Endpoint::neg_inf(), Endpoint::at(random_rational(rng)));
  case 1:
    return Interval(Endpoint::at(random_rational(rng)), Endpoint::pos_inf());
  default:
    break;
  }
  Rational a = random_rational(rng, 24, 8);
  Rational b = random_rational(rng, 24, 8);
  while (a == b)
    b = random_rational(rng, 24, 8);
  if (b < a)
    std::swap(a, b);
  return Interval(a, b);
}

HFAValue random_hfa(Rng &rng, int depth) {
  if (depth <= 0 || rng.below(3) == 0)
    return HFAValue::atom(random_rational(rng, 12, 4));
  const long n = rng.range(0, 3);
  std::vector<HFAValue> items;
  for (long i = 0; i < n; ++i)
    items.push_back(random_hfa(rng, depth - 1));
  return rng.coin() ? HFAValue::set(std::move(items)) : HFAValue::seq(std::move(items));
}

HFAValue random_atom_seq(Rng &rng, int len) {
  std::vector<HFAValue> items;
  for (int i = 0; i < len; ++i)
    items.push_back(HFAValue::atom(random_rational(rng, 12, 4)));
  return HFAValue::seq(std::move(items));
}

PLMap random_fix_element(Rng &rng, const NDSet &e, int pieces) {
  PLMap result = PLMap::identity();
  for (int i = 0; i < pieces; ++i) {
    // A closure-free closed block and the largest open interval around it
    // that stays away from closure(E).
    const Interval gap = find_gap(e, random_interval(rng));
    const Rational &a = gap.lower().value;
    const Rational &b = gap.upper().value;
    const auto left = e.closure_max_below(a);
    const auto right = e.closure_min_above(b);
    const Rational lo = left ? midpoint(*left, a) : a - Rational(rng.range(1, 4));
    const Rational hi = right ? midpoint(b, *right) : b + Rational(rng.range(1, 4));
    // Random target inside (lo, hi).
    const Rational w = hi - lo;
    Rational s = lo + w * Rational(rng.range(1, 7), 8);
    Rational t = lo + w * Rational(rng.range(1, 7), 8);
    if (s == t)
      t = s + w / Rational(16);
    if (t < s)
      std::swap(s, t);
    const PLMap g = squeeze_map(Interval(lo, hi), {{ClosedInterval(a, b), Interval(s, t)}});
    result = compose(rng.coin() ? g : invert(g), result);
  }
  return result;
}

} // namespace shiftdc
