#include "shiftdc/enumeration.hpp"

#include <numeric>
#include <stdexcept>

namespace shiftdc {

std::pair<std::uint64_t, std::uint64_t> unpair(std::uint64_t n) {
  // Largest w with w(w+1)/2 <= n.
  std::uint64_t w = 0;
  {
    std::uint64_t lo = 0, hi = 1;
    while (hi * (hi + 1) / 2 <= n)
      hi *= 2;
    while (lo < hi) {
      const std::uint64_t mid = (lo + hi + 1) / 2;
      if (mid * (mid + 1) / 2 <= n)
        lo = mid;
      else
        hi = mid - 1;
    }
    w = lo;
  }
  const std::uint64_t j = n - w * (w + 1) / 2;
  return {w - j, j};
}

Rational positive_rational_at(std::uint64_t n) {
  if (n == 0)
    throw std::invalid_argument("positive_rational_at: index starts at 1");
  std::uint64_t seen = 0;
  for (std::uint64_t s = 2;; ++s) {
    // Odd diagonals run numerator-first, even ones denominator-first.
    for (std::uint64_t step = 1; step < s; ++step) {
      const std::uint64_t p = (s % 2 == 1) ? s - step : step;
      const std::uint64_t q = s - p;
      if (std::gcd(p, q) != 1)
        continue;
      if (++seen == n)
        return Rational(static_cast<long>(p), static_cast<long>(q));
    }
  }
}

Rational rational_at(std::uint64_t index) {
  if (index == 0)
    return Rational(0);
  const Rational r = positive_rational_at((index + 1) / 2);
  return index % 2 == 1 ? r : -r;
}

Interval canonical_interval(std::uint64_t n) {
  const auto [i, j] = unpair(n);
  const Rational a = rational_at(i);
  const Rational b = rational_at(j);
  if (a == b)
    return Interval(a, a + Rational(1));
  return a < b ? Interval(a, b) : Interval(b, a);
}

} // namespace shiftdc
