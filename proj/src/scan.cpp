#include "shiftdc/scan.hpp"

#include <vector>

namespace shiftdc {

namespace {

// ceil(lo * q) .. floor(hi * q) as mpz bounds.
std::pair<mpz_class, mpz_class> numerator_range(const ClosedInterval &iv, long q) {
  const mpq_class lo = iv.lo.raw() * q;
  const mpq_class hi = iv.hi.raw() * q;
  mpz_class first, last;
  mpz_cdiv_q(first.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  mpz_fdiv_q(last.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
  return {first, last};
}

} // namespace

std::optional<Rational> scan_closure(const NDSet &e, const ClosedInterval &iv, long max_den, Exec exec) {
  if (max_den < 1)
    return std::nullopt;
  const auto hits = map_indices<std::optional<Rational>>(exec, static_cast<std::size_t>(max_den), [&](std::size_t i) {
    const long q = static_cast<long>(i) + 1;
    auto [p, last] = numerator_range(iv, q);
    for (; p <= last; ++p) {
      const Rational r(mpq_class(p, q));
      if (e.closure_contains(r))
        return std::optional<Rational>(r);
    }
    return std::optional<Rational>();
  });
  for (const auto &h : hits)
    if (h)
      return h;
  return std::nullopt;
}

std::size_t scan_size(const ClosedInterval &iv, long max_den) {
  std::size_t total = 0;
  for (long q = 1; q <= max_den; ++q) {
    const auto [first, last] = numerator_range(iv, q);
    if (last >= first)
      total += mpz_class(last - first + 1).get_ui();
  }
  return total;
}

} // namespace shiftdc
