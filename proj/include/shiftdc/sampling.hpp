#pragma once

#include <cstdint>
#include <random>

#include "shiftdc/hfa.hpp"
#include "shiftdc/ndset.hpp"
#include "shiftdc/plmap.hpp"

namespace shiftdc {

std::uint64_t splitmix64(std::uint64_t x);

/// Seed for the i-th independent stream derived from a base seed.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t i) { return splitmix64(base ^ splitmix64(i + 1)); }

/// Platform-independent bounded draws on top of mt19937_64 (the standard
/// distributions are implementation-defined, which would break golden output).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }
  /// Uniform in [0, n), n > 0.
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  /// Uniform in [lo, hi].
  long range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  bool coin() { return (next() & 1U) != 0; }

private:
  std::mt19937_64 gen_;
};

/// Small-height rational, |num| <= max_num, 1 <= den <= max_den.
Rational random_rational(Rng &rng, long max_num = 24, long max_den = 6);
/// Positive rational with numerator and denominator in [1, max].
Rational random_positive(Rng &rng, long max = 5);
/// Random PL automorphism with 1..max_breaks breakpoints.
PLMap random_plmap(Rng &rng, int max_breaks = 4);
GeomTail random_tail(Rng &rng);
NDSet random_ndset(Rng &rng, int max_points = 4, int max_tails = 2);
Interval random_interval(Rng &rng);
HFAValue random_hfa(Rng &rng, int depth = 3);
/// Sequence of `len` atoms.
HFAValue random_atom_seq(Rng &rng, int len);

/**
 * A random element of Fix(E): a composite of squeeze maps, each supported
 * on an open interval whose closure misses closure(E). Typically moves many
 * rationals outside closure(E).
 */
PLMap random_fix_element(Rng &rng, const NDSet &e, int pieces = 2);

} // namespace shiftdc
