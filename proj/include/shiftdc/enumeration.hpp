#pragma once

#include <cstdint>
#include <utility>

#include "shiftdc/rational.hpp"

namespace shiftdc {

/// Inverse of the Cantor pairing: n -> (i, j) with n = (i+j)(i+j+1)/2 + j.
std::pair<std::uint64_t, std::uint64_t> unpair(std::uint64_t n);

/// The n-th positive rational along Cantor's zig-zag over the
/// numerator/denominator grid, skipping unreduced fractions (n >= 1):
/// 1, 2, 1/2, 1/3, 3, 4, 3/2, 2/3, 1/4, ...
Rational positive_rational_at(std::uint64_t n);

/// Enumeration of all of Q: 0, r1, -r1, r2, -r2, ... over the zig-zag above.
Rational rational_at(std::uint64_t index);

/// The n-th open interval: (q_i, q_j) ordered, or (q_i, q_i + 1) when
/// q_i = q_j, where (i, j) = unpair(n). Repeats are allowed.
Interval canonical_interval(std::uint64_t n);

} // namespace shiftdc
