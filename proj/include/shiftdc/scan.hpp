#pragma once

#include <optional>

#include "shiftdc/ndset.hpp"
#include "shiftdc/parallel.hpp"

namespace shiftdc {

/**
 * Brute-force scan: every rational p/q with 1 <= q <= max_den inside the
 * closed interval is tested with closure_contains. Returns the first hit in
 * (q, p) order, or nullopt. Uses only the membership oracle, so it is an
 * independent check on find_gap and closure_meets.
 */
std::optional<Rational> scan_closure(const NDSet &e, const ClosedInterval &iv, long max_den,
                                     Exec exec = Exec::Parallel);

/// Number of rationals the scan visits (for benchmarks and sizing).
std::size_t scan_size(const ClosedInterval &iv, long max_den);

} // namespace shiftdc
