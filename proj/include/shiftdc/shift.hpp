#pragma once

#include <stdexcept>
#include <vector>

#include "shiftdc/ndset.hpp"
#include "shiftdc/parallel.hpp"
#include "shiftdc/plmap.hpp"
#include "shiftdc/report.hpp"

namespace shiftdc {

/// Increasing sequence E_n = D_0 ∪ ... ∪ D_n given by its increments. Past
/// the last increment the sequence is constant.
struct EStream {
  std::vector<NDSet> increments;

  NDSet prefix(std::size_t n) const;
};

struct ShiftStep {
  long n = 0;
  Interval I;
  Interval J;
  PLMap pi;
  PLMap sigma_next;
  /// sigma_n``E_n
  NDSet shifted;
};

struct ShiftTrace {
  std::vector<ShiftStep> steps;
};

/// Thrown by evacuate when a blocked interval meets closure(C_fix).
class EvacuationError : public std::runtime_error {
public:
  EvacuationError(const std::string &what, Rational witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const Rational &witness() const { return witness_; }

private:
  Rational witness_;
};

/**
 * Returns pi fixing `fixed` pointwise with closure(pi``moving) disjoint from
 * every blocked interval.
 *
 * Each blocked interval gets an open cover whose closure misses
 * closure(fixed); overlapping covers are merged. Inside a cover that meets
 * closure(moving), the blocked intervals B_1 < ... < B_m are squeezed into
 * gaps G_1 < ... < G_m of closure(moving) (one per equal slice of the cover)
 * and pi is the inverse of that squeeze: pi``moving misses B_i because
 * moving misses g(B_i) ⊆ G_i. Identity outside the covers.
 */
PLMap evacuate(const NDSet &fixed, const NDSet &moving, const std::vector<ClosedInterval> &blocked);

/**
 * Steps n = 0..N of the recursion:
 *   shifted_n = sigma_n``E_n,  J_n = find_gap(shifted_n, I_n),
 *   pi_n = evacuate(shifted_n, sigma_n``E_{n+1}, [J_0] .. [J_n]),
 *   sigma_{n+1} = pi_n . sigma_n.
 */
ShiftTrace run_shift_construction(const EStream &stream, long steps);

/**
 * Re-derives everything from the recorded pi_n and the stream and checks:
 *   "index", "interval" (I_n canonical, [a_n, b_n] ⊆ I_n), "sigma"
 *   (recorded sigma_{n+1} = pi_n . sigma_n), "shifted" (recorded set equals
 *   sigma_n``E_n), "cond1" (pi_n fixes sigma_n``E_n pointwise), "cond2"
 *   (closure(sigma_m``E_m) misses every closed [a_k, b_k]), and
 *   "telescoping" (sigma_n``E_k = sigma_k``E_k for k <= n).
 * Checks per step run under `exec`; the report order does not depend on it.
 */
Report verify_shift_trace(const ShiftTrace &trace, const EStream &stream, Exec exec = Exec::Parallel);

/// Union of the recorded shifted sets; Fix of it lies inside every K_n.
NDSet witness_subgroup(const ShiftTrace &trace);

} // namespace shiftdc
