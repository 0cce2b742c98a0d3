#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "shiftdc/hfa.hpp"
#include "shiftdc/ndset.hpp"
#include "shiftdc/parallel.hpp"
#include "shiftdc/report.hpp"
#include "shiftdc/shift.hpp"
#include "shiftdc/subgroup.hpp"

namespace shiftdc {

/// The orbit tree of the prefixes of `base` under Fix(base_support), ordered
/// by end-extension.
struct TreeInstance {
  std::vector<HFAValue> base;
  NDSet base_support;

  /// <x_i : i < n>
  HFAValue node(std::size_t n) const;
};

/**
 * Decides whether some automorphism fixing base_support pointwise maps the
 * length-n base prefix onto `candidate`: same order pattern, identical
 * values where the base value lies in closure(base_support), and every other
 * coordinate in the same gap of that closure as its base value.
 * Atom-sequence instances only (std::invalid_argument otherwise).
 */
bool orbit_member(const TreeInstance &inst, const HFAValue &candidate);

/// Builds such an automorphism explicitly, or nullopt.
std::optional<PLMap> orbit_witness(const TreeInstance &inst, const HFAValue &candidate);

struct BranchResult {
  std::vector<HFAValue> t;
  Report report;
};

/**
 * Turns a chain s_0 < s_1 < ... and shifts pi_0, pi_1, ... into the chain
 * t_n = (pi_n . ... . pi_0)(s_n), checking "chain" (t_n is a proper prefix of
 * t_{n+1}), "fixed" (pi_{n+1} fixes t_n) and "orbit" (t_n lies in the tree).
 */
BranchResult branch_from_shifts(const TreeInstance &inst, const std::vector<HFAValue> &s,
                                const std::vector<PLMap> &pis);

/// Supports inducing the groups of a chain: D_0 = base_support and
/// D_{n+1} = atoms of s_n, so E_{n+1} = base_support ∪ supp(s_0 .. s_n).
EStream support_stream(const NDSet &base_support, const std::vector<HFAValue> &s);

struct BranchCertificate {
  std::vector<HFAValue> x;
  std::vector<HFAValue> t;
  std::vector<PLMap> tau;
};

/// tau_n does not carry <x_i : i <= n> onto <t_i : i <= n>.
class TauInconsistency : public std::runtime_error {
public:
  TauInconsistency(std::size_t index, const std::string &what) : std::runtime_error(what), index_(index) {}
  std::size_t index() const { return index_; }

private:
  std::size_t index_;
};

struct SamplingOptions {
  std::uint64_t seed = 1;
  int samples = 100;
  Exec exec = Exec::Parallel;
};

struct ShiftsFromBranch {
  std::vector<PLMap> pis;
  std::vector<SubgroupTerm> ks;
  Report report;
};

/**
 * pi_0 = tau_0, pi_n = tau_n . tau_{n-1}^-1, K_0 = H_0,
 * K_n = normalize(Conj(tau_{n-1}, H_n)). Checks "telescoping"
 * (pi_n . ... . pi_0 = tau_n), "claim1" (pi_n in K_n) and "claim2" (sampled
 * elements of Fix of the generator of Stab(<t>) ∩ K_0 lie in every K_n).
 * Throws TauInconsistency.
 */
ShiftsFromBranch shifts_from_branch(const BranchCertificate &cert, const std::vector<SubgroupTerm> &hs,
                                    const SamplingOptions &opts = {});

struct EssentialShift {
  std::vector<HFAValue> y;
  Report report;
};

/**
 * y_n = sigma_n(x_n). Checks "witness" (pi_n in sigma_n Fix(supp x_n)
 * sigma_n^-1), "conjugation" (in_sym(f, y_n) agrees with
 * member(Conj(sigma_n, Stab x_n), f) on sampled f) and "sequence_stabilizer"
 * (f fixes <y_n> iff f lies in every Conj(sigma_n, Stab x_n), sampled).
 */
EssentialShift essential_shift(const std::vector<HFAValue> &xs, const std::vector<PLMap> &pis,
                               const SamplingOptions &opts = {});

} // namespace shiftdc
