#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "shiftdc/hfa.hpp"
#include "shiftdc/ndset.hpp"
#include "shiftdc/parallel.hpp"
#include "shiftdc/plmap.hpp"
#include "shiftdc/report.hpp"

namespace shiftdc {

class SubgroupTerm;

struct FullGroup {
  friend bool operator==(const FullGroup &, const FullGroup &) = default;
};
/// Pointwise stabilizer of a nowhere-dense set.
struct FixTerm {
  NDSet support;
  friend bool operator==(const FixTerm &, const FixTerm &) = default;
};
/// Setwise stabilizer sym(x) under the recursive action.
struct StabTerm {
  HFAValue object;
  friend bool operator==(const StabTerm &, const StabTerm &) = default;
};
/// by . inner . by^-1
struct ConjTerm {
  PLMap by;
  std::shared_ptr<const SubgroupTerm> inner;
};
struct InterTerm {
  std::vector<SubgroupTerm> parts;
};

/// Intensional subgroup of the PL automorphism group; every constructor has
/// a decidable membership oracle.
class SubgroupTerm {
public:
  using Node = std::variant<FullGroup, FixTerm, StabTerm, ConjTerm, InterTerm>;

  SubgroupTerm() : node_(FullGroup{}) {}
  SubgroupTerm(Node n) : node_(std::move(n)) {}

  const Node &node() const { return node_; }
  template <typename T> const T *as() const { return std::get_if<T>(&node_); }

private:
  Node node_;
};

SubgroupTerm full_group();
SubgroupTerm fix(NDSet support);
SubgroupTerm stab(HFAValue object);
SubgroupTerm conj(PLMap by, SubgroupTerm inner);
SubgroupTerm inter(std::vector<SubgroupTerm> parts);

/// Structural equality (maps and sets compare canonically).
bool same_term(const SubgroupTerm &a, const SubgroupTerm &b);

/// A point of E moved by f, or nullopt when f fixes E pointwise.
std::optional<Rational> fix_violation(const PLMap &f, const NDSet &e);

bool member(const SubgroupTerm &h, const PLMap &f);

/// Pushes conjugations inward: Conj(p, Fix E) -> Fix(p``E), Conj(p, Stab x)
/// -> Stab(p(x)), Conj over Inter distributes, nested Conj composes.
/// Inter is flattened and FullGroup parts are dropped.
SubgroupTerm normalize(const SubgroupTerm &h);

/// Fix(E) ⊆ Fix(E2), decided as E2 ⊆ closure(E).
SubsetResult fix_leq(const NDSet &e, const NDSet &e2);

/// A set S with Fix(S) ⊆ H (after normalization).
NDSet fix_generator(const SubgroupTerm &h);

/// Decreasing groups H_0 ⊇ H_1 ⊇ ..., candidate shifts pi_0, pi_1, ..., and
/// a support whose Fix group is the claimed intersection witness.
struct ShiftProblem {
  std::vector<SubgroupTerm> groups;
  std::vector<PLMap> witness;
  NDSet candidate;
};

struct ShiftWitnessOptions {
  std::uint64_t seed = 1;
  int samples = 100;
  Exec exec = Exec::Parallel;
};

/**
 * Checks a finite prefix of a shift witness.
 *
 * With sigma_n = pi_{n-1} . ... . pi_0 and K_n = normalize(Conj(sigma_n, H_n)):
 *  - "decreasing":   H_{n+1} ⊆ H_n (exact when both are Fix terms)
 *  - "pi_in_K":      member(K_n, pi_n) for every supplied pi_n
 *  - "candidate_in_K": Fix(candidate) ⊆ K_n, via fix_leq for Fix-form K_n
 *                    and otherwise by sampling Fix(candidate).
 */
Report check_shift_witness(const ShiftProblem &p, const ShiftWitnessOptions &opts = {});

/// sigma_0 = id, sigma_{n+1} = pi_n . sigma_n, for n = 0 .. pis.size().
std::vector<PLMap> telescope(const std::vector<PLMap> &pis);

} // namespace shiftdc
