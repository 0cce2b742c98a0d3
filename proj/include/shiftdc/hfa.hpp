#pragma once

#include <compare>
#include <vector>

#include "shiftdc/ndset.hpp"
#include "shiftdc/plmap.hpp"
#include "shiftdc/rational.hpp"

namespace shiftdc {

/**
 * Hereditarily finite set or sequence over rational atoms.
 *
 * Set elements are kept sorted and deduplicated under the structural order
 * (atoms by value < sets < sequences, nodes lexicographically), so equality
 * is extensional.
 */
class HFAValue {
public:
  enum class Kind { Atom, Set, Seq };

  static HFAValue atom(Rational q);
  static HFAValue set(std::vector<HFAValue> elements);
  static HFAValue seq(std::vector<HFAValue> items);

  Kind kind() const { return kind_; }
  bool is_atom() const { return kind_ == Kind::Atom; }
  /// Only meaningful for atoms.
  const Rational &value() const { return atom_; }
  /// Elements of a set (sorted) or items of a sequence.
  const std::vector<HFAValue> &items() const { return items_; }
  std::size_t size() const { return items_.size(); }

  /// For sequences: the sequence of the first n items.
  HFAValue prefix(std::size_t n) const;

  friend bool operator==(const HFAValue &a, const HFAValue &b);
  friend std::strong_ordering operator<=>(const HFAValue &a, const HFAValue &b);

private:
  HFAValue(Kind k) : kind_(k) {}

  Kind kind_ = Kind::Atom;
  Rational atom_;
  std::vector<HFAValue> items_;
};

/// pi(x) = { pi(y) : y in x }, itemwise on sequences.
HFAValue act(const PLMap &f, const HFAValue &x);

/// Atoms in the transitive closure of x, as a finite NDSet.
NDSet atoms_support(const HFAValue &x);

/// Membership oracle for sym(x): act(f, x) == x.
bool in_sym(const PLMap &f, const HFAValue &x);

/// a is a proper prefix of b (both sequences).
bool is_proper_prefix(const HFAValue &a, const HFAValue &b);

} // namespace shiftdc
