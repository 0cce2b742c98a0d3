#include "shiftdc/hfa.hpp"

#include <algorithm>
#include <stdexcept>

namespace shiftdc {

HFAValue HFAValue::atom(Rational q) {
  HFAValue v(Kind::Atom);
  v.atom_ = std::move(q);
  return v;
}

HFAValue HFAValue::set(std::vector<HFAValue> elements) {
  HFAValue v(Kind::Set);
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  v.items_ = std::move(elements);
  return v;
}

HFAValue HFAValue::seq(std::vector<HFAValue> items) {
  HFAValue v(Kind::Seq);
  v.items_ = std::move(items);
  return v;
}

HFAValue HFAValue::prefix(std::size_t n) const {
  if (kind_ != Kind::Seq)
    throw std::invalid_argument("HFAValue::prefix: not a sequence");
  if (n > items_.size())
    throw std::out_of_range("HFAValue::prefix: too long");
  return seq(std::vector<HFAValue>(items_.begin(), items_.begin() + static_cast<long>(n)));
}

bool operator==(const HFAValue &a, const HFAValue &b) {
  if (a.kind_ != b.kind_)
    return false;
  if (a.kind_ == HFAValue::Kind::Atom)
    return a.atom_ == b.atom_;
  return a.items_ == b.items_;
}

std::strong_ordering operator<=>(const HFAValue &a, const HFAValue &b) {
  if (a.kind_ != b.kind_)
    return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
  if (a.kind_ == HFAValue::Kind::Atom)
    return a.atom_ <=> b.atom_;
  return std::lexicographical_compare_three_way(a.items_.begin(), a.items_.end(), b.items_.begin(),
                                                b.items_.end());
}

HFAValue act(const PLMap &f, const HFAValue &x) {
  switch (x.kind()) {
  case HFAValue::Kind::Atom:
    return HFAValue::atom(f.apply(x.value()));
  case HFAValue::Kind::Set:
  case HFAValue::Kind::Seq: {
    std::vector<HFAValue> out;
    out.reserve(x.size());
    for (const auto &y : x.items())
      out.push_back(act(f, y));
    return x.kind() == HFAValue::Kind::Set ? HFAValue::set(std::move(out)) : HFAValue::seq(std::move(out));
  }
  }
  return x;
}

namespace {

void collect_atoms(const HFAValue &x, std::vector<Rational> &out) {
  if (x.is_atom()) {
    out.push_back(x.value());
    return;
  }
  for (const auto &y : x.items())
    collect_atoms(y, out);
}

} // namespace

NDSet atoms_support(const HFAValue &x) {
  std::vector<Rational> pts;
  collect_atoms(x, pts);
  return NDSet::of_points(std::move(pts));
}

bool in_sym(const PLMap &f, const HFAValue &x) { return act(f, x) == x; }

bool is_proper_prefix(const HFAValue &a, const HFAValue &b) {
  if (a.kind() != HFAValue::Kind::Seq || b.kind() != HFAValue::Kind::Seq)
    return false;
  if (a.size() >= b.size())
    return false;
  return std::equal(a.items().begin(), a.items().end(), b.items().begin());
}

} // namespace shiftdc
