#include "shiftdc/plmap.hpp"

#include <algorithm>
#include <stdexcept>

namespace shiftdc {

PLMap::PLMap(std::vector<Breakpoint> breakpoints, Rational left_slope, Rational right_slope)
    : bps_(std::move(breakpoints)), left_(std::move(left_slope)), right_(std::move(right_slope)) {
  if (left_.sign() <= 0 || right_.sign() <= 0)
    throw std::invalid_argument("PLMap: slopes must be positive");
  if (bps_.empty())
    throw std::invalid_argument("PLMap: at least one breakpoint is required");
  for (std::size_t i = 1; i < bps_.size(); ++i)
    if (!(bps_[i - 1].in < bps_[i].in) || !(bps_[i - 1].out < bps_[i].out))
      throw std::invalid_argument("PLMap: breakpoints must be strictly increasing in both coordinates");
  canonicalize();
}

void PLMap::canonicalize() {
  const std::size_t m = bps_.size();
  // seg[i] is the slope entering breakpoint i, seg[i + 1] the slope leaving it.
  std::vector<Rational> seg;
  seg.reserve(m + 1);
  seg.push_back(left_);
  for (std::size_t i = 1; i < m; ++i)
    seg.push_back((bps_[i].out - bps_[i - 1].out) / (bps_[i].in - bps_[i - 1].in));
  seg.push_back(right_);

  std::vector<Breakpoint> kept;
  for (std::size_t i = 0; i < m; ++i)
    if (seg[i] != seg[i + 1])
      kept.push_back(bps_[i]);

  if (kept.empty()) {
    // Affine: nominal breakpoint at input 0.
    const Rational at_zero = bps_[0].out + left_ * (Rational(0) - bps_[0].in);
    kept.push_back({Rational(0), at_zero});
  }
  bps_ = std::move(kept);
}

PLMap PLMap::identity() { return affine(Rational(1), Rational(0)); }

PLMap PLMap::translation(const Rational &by) { return affine(Rational(1), by); }

PLMap PLMap::affine(const Rational &slope, const Rational &offset) {
  return PLMap({{Rational(0), offset}}, slope, slope);
}

PLMap PLMap::supported_on(std::vector<Breakpoint> pts) {
  if (pts.empty())
    return identity();
  if (pts.front().in != pts.front().out || pts.back().in != pts.back().out)
    throw std::invalid_argument("PLMap::supported_on: outer points must be fixed");
  return PLMap(std::move(pts), Rational(1), Rational(1));
}

Rational PLMap::apply(const Rational &x) const {
  const auto &first = bps_.front();
  if (x <= first.in)
    return first.out + left_ * (x - first.in);
  const auto &last = bps_.back();
  if (x >= last.in)
    return last.out + right_ * (x - last.in);
  // first.in < x < last.in, so hi is a valid index >= 1.
  const auto hi = std::upper_bound(bps_.begin(), bps_.end(), x,
                                   [](const Rational &v, const Breakpoint &b) { return v < b.in; });
  const auto lo = hi - 1;
  return lo->out + (hi->out - lo->out) * (x - lo->in) / (hi->in - lo->in);
}

Rational PLMap::slope_right_of(const Rational &x) const {
  if (x >= bps_.back().in)
    return right_;
  if (x < bps_.front().in)
    return left_;
  const auto hi = std::upper_bound(bps_.begin(), bps_.end(), x,
                                   [](const Rational &v, const Breakpoint &b) { return v < b.in; });
  const auto lo = hi - 1;
  return (hi->out - lo->out) / (hi->in - lo->in);
}

Rational PLMap::slope_left_of(const Rational &x) const {
  if (x <= bps_.front().in)
    return left_;
  if (x > bps_.back().in)
    return right_;
  const auto hi = std::lower_bound(bps_.begin(), bps_.end(), x,
                                   [](const Breakpoint &b, const Rational &v) { return b.in < v; });
  const auto lo = hi - 1;
  return (hi->out - lo->out) / (hi->in - lo->in);
}

std::optional<Rational> PLMap::next_break_after(const Rational &x) const {
  const auto it = std::upper_bound(bps_.begin(), bps_.end(), x,
                                   [](const Rational &v, const Breakpoint &b) { return v < b.in; });
  if (it == bps_.end())
    return std::nullopt;
  return it->in;
}

std::optional<Rational> PLMap::prev_break_before(const Rational &x) const {
  const auto it = std::lower_bound(bps_.begin(), bps_.end(), x,
                                   [](const Breakpoint &b, const Rational &v) { return b.in < v; });
  if (it == bps_.begin())
    return std::nullopt;
  return std::prev(it)->in;
}

bool PLMap::is_identity() const { return *this == identity(); }

PLMap compose(const PLMap &f, const PLMap &g) {
  const PLMap g_inv = invert(g);
  std::vector<Rational> inputs;
  inputs.reserve(f.breakpoints().size() + g.breakpoints().size());
  for (const auto &b : g.breakpoints())
    inputs.push_back(b.in);
  for (const auto &b : f.breakpoints())
    inputs.push_back(g_inv.apply(b.in));
  std::sort(inputs.begin(), inputs.end());
  inputs.erase(std::unique(inputs.begin(), inputs.end()), inputs.end());

  std::vector<Breakpoint> pts;
  pts.reserve(inputs.size());
  for (auto &x : inputs) {
    Rational y = f.apply(g.apply(x));
    pts.push_back({std::move(x), std::move(y)});
  }
  return PLMap(std::move(pts), f.left_slope() * g.left_slope(), f.right_slope() * g.right_slope());
}

PLMap invert(const PLMap &f) {
  std::vector<Breakpoint> pts;
  pts.reserve(f.breakpoints().size());
  for (const auto &b : f.breakpoints())
    pts.push_back({b.out, b.in});
  return PLMap(std::move(pts), f.left_slope().inverse(), f.right_slope().inverse());
}

PLMap squeeze_map(const Interval &cover, const std::vector<SqueezeTarget> &targets) {
  if (!cover.bounded())
    throw std::invalid_argument("squeeze_map: cover must have rational endpoints");
  const Rational &c_lo = cover.lower().value;
  const Rational &c_hi = cover.upper().value;

  bool all_inside = true;
  for (const auto &t : targets) {
    if (!cover.contains_closed(t.blocked.lo, t.blocked.hi))
      throw std::invalid_argument("squeeze_map: blocked interval not inside cover");
    if (!t.gap.bounded() || t.gap.lower().value < c_lo || c_hi < t.gap.upper().value)
      throw std::invalid_argument("squeeze_map: gap not inside cover");
    if (!t.gap.contains_closed(t.blocked.lo, t.blocked.hi))
      all_inside = false;
  }
  if (all_inside)
    return PLMap::identity();

  std::vector<Breakpoint> pts;
  pts.push_back({c_lo, c_lo});
  for (const auto &t : targets) {
    const Rational &a = t.gap.lower().value;
    const Rational &b = t.gap.upper().value;
    const Rational third = (b - a) / Rational(3);
    if (t.blocked.lo == t.blocked.hi) {
      pts.push_back({t.blocked.lo, midpoint(a, b)});
    } else {
      pts.push_back({t.blocked.lo, a + third});
      pts.push_back({t.blocked.hi, b - third});
    }
  }
  pts.push_back({c_hi, c_hi});

  for (std::size_t i = 1; i < pts.size(); ++i)
    if (!(pts[i - 1].in < pts[i].in) || !(pts[i - 1].out < pts[i].out))
      throw std::invalid_argument("squeeze_map: order-inconsistent target list");
  return PLMap::supported_on(std::move(pts));
}

} // namespace shiftdc
