#include "shiftdc/shift.hpp"

#include <algorithm>
#include <string>

#include "shiftdc/enumeration.hpp"
#include "shiftdc/scan.hpp"
#include "shiftdc/subgroup.hpp"

namespace shiftdc {

NDSet EStream::prefix(std::size_t n) const {
  NDSet acc;
  for (std::size_t i = 0; i < increments.size() && i <= n; ++i)
    acc = set_union(acc, increments[i]);
  return acc;
}

namespace {

struct Cover {
  Rational lo;
  Rational hi;
  std::vector<ClosedInterval> blocks;
};

std::vector<ClosedInterval> merge_blocks(std::vector<ClosedInterval> blocked) {
  std::sort(blocked.begin(), blocked.end(), [](const auto &a, const auto &b) { return a.lo < b.lo; });
  std::vector<ClosedInterval> merged;
  for (auto &b : blocked) {
    if (!merged.empty() && b.lo <= merged.back().hi) {
      merged.back().hi = max(merged.back().hi, b.hi);
      continue;
    }
    merged.push_back(std::move(b));
  }
  return merged;
}

} // namespace

PLMap evacuate(const NDSet &fixed, const NDSet &moving, const std::vector<ClosedInterval> &blocked) {
  const std::vector<ClosedInterval> blocks = merge_blocks(blocked);

  std::vector<Cover> covers;
  for (const auto &b : blocks) {
    if (const auto w = fixed.closure_meets(b))
      throw EvacuationError("evacuate: blocked interval [" + b.lo.str() + ", " + b.hi.str() +
                                "] meets the closure of the fixed set at " + w->str(),
                            *w);
    const auto left = fixed.closure_max_below(b.lo);
    const auto right = fixed.closure_min_above(b.hi);
    covers.push_back({left ? midpoint(*left, b.lo) : b.lo - Rational(1),
                      right ? midpoint(b.hi, *right) : b.hi + Rational(1),
                      {b}});
  }

  std::vector<Cover> merged;
  for (auto &c : covers) {
    if (!merged.empty() && c.lo <= merged.back().hi) {
      auto &m = merged.back();
      m.hi = max(m.hi, c.hi);
      m.blocks.insert(m.blocks.end(), c.blocks.begin(), c.blocks.end());
      continue;
    }
    merged.push_back(std::move(c));
  }

  PLMap squeeze = PLMap::identity();
  for (const auto &c : merged) {
    const bool needs_move = std::any_of(c.blocks.begin(), c.blocks.end(),
                                        [&](const ClosedInterval &b) { return moving.closure_meets(b).has_value(); });
    if (!needs_move)
      continue;
    const Rational slice = (c.hi - c.lo) / Rational(static_cast<long>(c.blocks.size()));
    std::vector<SqueezeTarget> targets;
    for (std::size_t i = 0; i < c.blocks.size(); ++i) {
      const Rational from = c.lo + slice * Rational(static_cast<long>(i));
      targets.push_back({c.blocks[i], find_gap(moving, Interval(from, from + slice))});
    }
    squeeze = compose(squeeze_map(Interval(c.lo, c.hi), targets), squeeze);
  }
  return invert(squeeze);
}

ShiftTrace run_shift_construction(const EStream &stream, long steps) {
  if (steps < 0)
    throw std::invalid_argument("run_shift_construction: negative step count");
  ShiftTrace trace;
  PLMap sigma = PLMap::identity();
  std::vector<ClosedInterval> blocked;
  for (long n = 0; n <= steps; ++n) {
    const auto idx = static_cast<std::size_t>(n);
    NDSet shifted = image(sigma, stream.prefix(idx));
    Interval interval = canonical_interval(static_cast<std::uint64_t>(n));
    Interval gap = find_gap(shifted, interval);
    blocked.emplace_back(gap.lower().value, gap.upper().value);
    PLMap pi = evacuate(shifted, image(sigma, stream.prefix(idx + 1)), blocked);
    PLMap next = compose(pi, sigma);
    trace.steps.push_back({n, std::move(interval), std::move(gap), std::move(pi), next, std::move(shifted)});
    sigma = std::move(next);
  }
  return trace;
}

namespace {

// Independent of NDSet::closure_meets: walks the presentation directly.
std::optional<Rational> closure_hit(const NDSet &e, const Rational &a, const Rational &b) {
  for (const auto &p : e.points())
    if (a <= p && p <= b)
      return p;
  for (const auto &raw : e.tails()) {
    const GeomTail t = raw.normalized();
    if (a <= t.limit && t.limit <= b)
      return t.limit;
    const bool above = t.side() > 0;
    // Distances from the limit that land in [a, b].
    const Rational near = above ? a - t.limit : t.limit - b;
    const Rational far = above ? b - t.limit : t.limit - a;
    if (far.sign() <= 0)
      continue;
    Rational d = t.coeff.abs();
    while (d > far)
      d *= t.ratio;
    if (d >= near)
      return above ? t.limit + d : t.limit - d;
  }
  return std::nullopt;
}

constexpr long kVerifyScanDen = 32;

} // namespace

Report verify_shift_trace(const ShiftTrace &trace, const EStream &stream, Exec exec) {
  Report report;
  const std::size_t count = trace.steps.size();
  if (count == 0)
    return report;

  // Serial: the sigma chain depends on every earlier step.
  std::vector<PLMap> sigma{PLMap::identity()};
  for (std::size_t n = 0; n < count; ++n) {
    const auto &st = trace.steps[n];
    report.add("index", static_cast<long>(n), st.n == static_cast<long>(n),
               st.n == static_cast<long>(n) ? "" : "recorded index " + std::to_string(st.n));
    sigma.push_back(compose(st.pi, sigma.back()));
    const bool ok = sigma.back() == st.sigma_next;
    report.add("sigma", static_cast<long>(n), ok, ok ? "" : "sigma_next differs from pi_n . sigma_n");
  }

  const auto shifted = map_indices<NDSet>(exec, count, [&](std::size_t n) { return image(sigma[n], stream.prefix(n)); });

  const auto per_step = map_indices<std::vector<Check>>(exec, count, [&](std::size_t n) {
    std::vector<Check> out;
    const long step = static_cast<long>(n);
    const auto &st = trace.steps[n];
    auto add = [&](const char *cond, bool ok, std::string detail = {}) {
      out.push_back({cond, step, ok ? Status::Pass : Status::Fail, Evidence::Exact, ok ? std::string{} : detail});
    };

    const bool canonical = st.I == canonical_interval(static_cast<std::uint64_t>(n));
    const bool inside = st.J.bounded() && st.I.contains_closed(st.J.lower().value, st.J.upper().value);
    add("interval", canonical && inside, canonical ? "J_n not inside I_n" : "I_n is not the canonical interval");

    add("shifted", st.shifted == shifted[n], "recorded shifted set differs from sigma_n``E_n");

    const auto moved = fix_violation(st.pi, shifted[n]);
    add("cond1", !moved, moved ? "pi_n moves " + moved->str() : "");

    // closure(sigma_n``E_n) against every recorded [a_k, b_k].
    std::string bad;
    for (std::size_t k = 0; k < count && bad.empty(); ++k) {
      const auto &gap = trace.steps[k].J;
      if (!gap.bounded()) {
        bad = "J_" + std::to_string(k) + " unbounded";
        break;
      }
      const Rational &a = gap.lower().value;
      const Rational &b = gap.upper().value;
      if (auto hit = closure_hit(shifted[n], a, b))
        bad = "closure meets [a_" + std::to_string(k) + ", b_" + std::to_string(k) + "] at " + hit->str();
      else if (auto probe = scan_closure(shifted[n], ClosedInterval(a, b), kVerifyScanDen, Exec::Serial))
        bad = "scan found " + probe->str() + " in [a_" + std::to_string(k) + ", b_" + std::to_string(k) + "]";
    }
    add("cond2", bad.empty(), bad);

    std::string drift;
    for (std::size_t k = 0; k <= n && drift.empty(); ++k)
      if (image(sigma[n], stream.prefix(k)) != shifted[k])
        drift = "sigma_" + std::to_string(n) + "``E_" + std::to_string(k) + " != sigma_" + std::to_string(k) +
                "``E_" + std::to_string(k);
    add("telescoping", drift.empty(), drift);
    return out;
  });

  for (const auto &checks : per_step)
    for (const auto &c : checks)
      report.add(c);
  return report;
}

NDSet witness_subgroup(const ShiftTrace &trace) {
  NDSet acc;
  for (const auto &st : trace.steps)
    acc = set_union(acc, st.shifted);
  return acc;
}

} // namespace shiftdc
