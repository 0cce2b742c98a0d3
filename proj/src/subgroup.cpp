#include "shiftdc/subgroup.hpp"

#include <stdexcept>
#include <string>

#include "shiftdc/sampling.hpp"

namespace shiftdc {

SubgroupTerm full_group() { return SubgroupTerm(FullGroup{}); }
SubgroupTerm fix(NDSet support) { return SubgroupTerm(FixTerm{std::move(support)}); }
SubgroupTerm stab(HFAValue object) { return SubgroupTerm(StabTerm{std::move(object)}); }
SubgroupTerm conj(PLMap by, SubgroupTerm inner) {
  return SubgroupTerm(ConjTerm{std::move(by), std::make_shared<const SubgroupTerm>(std::move(inner))});
}
SubgroupTerm inter(std::vector<SubgroupTerm> parts) { return SubgroupTerm(InterTerm{std::move(parts)}); }

bool same_term(const SubgroupTerm &a, const SubgroupTerm &b) {
  if (a.node().index() != b.node().index())
    return false;
  if (const auto *x = a.as<FixTerm>())
    return *x == *b.as<FixTerm>();
  if (const auto *x = a.as<StabTerm>())
    return *x == *b.as<StabTerm>();
  if (const auto *x = a.as<ConjTerm>()) {
    const auto *y = b.as<ConjTerm>();
    return x->by == y->by && same_term(*x->inner, *y->inner);
  }
  if (const auto *x = a.as<InterTerm>()) {
    const auto *y = b.as<InterTerm>();
    if (x->parts.size() != y->parts.size())
      return false;
    for (std::size_t i = 0; i < x->parts.size(); ++i)
      if (!same_term(x->parts[i], y->parts[i]))
        return false;
  }
  return true;
}

std::optional<Rational> fix_violation(const PLMap &f, const NDSet &e) {
  for (const auto &p : e.points())
    if (f.apply(p) != p)
      return p;
  for (const auto &raw : e.tails()) {
    const GeomTail t = raw.normalized();
    const bool above = t.side() > 0;
    const auto edge = above ? f.next_break_after(t.limit) : f.prev_break_before(t.limit);
    Rational d = t.coeff.abs();
    auto moved = [&](const Rational &dist) {
      const Rational q = above ? t.limit + dist : t.limit - dist;
      return f.apply(q) != q ? std::optional<Rational>(q) : std::nullopt;
    };
    if (edge) {
      const Rational room = above ? *edge - t.limit : t.limit - *edge;
      for (; d > room; d *= t.ratio)
        if (auto q = moved(d))
          return q;
    }
    // On the limit-side piece f is affine, so unless it is the identity
    // there at most one of two consecutive terms is fixed.
    if (auto q = moved(d))
      return q;
    if (auto q = moved(d * t.ratio))
      return q;
  }
  return std::nullopt;
}

bool member(const SubgroupTerm &h, const PLMap &f) {
  return std::visit(
      [&](const auto &n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, FullGroup>) {
          return true;
        } else if constexpr (std::is_same_v<T, FixTerm>) {
          return !fix_violation(f, n.support);
        } else if constexpr (std::is_same_v<T, StabTerm>) {
          return in_sym(f, n.object);
        } else if constexpr (std::is_same_v<T, ConjTerm>) {
          return member(*n.inner, compose(invert(n.by), compose(f, n.by)));
        } else {
          for (const auto &part : n.parts)
            if (!member(part, f))
              return false;
          return true;
        }
      },
      h.node());
}

namespace {

SubgroupTerm conjugate_normal(const PLMap &by, const SubgroupTerm &inner);

SubgroupTerm flatten_inter(std::vector<SubgroupTerm> parts) {
  std::vector<SubgroupTerm> flat;
  for (auto &p : parts) {
    if (p.as<FullGroup>())
      continue;
    if (const auto *i = p.as<InterTerm>()) {
      for (const auto &q : i->parts)
        flat.push_back(q);
      continue;
    }
    flat.push_back(std::move(p));
  }
  if (flat.empty())
    return full_group();
  if (flat.size() == 1)
    return flat.front();
  return inter(std::move(flat));
}

// `inner` is already normal (no Conj nodes, flat Inter).
SubgroupTerm conjugate_normal(const PLMap &by, const SubgroupTerm &inner) {
  if (by.is_identity())
    return inner;
  if (inner.as<FullGroup>())
    return inner;
  if (const auto *fx = inner.as<FixTerm>())
    return fix(image(by, fx->support));
  if (const auto *st = inner.as<StabTerm>())
    return stab(act(by, st->object));
  if (const auto *in = inner.as<InterTerm>()) {
    std::vector<SubgroupTerm> parts;
    for (const auto &p : in->parts)
      parts.push_back(conjugate_normal(by, p));
    return flatten_inter(std::move(parts));
  }
  throw std::logic_error("conjugate_normal: unexpected Conj in normal form");
}

} // namespace

SubgroupTerm normalize(const SubgroupTerm &h) {
  if (const auto *c = h.as<ConjTerm>()) {
    if (const auto *nested = c->inner->as<ConjTerm>())
      return normalize(conj(compose(c->by, nested->by), *nested->inner));
    return conjugate_normal(c->by, normalize(*c->inner));
  }
  if (const auto *in = h.as<InterTerm>()) {
    std::vector<SubgroupTerm> parts;
    for (const auto &p : in->parts)
      parts.push_back(normalize(p));
    return flatten_inter(std::move(parts));
  }
  return h;
}

SubsetResult fix_leq(const NDSet &e, const NDSet &e2) { return subset_of_closure(e2, e); }

NDSet fix_generator(const SubgroupTerm &h) {
  const SubgroupTerm n = normalize(h);
  if (const auto *fx = n.as<FixTerm>())
    return fx->support;
  if (const auto *st = n.as<StabTerm>())
    return atoms_support(st->object);
  if (const auto *in = n.as<InterTerm>()) {
    NDSet acc;
    for (const auto &p : in->parts)
      acc = set_union(acc, fix_generator(p));
    return acc;
  }
  return NDSet{};
}

std::vector<PLMap> telescope(const std::vector<PLMap> &pis) {
  std::vector<PLMap> sigma{PLMap::identity()};
  sigma.reserve(pis.size() + 1);
  for (const auto &pi : pis)
    sigma.push_back(compose(pi, sigma.back()));
  return sigma;
}

namespace {

Check containment_check(const std::string &name, long step, const NDSet &small_support,
                        const SubgroupTerm &big, std::uint64_t seed, int samples) {
  // Fix(small_support) ⊆ big.
  if (const auto *fx = big.as<FixTerm>()) {
    const SubsetResult r = fix_leq(small_support, fx->support);
    Check c{name, step, Status::Pass, Evidence::Exact, {}};
    if (r.verdict == Verdict::No) {
      c.status = Status::Fail;
      c.detail = "point outside closure: " + r.witness->str();
    } else if (r.verdict == Verdict::Unknown) {
      c.status = Status::Unknown;
      c.detail = "tail comparison undecided";
    }
    return c;
  }
  Rng rng(seed);
  for (int i = 0; i < samples; ++i) {
    const PLMap g = random_fix_element(rng, small_support);
    if (!member(big, g))
      return {name, step, Status::Fail, Evidence::Sampled, "sample " + std::to_string(i) + " not a member"};
  }
  return {name, step, Status::Pass, Evidence::Sampled, std::to_string(samples) + " samples"};
}

} // namespace

Report check_shift_witness(const ShiftProblem &p, const ShiftWitnessOptions &opts) {
  Report report;
  if (p.groups.empty())
    return report;
  if (p.groups.size() > p.witness.size() + 1)
    throw std::invalid_argument("check_shift_witness: need at least N shifts for N+1 groups");

  const std::vector<PLMap> sigma = telescope(p.witness);
  const std::size_t levels = p.groups.size();

  const auto per_level = map_indices<std::vector<Check>>(opts.exec, levels, [&](std::size_t n) {
    std::vector<Check> out;
    const long step = static_cast<long>(n);
    const SubgroupTerm k = n == 0 ? normalize(p.groups[0]) : normalize(conj(sigma[n], p.groups[n]));

    if (n + 1 < levels) {
      const SubgroupTerm h_next = normalize(p.groups[n + 1]);
      out.push_back(containment_check("decreasing", step, fix_generator(h_next), normalize(p.groups[n]),
                                      derive_seed(opts.seed, 2 * n), opts.samples));
      if (!h_next.as<FixTerm>())
        out.back().detail += " (via Fix generator)";
    }
    if (n < p.witness.size()) {
      const bool ok = member(k, p.witness[n]);
      out.push_back({"pi_in_K", step, ok ? Status::Pass : Status::Fail, Evidence::Exact,
                     ok ? std::string{} : "pi_" + std::to_string(n) + " not in K_" + std::to_string(n)});
    }
    out.push_back(
        containment_check("candidate_in_K", step, p.candidate, k, derive_seed(opts.seed, 2 * n + 1), opts.samples));
    return out;
  });

  for (const auto &level : per_level)
    for (const auto &c : level)
      report.add(c);
  return report;
}

} // namespace shiftdc
