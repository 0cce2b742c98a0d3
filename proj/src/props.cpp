#include "shiftdc/props.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "shiftdc/dc.hpp"
#include "shiftdc/enumeration.hpp"
#include "shiftdc/json_io.hpp"
#include "shiftdc/sampling.hpp"
#include "shiftdc/scan.hpp"
#include "shiftdc/shift.hpp"
#include "shiftdc/subgroup.hpp"

namespace shiftdc {

namespace {

using Outcome = std::optional<std::string>;
using CaseFn = std::function<Outcome(Rng &, int)>;

struct Property {
  const char *name;
  CaseFn run;
  /// Divides the requested case count.
  std::size_t cost = 1;
};

// Counterexample text: a JSON object of the named inputs.
Outcome fail(const char *what, std::initializer_list<std::pair<const char *, Json>> inputs) {
  Json j;
  j["violation"] = what;
  for (const auto &[k, v] : inputs)
    j[k] = v;
  return j.dump();
}

Rational inside(Rng &rng, const Rational &lo, const Rational &hi, long grid = 64) {
  return lo + (hi - lo) * Rational(rng.range(1, grid - 1), grid);
}

// A random point of E or a random rational.
Rational probe(Rng &rng, const NDSet &e) {
  if (!e.points().empty() && rng.coin())
    return e.points()[rng.below(e.points().size())];
  if (!e.tails().empty() && rng.coin()) {
    const GeomTail &t = e.tails()[rng.below(e.tails().size())];
    return rng.coin() ? t.limit : t.term(t.head_drop + rng.range(0, 6));
  }
  return random_rational(rng, 24, 8);
}

SubgroupTerm random_term(Rng &rng, int depth) {
  const auto pick = depth <= 0 ? rng.below(3) : rng.below(5);
  switch (pick) {
  case 0:
    return full_group();
  case 1:
    return fix(random_ndset(rng, 3, 1));
  case 2:
    return stab(random_hfa(rng, 2));
  case 3:
    return conj(random_plmap(rng), random_term(rng, depth - 1));
  default:
    return inter({random_term(rng, depth - 1), random_term(rng, depth - 1)});
  }
}

std::vector<HFAValue> distinct_atoms(Rng &rng, int n) {
  std::vector<HFAValue> out;
  std::vector<Rational> seen;
  while (static_cast<int>(out.size()) < n) {
    Rational q = random_rational(rng, 12, 4);
    if (std::find(seen.begin(), seen.end(), q) != seen.end())
      continue;
    seen.push_back(q);
    out.push_back(HFAValue::atom(std::move(q)));
  }
  return out;
}

std::vector<Property> all_properties() {
  std::vector<Property> ps;

  // ---- exact rationals and PL maps
  ps.push_back({"plmap.associativity", [](Rng &rng, int size) -> Outcome {
                  const PLMap f = random_plmap(rng, size), g = random_plmap(rng, size), h = random_plmap(rng, size);
                  if (compose(compose(f, g), h) != compose(f, compose(g, h)))
                    return fail("(f.g).h != f.(g.h)", {{"f", to_json(f)}, {"g", to_json(g)}, {"h", to_json(h)}});
                  return {};
                }});
  ps.push_back({"plmap.inverse", [](Rng &rng, int size) -> Outcome {
                  const PLMap f = random_plmap(rng, size);
                  if (!compose(f, invert(f)).is_identity() || !compose(invert(f), f).is_identity())
                    return fail("f.f^-1 != id", {{"f", to_json(f)}});
                  return {};
                }});
  ps.push_back({"plmap.identity", [](Rng &rng, int size) -> Outcome {
                  const PLMap f = random_plmap(rng, size);
                  if (compose(f, PLMap::identity()) != f || compose(PLMap::identity(), f) != f)
                    return fail("f.id != f", {{"f", to_json(f)}});
                  return {};
                }});
  ps.push_back({"plmap.order_preservation", [](Rng &rng, int size) -> Outcome {
                  const PLMap f = random_plmap(rng, size);
                  Rational p = random_rational(rng, 24, 8), q = random_rational(rng, 24, 8);
                  if (p == q)
                    return {};
                  if (q < p)
                    std::swap(p, q);
                  if (!(f(p) < f(q)))
                    return fail("f(p) >= f(q) for p < q", {{"f", to_json(f)}, {"p", to_json(p)}, {"q", to_json(q)}});
                  return {};
                }});
  ps.push_back({"plmap.apply_coherence", [](Rng &rng, int size) -> Outcome {
                  const PLMap f = random_plmap(rng, size), g = random_plmap(rng, size);
                  const Rational q = random_rational(rng, 24, 8);
                  if (compose(f, g)(q) != f(g(q)))
                    return fail("(f.g)(q) != f(g(q))", {{"f", to_json(f)}, {"g", to_json(g)}, {"q", to_json(q)}});
                  return {};
                }});
  ps.push_back({"plmap.json_roundtrip", [](Rng &rng, int size) -> Outcome {
                  const PLMap f = random_plmap(rng, size);
                  const Json j = to_json(f);
                  const PLMap back = plmap_from_json(Json::parse(j.dump()));
                  if (back != f || to_json(back).dump() != j.dump())
                    return fail("serialization round trip", {{"f", j}});
                  return {};
                }});
  ps.push_back({"plmap.squeeze", [](Rng &rng, int size) -> Outcome {
                  const Rational c_lo = random_rational(rng, 12, 2);
                  const Rational c_hi = c_lo + random_positive(rng, 6);
                  const int k = static_cast<int>(rng.range(1, std::min(size, 3)));
                  auto sorted_points = [&](int count) {
                    std::vector<Rational> v;
                    while (static_cast<int>(v.size()) < count) {
                      Rational q = inside(rng, c_lo, c_hi, 97);
                      if (std::find(v.begin(), v.end(), q) == v.end())
                        v.push_back(std::move(q));
                    }
                    std::sort(v.begin(), v.end());
                    return v;
                  };
                  const auto bs = sorted_points(2 * k);
                  const auto gs = sorted_points(2 * k);
                  std::vector<SqueezeTarget> targets;
                  for (int i = 0; i < k; ++i) {
                    const bool degenerate = rng.below(4) == 0;
                    targets.push_back({ClosedInterval(bs[2 * i], degenerate ? bs[2 * i] : bs[2 * i + 1]),
                                       Interval(gs[2 * i], gs[2 * i + 1])});
                  }
                  const Interval cover(c_lo, c_hi);
                  const PLMap f = squeeze_map(cover, targets);
                  auto ctx = [&] {
                    Json t = Json::array();
                    for (const auto &tg : targets)
                      t.push_back(Json::array(
                          {Json::array({tg.blocked.lo.str(), tg.blocked.hi.str()}), to_json(tg.gap)}));
                    return Json::object({{"cover", to_json(cover)}, {"targets", t}, {"f", to_json(f)}});
                  };
                  if (f(c_lo) != c_lo || f(c_hi) != c_hi || f(c_lo - Rational(1)) != c_lo - Rational(1) ||
                      f(c_hi + Rational(1)) != c_hi + Rational(1))
                    return fail("not the identity outside the cover", {{"case", ctx()}});
                  for (const auto &tg : targets) {
                    if (!tg.gap.contains(f(tg.blocked.lo)) || !tg.gap.contains(f(tg.blocked.hi)))
                      return fail("block endpoint outside its gap", {{"case", ctx()}});
                    for (int s = 0; s < 100 && tg.blocked.lo < tg.blocked.hi; ++s) {
                      const Rational q = inside(rng, tg.blocked.lo, tg.blocked.hi, 1009);
                      if (!tg.gap.contains(f(q)))
                        return fail("interior block point outside its gap", {{"case", ctx()}, {"q", to_json(q)}});
                    }
                  }
                  return {};
                }});

  // ---- nowhere-dense sets
  ps.push_back({"ndset.equivariance", [](Rng &rng, int size) -> Outcome {
                  const NDSet e = random_ndset(rng, size, std::min(size, 2));
                  const PLMap f = random_plmap(rng, size);
                  const Rational q = probe(rng, e);
                  const NDSet fe = image(f, e);
                  if (fe.contains(f(q)) != e.contains(q))
                    return fail("contains(f``E, f(q)) != contains(E, q)",
                                {{"E", to_json(e)}, {"f", to_json(f)}, {"q", to_json(q)}});
                  if (fe.closure_contains(f(q)) != e.closure_contains(q))
                    return fail("closure of image != image of closure",
                                {{"E", to_json(e)}, {"f", to_json(f)}, {"q", to_json(q)}});
                  return {};
                }});
  ps.push_back({"ndset.image_compose", [](Rng &rng, int size) -> Outcome {
                  const NDSet e = random_ndset(rng, size, std::min(size, 2));
                  const PLMap f = random_plmap(rng, size), g = random_plmap(rng, size);
                  if (image(compose(f, g), e) != image(f, image(g, e)))
                    return fail("(f.g)``E != f``(g``E)", {{"E", to_json(e)}, {"f", to_json(f)}, {"g", to_json(g)}});
                  return {};
                }});
  ps.push_back({"ndset.closure_union_monotone", [](Rng &rng, int size) -> Outcome {
                  const NDSet e = random_ndset(rng, size, 1), f = random_ndset(rng, size, 1);
                  const NDSet u = set_union(e, f);
                  for (int i = 0; i < 20; ++i) {
                    const Rational q = rng.coin() ? probe(rng, e) : probe(rng, f);
                    if ((e.closure_contains(q) || f.closure_contains(q)) != u.closure_contains(q))
                      return fail("closure(E ∪ F) != closure(E) ∪ closure(F)",
                                  {{"E", to_json(e)}, {"F", to_json(f)}, {"q", to_json(q)}});
                  }
                  return {};
                }});
  ps.push_back({"ndset.json_roundtrip", [](Rng &rng, int size) -> Outcome {
                  const NDSet e = random_ndset(rng, size, std::min(size, 2));
                  const Json j = to_json(e);
                  if (ndset_from_json(Json::parse(j.dump())) != e)
                    return fail("serialization round trip", {{"E", j}});
                  return {};
                }});
  ps.push_back({"ndset.gap_soundness",
                [](Rng &rng, int size) -> Outcome {
                  const NDSet e = random_ndset(rng, size, std::min(size, 2));
                  const Interval iv = random_interval(rng);
                  const Interval j = find_gap(e, iv);
                  if (!j.bounded() || !iv.contains_closed(j.lower().value, j.upper().value))
                    return fail("[a, b] not inside I", {{"E", to_json(e)}, {"I", to_json(iv)}, {"J", to_json(j)}});
                  const ClosedInterval closed(j.lower().value, j.upper().value);
                  if (auto hit = scan_closure(e, closed, 128, Exec::Serial))
                    return fail("scan found a closure point in [a, b]",
                                {{"E", to_json(e)}, {"I", to_json(iv)}, {"J", to_json(j)}, {"hit", to_json(*hit)}});
                  return {};
                },
                4});
  ps.push_back({"ndset.subset_sampled", [](Rng &rng, int size) -> Outcome {
                  // F ⊆ closure(E) when F is drawn from E's points, tail terms and limits.
                  const NDSet e = random_ndset(rng, size, std::min(size, 2));
                  std::vector<Rational> pts;
                  for (int i = 0; i < size; ++i)
                    if (!e.empty())
                      pts.push_back(probe(rng, e));
                  std::vector<Rational> in_closure;
                  for (auto &p : pts)
                    if (e.closure_contains(p))
                      in_closure.push_back(p);
                  const NDSet f = NDSet::of_points(in_closure);
                  const SubsetResult r = subset_of_closure(f, e);
                  if (r.verdict != Verdict::Yes)
                    return fail("points of closure(E) reported outside it", {{"E", to_json(e)}, {"F", to_json(f)}});
                  const Rational q = random_rational(rng, 24, 8);
                  const SubsetResult r2 = subset_of_closure(NDSet::of_points({q}), e);
                  if ((r2.verdict == Verdict::Yes) != e.closure_contains(q))
                    return fail("subset_of_closure disagrees with closure_contains",
                                {{"E", to_json(e)}, {"q", to_json(q)}});
                  return {};
                }});

  // ---- shift construction
  ps.push_back({"shift.random_stream_verifies",
                [](Rng &rng, int size) -> Outcome {
                  EStream s;
                  for (int i = 0; i < size; ++i)
                    s.increments.push_back(rng.below(3) == 0 ? random_ndset(rng, 2, 1) : random_ndset(rng, 2, 0));
                  const long steps = size + 1;
                  const ShiftTrace tr = run_shift_construction(s, steps);
                  const Report rep = verify_shift_trace(tr, s, Exec::Serial);
                  if (!rep.passed()) {
                    const Check c = *rep.first_failure();
                    return fail("verify_shift_trace failed", {{"stream", to_json(s)},
                                                              {"N", steps},
                                                              {"condition", c.condition},
                                                              {"step", c.step},
                                                              {"detail", c.detail}});
                  }
                  const NDSet w = witness_subgroup(tr);
                  for (int i = 0; i < 10; ++i) {
                    const Interval iv = random_interval(rng);
                    const Interval j = find_gap(w, iv);
                    if (scan_closure(w, ClosedInterval(j.lower().value, j.upper().value), 32, Exec::Serial))
                      return fail("witness union meets a returned gap", {{"stream", to_json(s)}, {"I", to_json(iv)}});
                  }
                  ShiftProblem p;
                  for (long n = 0; n <= steps; ++n)
                    p.groups.push_back(fix(s.prefix(static_cast<std::size_t>(n))));
                  for (const auto &st : tr.steps)
                    p.witness.push_back(st.pi);
                  p.candidate = w;
                  const Report wr = check_shift_witness(p, {1, 20, Exec::Serial});
                  if (!wr.passed())
                    return fail("shift witness check failed",
                                {{"stream", to_json(s)}, {"condition", wr.first_failure()->condition}});
                  return {};
                },
                10});

  // ---- hfa action
  ps.push_back({"hfa.act_identity", [](Rng &rng, int size) -> Outcome {
                  const HFAValue x = random_hfa(rng, size);
                  if (act(PLMap::identity(), x) != x)
                    return fail("act(id, x) != x", {{"x", to_json(x)}});
                  return {};
                }});
  ps.push_back({"hfa.act_compose", [](Rng &rng, int size) -> Outcome {
                  const HFAValue x = random_hfa(rng, size);
                  const PLMap f = random_plmap(rng, size), g = random_plmap(rng, size);
                  if (act(f, act(g, x)) != act(compose(f, g), x))
                    return fail("act(f, act(g, x)) != act(f.g, x)",
                                {{"x", to_json(x)}, {"f", to_json(f)}, {"g", to_json(g)}});
                  return {};
                }});
  ps.push_back({"hfa.support_sufficiency", [](Rng &rng, int size) -> Outcome {
                  const HFAValue x = random_hfa(rng, size);
                  const PLMap f = random_fix_element(rng, atoms_support(x));
                  if (fix_violation(f, atoms_support(x)))
                    return fail("sampled element of Fix(supp x) moves supp x", {{"x", to_json(x)}, {"f", to_json(f)}});
                  if (!in_sym(f, x))
                    return fail("f fixes supp x but not x", {{"x", to_json(x)}, {"f", to_json(f)}});
                  return {};
                }});
  ps.push_back({"hfa.conjugation", [](Rng &rng, int size) -> Outcome {
                  const HFAValue x = random_hfa(rng, size);
                  const PLMap pi = random_plmap(rng, size);
                  const PLMap f = rng.coin() ? random_plmap(rng, size) : random_fix_element(rng, atoms_support(act(pi, x)));
                  if (in_sym(f, act(pi, x)) != in_sym(compose(invert(pi), compose(f, pi)), x))
                    return fail("sym(pi x) != pi sym(x) pi^-1",
                                {{"x", to_json(x)}, {"pi", to_json(pi)}, {"f", to_json(f)}});
                  return {};
                }});
  ps.push_back({"hfa.extensionality", [](Rng &rng, int size) -> Outcome {
                  const HFAValue a = random_hfa(rng, size), b = random_hfa(rng, size);
                  if (HFAValue::set({a, a}) != HFAValue::set({a}) || HFAValue::set({a, b}) != HFAValue::set({b, a}))
                    return fail("set is not extensional", {{"a", to_json(a)}, {"b", to_json(b)}});
                  if (a != b && HFAValue::seq({a, b}) == HFAValue::seq({b, a}))
                    return fail("sequence ignores order", {{"a", to_json(a)}, {"b", to_json(b)}});
                  if (hfa_from_json(Json::parse(to_json(a).dump())) != a)
                    return fail("serialization round trip", {{"a", to_json(a)}});
                  return {};
                }});

  // ---- subgroup calculus
  ps.push_back({"subgroup.member_normalize", [](Rng &rng, int size) -> Outcome {
                  const SubgroupTerm h = random_term(rng, std::min(size, 3));
                  const PLMap f = rng.coin() ? random_plmap(rng, size) : random_fix_element(rng, fix_generator(h));
                  if (member(h, f) != member(normalize(h), f))
                    return fail("member(H, f) != member(normalize(H), f)", {{"H", to_json(h)}, {"f", to_json(f)}});
                  return {};
                }});
  ps.push_back({"subgroup.conj_coherence", [](Rng &rng, int size) -> Outcome {
                  const NDSet e = random_ndset(rng, size, 1);
                  const PLMap pi = random_plmap(rng, size);
                  const PLMap f = rng.coin() ? random_plmap(rng, size) : random_fix_element(rng, image(pi, e));
                  const bool by_def = member(fix(e), compose(invert(pi), compose(f, pi)));
                  if (member(conj(pi, fix(e)), f) != by_def || member(fix(image(pi, e)), f) != by_def)
                    return fail("conjugation routes disagree", {{"E", to_json(e)}, {"pi", to_json(pi)}, {"f", to_json(f)}});
                  return {};
                }});
  ps.push_back({"subgroup.decreasing_fix", [](Rng &rng, int size) -> Outcome {
                  const NDSet e = random_ndset(rng, size, 1);
                  const NDSet bigger = set_union(e, random_ndset(rng, size, 1));
                  if (fix_leq(bigger, e).verdict != Verdict::Yes)
                    return fail("Fix(E ∪ D) not below Fix(E)", {{"E", to_json(e)}, {"E2", to_json(bigger)}});
                  const NDSet other = random_ndset(rng, size, 1);
                  const SubsetResult r = fix_leq(other, e);
                  if (r.verdict == Verdict::Unknown)
                    return {};
                  for (int i = 0; i < 10; ++i) {
                    const PLMap f = random_fix_element(rng, other);
                    if (r.verdict == Verdict::Yes && fix_violation(f, e))
                      return fail("fix_leq said yes but a sample moves E",
                                  {{"E", to_json(e)}, {"E2", to_json(other)}, {"f", to_json(f)}});
                  }
                  return {};
                }});
  ps.push_back({"subgroup.off_closure_movable", [](Rng &rng, int size) -> Outcome {
                  // Converse of the closure criterion: a point outside closure(E)
                  // is moved by some element of Fix(E).
                  const NDSet e = random_ndset(rng, size, std::min(size, 2));
                  const Rational q = random_rational(rng, 24, 8);
                  if (e.closure_contains(q))
                    return {};
                  const auto l = e.closure_max_below(q);
                  const auto r = e.closure_min_above(q);
                  const Rational lo = l ? midpoint(*l, q) : q - Rational(1);
                  const Rational hi = r ? midpoint(q, *r) : q + Rational(1);
                  const PLMap f = PLMap::supported_on({{lo, lo}, {q, midpoint(q, hi)}, {hi, hi}});
                  if (fix_violation(f, e) || f(q) == q)
                    return fail("no element of Fix(E) moves q", {{"E", to_json(e)}, {"q", to_json(q)}});
                  if (fix_leq(e, NDSet::of_points({q})).verdict == Verdict::Yes)
                    return fail("fix_leq claims Fix(E) fixes q", {{"E", to_json(e)}, {"q", to_json(q)}});
                  return {};
                }});
  ps.push_back({"subgroup.essential_generators", [](Rng &rng, int size) -> Outcome {
                  const HFAValue x = random_hfa(rng, size);
                  const PLMap f = random_fix_element(rng, atoms_support(x), size);
                  if (member(fix(atoms_support(x)), f) && !member(stab(x), f))
                    return fail("Fix(supp x) not inside Stab(x)", {{"x", to_json(x)}, {"f", to_json(f)}});
                  return {};
                }});

  // ---- dc machinery
  ps.push_back({"dc.certificate_claims",
                [](Rng &rng, int size) -> Outcome {
                  const int len = size + 2;
                  const auto xs = distinct_atoms(rng, len);
                  const PLMap tau = random_plmap(rng, size);
                  BranchCertificate cert;
                  cert.x = xs;
                  for (const auto &x : xs)
                    cert.t.push_back(act(tau, x));
                  std::vector<SubgroupTerm> hs{full_group()};
                  for (int n = 0; n < len; ++n) {
                    const HFAValue tp = HFAValue::seq({cert.t.begin(), cert.t.begin() + n + 1});
                    cert.tau.push_back(compose(random_fix_element(rng, atoms_support(tp)), tau));
                    hs.push_back(fix(atoms_support(HFAValue::seq({xs.begin(), xs.begin() + n + 1}))));
                  }
                  const ShiftsFromBranch r = shifts_from_branch(cert, hs, {1, 20, Exec::Serial});
                  if (!r.report.passed()) {
                    const Check c = *r.report.first_failure();
                    CertificateFile file{cert, hs, std::nullopt};
                    return fail("certificate claims failed",
                                {{"certificate", to_json(file)}, {"condition", c.condition}, {"step", c.step}});
                  }
                  return {};
                },
                4});
  ps.push_back({"dc.chain_composite",
                [](Rng &rng, int size) -> Outcome {
                  TreeInstance inst;
                  inst.base = distinct_atoms(rng, size + 2);
                  inst.base_support = random_ndset(rng, size, rng.below(3) == 0 ? 1 : 0);
                  std::vector<HFAValue> s;
                  for (std::size_t k = 0; k <= static_cast<std::size_t>(size); ++k)
                    s.push_back(inst.node(k));
                  const EStream stream = support_stream(inst.base_support, s);
                  const ShiftTrace tr = run_shift_construction(stream, static_cast<long>(s.size()));
                  std::vector<PLMap> pis;
                  for (const auto &st : tr.steps)
                    pis.push_back(st.pi);
                  const BranchResult br = branch_from_shifts(inst, s, pis);
                  if (!br.report.passed()) {
                    const Check c = *br.report.first_failure();
                    return fail("branch_from_shifts failed", {{"baseSupport", to_json(inst.base_support)},
                                                              {"base", to_json(HFAValue::seq(inst.base))},
                                                              {"condition", c.condition},
                                                              {"step", c.step}});
                  }
                  return {};
                },
                10});
  ps.push_back({"dc.orbit_witness", [](Rng &rng, int size) -> Outcome {
                  TreeInstance inst;
                  inst.base = distinct_atoms(rng, size + 1);
                  inst.base_support = random_ndset(rng, size, rng.below(3) == 0 ? 1 : 0);
                  const HFAValue node = inst.node(inst.base.size());
                  const HFAValue cand = rng.coin() ? act(random_fix_element(rng, inst.base_support), node)
                                                   : act(random_plmap(rng, size), node);
                  const bool in_tree = orbit_member(inst, cand);
                  const auto w = orbit_witness(inst, cand);
                  if (in_tree != w.has_value())
                    return fail("orbit_member and orbit_witness disagree",
                                {{"baseSupport", to_json(inst.base_support)}, {"candidate", to_json(cand)}});
                  if (w && (act(*w, node) != cand || fix_violation(*w, inst.base_support)))
                    return fail("orbit witness is wrong",
                                {{"baseSupport", to_json(inst.base_support)}, {"candidate", to_json(cand)}});
                  return {};
                }});
  ps.push_back({"dc.essential_shift",
                [](Rng &rng, int size) -> Outcome {
                  const auto atoms = distinct_atoms(rng, size + 1);
                  EStream stream;
                  for (const auto &a : atoms)
                    stream.increments.push_back(atoms_support(a));
                  const ShiftTrace tr = run_shift_construction(stream, static_cast<long>(atoms.size()));
                  std::vector<PLMap> pis;
                  for (const auto &st : tr.steps)
                    pis.push_back(st.pi);
                  std::vector<HFAValue> xs;
                  for (std::size_t n = 0; n < atoms.size(); ++n)
                    xs.push_back(HFAValue::seq({atoms.begin(), atoms.begin() + static_cast<long>(n) + 1}));
                  const EssentialShift es = essential_shift(xs, pis, {1, 20, Exec::Serial});
                  if (!es.report.passed())
                    return fail("essential_shift assertion failed",
                                {{"atoms", to_json(HFAValue::seq(atoms))}, {"condition", es.report.first_failure()->condition}});
                  return {};
                },
                10});
  return ps;
}

std::uint64_t name_hash(const std::string &s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Outcome run_case(const Property &p, std::uint64_t seed, int size) {
  Rng rng(seed);
  try {
    return p.run(rng, size);
  } catch (const std::exception &e) {
    Json j;
    j["violation"] = std::string("exception: ") + e.what();
    j["size"] = size;
    return j.dump();
  }
}

} // namespace

bool PropsSummary::passed() const { return total_failures() == 0; }

std::size_t PropsSummary::total_cases() const {
  std::size_t n = 0;
  for (const auto &r : results)
    n += r.cases;
  return n;
}

std::size_t PropsSummary::total_failures() const {
  std::size_t n = 0;
  for (const auto &r : results)
    n += r.failures;
  return n;
}

std::vector<std::string> property_names() {
  std::vector<std::string> out;
  for (const auto &p : all_properties())
    out.emplace_back(p.name);
  return out;
}

PropsSummary run_properties(const PropsOptions &opts) {
  PropsSummary summary;
  for (const auto &p : all_properties()) {
    const std::string name = p.name;
    if (!opts.filter.empty() && name.rfind(opts.filter, 0) != 0)
      continue;
    const std::size_t cases = (opts.cases + p.cost - 1) / p.cost;
    const std::uint64_t base = opts.seed ^ name_hash(name);
    const auto outcomes = map_indices<Outcome>(opts.exec, cases, [&](std::size_t i) {
      return run_case(p, derive_seed(base, i), 1 + static_cast<int>(i % 4));
    });

    PropertyResult r{name, cases, 0, std::nullopt, 0};
    for (std::size_t i = 0; i < cases; ++i) {
      if (!outcomes[i])
        continue;
      ++r.failures;
      int size = 1 + static_cast<int>(i % 4);
      Outcome best = outcomes[i];
      for (int smaller = 1; smaller < size; ++smaller)
        if (auto o = run_case(p, derive_seed(base, i), smaller)) {
          best = o;
          size = smaller;
          break;
        }
      if (!r.counterexample || size < r.minimized_size) {
        r.counterexample = best;
        r.minimized_size = size;
      }
    }
    summary.results.push_back(std::move(r));
  }
  return summary;
}

} // namespace shiftdc
