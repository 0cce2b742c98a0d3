#include <doctest.h>

#include "shiftdc/dc.hpp"
#include "shiftdc/sampling.hpp"

using namespace shiftdc;

namespace {

Rational r(long n, long d = 1) { return Rational(n, d); }
HFAValue atom(long n, long d = 1) { return HFAValue::atom(r(n, d)); }

HFAValue seq_of(std::initializer_list<Rational> qs) {
  std::vector<HFAValue> items;
  for (const auto &q : qs)
    items.push_back(HFAValue::atom(q));
  return HFAValue::seq(std::move(items));
}

// Tree over base 1, 2, ..., 12 with support {0}.
TreeInstance counting_tree() {
  TreeInstance inst;
  for (long i = 1; i <= 12; ++i)
    inst.base.push_back(atom(i));
  inst.base_support = NDSet::of_points({r(0)});
  return inst;
}

std::vector<PLMap> shifts_for(const TreeInstance &inst, const std::vector<HFAValue> &s) {
  const ShiftTrace tr = run_shift_construction(support_stream(inst.base_support, s), static_cast<long>(s.size()));
  std::vector<PLMap> pis;
  for (const auto &st : tr.steps)
    pis.push_back(st.pi);
  return pis;
}

} // namespace

TEST_CASE("orbit_member") {
  TreeInstance inst;
  inst.base = {atom(1), atom(3), atom(-2)};
  inst.base_support = NDSet::of_points({r(2)});
  CHECK(orbit_member(inst, inst.node(3)));
  CHECK(orbit_member(inst, inst.node(0)));
  CHECK(orbit_member(inst, seq_of({r(3, 2), r(5), r(-7)})));
  // Permuted order pattern.
  CHECK_FALSE(orbit_member(inst, seq_of({r(3), r(1), r(-2)})));
  // 1 crosses the support point 2: a monotone map fixing 2 would need
  // f(1) < f(2) = 2, but the candidate asks for f(1) = 5/2.
  CHECK_FALSE(orbit_member(inst, seq_of({r(5, 2), r(3), r(-2)})));
  // A coordinate on the support must stay put.
  TreeInstance on;
  on.base = {atom(2), atom(4)};
  on.base_support = NDSet::of_points({r(2)});
  CHECK_FALSE(orbit_member(on, seq_of({r(5, 2), r(4)})));
  CHECK(orbit_member(on, seq_of({r(2), r(7)})));
  CHECK_THROWS_AS(orbit_member(inst, HFAValue::seq({HFAValue::set({})})), std::invalid_argument);
  CHECK_THROWS_AS(orbit_member(inst, seq_of({r(1), r(2), r(3), r(4)})), std::invalid_argument);
}

TEST_CASE("orbit_witness realizes orbit membership") {
  TreeInstance inst;
  inst.base = {atom(1), atom(3), atom(-2), atom(5, 2)};
  inst.base_support = NDSet({r(2)}, {GeomTail(r(-1), r(1, 2), r(1, 3))});
  const HFAValue cand = seq_of({r(3, 2), r(5), r(-7), r(4)});
  REQUIRE(orbit_member(inst, cand));
  const auto w = orbit_witness(inst, cand);
  REQUIRE(w.has_value());
  CHECK(act(*w, inst.node(4)) == cand);
  CHECK_FALSE(fix_violation(*w, inst.base_support).has_value());
  CHECK_FALSE(orbit_witness(inst, seq_of({r(-3, 4), r(3), r(-2), r(5, 2)})).has_value());
}

TEST_CASE("branch_from_shifts") {
  const TreeInstance inst = counting_tree();
  std::vector<HFAValue> s;
  for (std::size_t n = 0; n <= 6; ++n)
    s.push_back(inst.node(n));

  const std::vector<PLMap> ids(s.size(), PLMap::identity());
  const BranchResult same = branch_from_shifts(inst, s, ids);
  CHECK(same.t == s);
  CHECK(same.report.passed());

  const std::vector<PLMap> pis = shifts_for(inst, s);
  const BranchResult br = branch_from_shifts(inst, s, pis);
  CHECK(br.report.passed());
  for (std::size_t n = 0; n < s.size(); ++n)
    CHECK(br.t[n].size() == n);

  // Corrupting pi_2 so it moves a point of t_1.
  std::vector<PLMap> bad = pis;
  const Rational q = br.t[1].items().front().value();
  bad[2] = compose(PLMap::supported_on({{q - r(1, 100), q - r(1, 100)}, {q, q + r(1, 200)}, {q + r(1, 100), q + r(1, 100)}}),
                   bad[2]);
  const BranchResult broken = branch_from_shifts(inst, s, bad);
  const auto fixed = broken.report.failures_of("fixed");
  REQUIRE_FALSE(fixed.empty());
  CHECK((fixed.front().step == 1 || fixed.front().step == 2));
}

TEST_CASE("shifts_from_branch") {
  std::vector<HFAValue> xs;
  for (long i = 0; i < 6; ++i)
    xs.push_back(atom(i));
  std::vector<SubgroupTerm> hs{full_group()};
  for (std::size_t n = 0; n < xs.size(); ++n)
    hs.push_back(fix(atoms_support(HFAValue::seq({xs.begin(), xs.begin() + static_cast<long>(n) + 1}))));

  BranchCertificate ident{xs, xs, std::vector<PLMap>(xs.size(), PLMap::identity())};
  const ShiftsFromBranch a = shifts_from_branch(ident, hs);
  CHECK(a.report.passed());
  for (const auto &p : a.pis)
    CHECK(p.is_identity());

  const Rational c(5, 2);
  BranchCertificate shifted{xs, {}, std::vector<PLMap>(xs.size(), PLMap::translation(c))};
  for (const auto &x : xs)
    shifted.t.push_back(act(PLMap::translation(c), x));
  const ShiftsFromBranch b = shifts_from_branch(shifted, hs);
  CHECK(b.report.passed());
  CHECK(b.pis[0] == PLMap::translation(c));
  for (std::size_t n = 1; n < b.pis.size(); ++n)
    CHECK(b.pis[n].is_identity());
  CHECK(b.report.failures_of("claim2").empty());

  BranchCertificate mutated = shifted;
  mutated.t[3] = atom(100);
  try {
    shifts_from_branch(mutated, hs);
    FAIL("expected TauInconsistency");
  } catch (const TauInconsistency &e) {
    CHECK(e.index() == 3);
  }

  // A larger declared H_2 = Fix{0, 1, 10}, and tau_2 = g . tau_1 with g fixing
  // every t_i but moving tau_1(10) = 25/2: pi_2 = g is outside K_2.
  std::vector<SubgroupTerm> wide = hs;
  wide[2] = fix(NDSet::of_points({r(0), r(1), r(10)}));
  const PLMap g = PLMap::supported_on({{r(12), r(12)}, {r(25, 2), r(49, 4)}, {r(13), r(13)}});
  BranchCertificate wrong = shifted;
  for (std::size_t n = 2; n < xs.size(); ++n)
    wrong.tau[n] = compose(g, PLMap::translation(c));
  const ShiftsFromBranch w = shifts_from_branch(wrong, wide);
  const auto c1 = w.report.failures_of("claim1");
  REQUIRE(c1.size() == 1);
  CHECK(c1.front().step == 2);
}

TEST_CASE("essential_shift") {
  const std::vector<HFAValue> xs{atom(0), atom(1), atom(2)};
  const EssentialShift same = essential_shift(xs, {PLMap::identity(), PLMap::identity()});
  CHECK(same.y == xs);
  CHECK(same.report.passed());

  const EssentialShift one = essential_shift({atom(7)}, {});
  CHECK(one.y == std::vector<HFAValue>{atom(7)});

  // Witness: the construction over cumulative supports {x_0 .. x_n}.
  EStream stream;
  for (const auto &x : xs)
    stream.increments.push_back(atoms_support(x));
  const ShiftTrace tr = run_shift_construction(stream, 2);
  std::vector<PLMap> pis;
  for (const auto &st : tr.steps)
    pis.push_back(st.pi);
  const EssentialShift es = essential_shift(xs, pis);
  CHECK(es.report.passed());
  const auto sigma = telescope(pis);
  for (std::size_t n = 0; n < xs.size(); ++n)
    CHECK(es.y[n] == act(sigma[n], xs[n]));
}
