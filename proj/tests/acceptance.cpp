// Acceptance criteria 1-9: one PASS/FAIL line each; exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "shiftdc/dc.hpp"
#include "shiftdc/enumeration.hpp"
#include "shiftdc/json_io.hpp"
#include "shiftdc/sampling.hpp"
#include "shiftdc/scan.hpp"
#include "shiftdc/shift.hpp"
#include "shiftdc/subgroup.hpp"

using namespace shiftdc;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string &what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

Rational r(long n, long d = 1) { return Rational(n, d); }

std::string data(const std::string &name) { return std::string(SHIFTDC_DATA_DIR) + "/" + name; }

// Evaluation straight from the breakpoint table.
Rational eval(const PLMap &f, const Rational &x) {
  const auto &b = f.breakpoints();
  if (x <= b.front().in)
    return b.front().out + f.left_slope() * (x - b.front().in);
  if (x >= b.back().in)
    return b.back().out + f.right_slope() * (x - b.back().in);
  std::size_t i = 0;
  while (b[i + 1].in < x)
    ++i;
  return b[i].out + (b[i + 1].out - b[i].out) * (x - b[i].in) / (b[i + 1].in - b[i].in);
}

// ---------------------------------------------------------------- criterion 1
Outcome group_laws() {
  Outcome out;
  Rng rng(derive_seed(1, 1));
  for (int i = 0; i < 1000 && out.ok; ++i) {
    const PLMap f = random_plmap(rng), g = random_plmap(rng), h = random_plmap(rng);
    out.require(compose(compose(f, g), h) == compose(f, compose(g, h)), "associativity, triple " + std::to_string(i));
    out.require(compose(f, invert(f)).is_identity() && compose(invert(f), f).is_identity(),
                "inverse, triple " + std::to_string(i));
    out.require(compose(f, PLMap::identity()) == f && compose(PLMap::identity(), f) == f,
                "identity, triple " + std::to_string(i));
    Rational p = random_rational(rng, 40, 12), q = random_rational(rng, 40, 12);
    if (q < p)
      std::swap(p, q);
    if (p < q)
      out.require(f(p) < f(q), "order preservation, triple " + std::to_string(i));
  }
  for (int i = 0; i < 1000 && out.ok; ++i) {
    const PLMap f = random_plmap(rng), g = random_plmap(rng);
    const Rational q = random_rational(rng, 40, 12);
    out.require(compose(f, g)(q) == eval(f, eval(g, q)), "compose/apply coherence, case " + std::to_string(i));
  }
  if (out.ok)
    out.detail = "1000 triples, 1000 (f,g,q)";
  return out;
}

// ------------------------------------------------------------ criteria 2 and 3

// Terms of a tail at distance >= d from its limit, plus one more.
std::vector<Rational> terms_down_to(const GeomTail &t, const Rational &d) {
  std::vector<Rational> out;
  Rational off = t.coeff * t.ratio.pow(t.head_drop);
  for (;;) {
    out.push_back(t.limit + off);
    if (off.abs() < d)
      break;
    off *= t.ratio;
  }
  return out;
}

// Conditions (1) and strengthened (2) re-derived without the library's
// closure_meets / fix_violation.
Outcome check_conditions(const ShiftTrace &tr, const EStream &stream) {
  Outcome out;
  const std::size_t count = tr.steps.size();
  std::vector<NDSet> shifted;
  PLMap sigma = PLMap::identity();
  for (std::size_t n = 0; n < count; ++n) {
    shifted.push_back(image(sigma, stream.prefix(n)));
    sigma = compose(tr.steps[n].pi, sigma);
  }
  for (std::size_t n = 0; n < count && out.ok; ++n) {
    const PLMap &pi = tr.steps[n].pi;
    const std::string at = " at step " + std::to_string(n);
    out.require(shifted[n] == tr.steps[n].shifted, "recorded shifted set" + at);
    for (const auto &p : shifted[n].points())
      out.require(eval(pi, p) == p, "pi_n moves " + p.str() + at);
    for (const auto &t : shifted[n].tails()) {
      out.require(eval(pi, t.limit) == t.limit, "pi_n moves a tail limit" + at);
      for (const auto &q : terms_down_to(t, Rational(1, 1L << 40)))
        out.require(eval(pi, q) == q, "pi_n moves tail term " + q.str() + at);
    }
    for (std::size_t k = 0; k < count; ++k) {
      const Interval &j = tr.steps[k].J;
      out.require(j.bounded() && tr.steps[k].I.contains_closed(j.lower().value, j.upper().value),
                  "[a_k, b_k] not inside I_k, k = " + std::to_string(k));
      if (!out.ok)
        break;
      const ClosedInterval c(j.lower().value, j.upper().value);
      const std::string where = " in [a_" + std::to_string(k) + ", b_" + std::to_string(k) + "]" + at;
      for (const auto &p : shifted[n].points())
        out.require(!c.contains(p), "point " + p.str() + where);
      for (const auto &t : shifted[n].tails()) {
        out.require(!c.contains(t.limit), "tail limit" + where);
        const Rational d = t.limit < c.lo ? c.lo - t.limit : (t.limit > c.hi ? t.limit - c.hi : Rational(0));
        if (d.sign() > 0)
          for (const auto &q : terms_down_to(t, d))
            out.require(!c.contains(q), "tail term " + q.str() + where);
      }
      out.require(!scan_closure(shifted[n], c, 32).has_value(), "scan hit" + where);
    }
  }
  return out;
}

Outcome witness_gaps(const ShiftTrace &tr, std::uint64_t seed) {
  Outcome out;
  const NDSet w = witness_subgroup(tr);
  Rng rng(seed);
  for (int i = 0; i < 100 && out.ok; ++i) {
    const Interval iv = random_interval(rng);
    const Interval j = find_gap(w, iv);
    out.require(j.bounded() && iv.contains_closed(j.lower().value, j.upper().value), "gap outside I");
    if (out.ok)
      out.require(!scan_closure(w, ClosedInterval(j.lower().value, j.upper().value), 64).has_value(),
                  "witness union meets a returned gap");
  }
  return out;
}

Outcome construction(const std::string &file, long steps, bool dense) {
  Outcome out;
  const EStream stream = stream_from_json(read_json_file(data(file)));
  if (dense) {
    out.require(stream.increments.size() == 21, "dense stream must have 21 increments");
    for (std::size_t i = 0; i < stream.increments.size() && out.ok; ++i)
      out.require(stream.increments[i] == NDSet::of_points({rational_at(i)}),
                  "increment " + std::to_string(i) + " is not the enumeration's singleton");
  } else {
    out.require(stream.increments.size() == 11 &&
                    stream.increments.front() == NDSet::of_tail(GeomTail(r(0), r(1), r(1, 2))),
                "stream must start with GeomTail(0, 1, 1/2) followed by 10 singletons");
  }
  if (!out.ok)
    return out;
  const ShiftTrace tr = run_shift_construction(stream, steps);
  out.require(static_cast<long>(tr.steps.size()) == steps + 1, "wrong number of steps");
  const Report rep = verify_shift_trace(tr, stream);
  for (const auto &c : rep.checks())
    out.require(c.status == Status::Pass, "verifier: " + c.condition + " step " + std::to_string(c.step) + " " + c.detail);
  if (!out.ok)
    return out;
  Outcome own = check_conditions(tr, stream);
  if (!own.ok)
    return own;
  Outcome gaps = witness_gaps(tr, derive_seed(2, static_cast<std::uint64_t>(steps)));
  if (!gaps.ok)
    return gaps;
  out.detail = std::to_string(rep.checks().size()) + " verifier checks, cond1 and cond2 re-derived for all k <= " +
               std::to_string(steps) + ", 100 gaps in the witness union";
  return out;
}

// ---------------------------------------------------------------- criterion 4
Outcome shift_witness_prefix() {
  Outcome out;
  const EStream stream = stream_from_json(read_json_file(data("dense-singletons.json")));
  const long big_n = 20;
  const ShiftTrace tr = run_shift_construction(stream, big_n);
  ShiftProblem p;
  for (long n = 0; n <= big_n; ++n)
    p.groups.push_back(fix(stream.prefix(static_cast<std::size_t>(n))));
  for (const auto &st : tr.steps)
    p.witness.push_back(st.pi);
  p.candidate = witness_subgroup(tr);
  const Report base = check_shift_witness(p);
  for (const auto &c : base.checks())
    out.require(c.status == Status::Pass, "unmutated: " + c.condition + " step " + std::to_string(c.step));
  if (!out.ok)
    return out;

  // Every breakpoint input of every map, and every point of sigma_n``E_N.
  std::vector<Rational> landmarks;
  const auto sigma = telescope(p.witness);
  for (const auto &st : tr.steps) {
    for (const auto &b : st.pi.breakpoints())
      landmarks.push_back(b.in);
    for (const auto &b : st.sigma_next.breakpoints())
      landmarks.push_back(b.in);
  }
  for (long n = 0; n <= big_n; ++n) {
    const NDSet img = image(sigma[static_cast<std::size_t>(n)], stream.prefix(static_cast<std::size_t>(big_n)));
    landmarks.insert(landmarks.end(), img.points().begin(), img.points().end());
  }

  for (long n = 0; n <= big_n && out.ok; ++n) {
    const auto idx = static_cast<std::size_t>(n);
    // A small bump moving one point q of sigma_n``E_n and nothing else of interest.
    const Rational q = tr.steps[idx].shifted.points().front();
    Rational delta(1);
    for (const auto &l : landmarks)
      if (l != q)
        delta = min(delta, (l - q).abs() / Rational(4));
    const PLMap bump = PLMap::supported_on({{q - delta, q - delta}, {q, q + delta / Rational(2)}, {q + delta, q + delta}});
    ShiftProblem m = p;
    m.witness[idx] = compose(p.witness[idx], bump);
    out.require(m.witness[idx](q) != q, "mutation did not move q at step " + std::to_string(n));
    const Report rep = check_shift_witness(m);
    const auto fails = rep.failures_of("pi_in_K");
    out.require(fails.size() == 1 && fails.front().step == n,
                "mutating pi_" + std::to_string(n) + " failed " + std::to_string(fails.size()) +
                    " membership checks" + (fails.empty() ? "" : ", first at step " + std::to_string(fails.front().step)));
  }
  if (out.ok)
    out.detail = "all-pass unmutated; each of the 21 single mutations fails exactly its own step";
  return out;
}

// ---------------------------------------------------------------- criterion 5
Outcome conjugation() {
  Outcome out;
  Rng rng(derive_seed(5, 0));
  int positives = 0;
  for (int i = 0; i < 500 && out.ok; ++i) {
    const PLMap pi = random_plmap(rng);
    const HFAValue x = random_hfa(rng);
    const PLMap f = i % 2 == 0 ? random_fix_element(rng, atoms_support(act(pi, x))) : random_plmap(rng);
    const bool a = member(conj(pi, stab(x)), f);
    const bool b = in_sym(compose(invert(pi), compose(f, pi)), x);
    const bool c = in_sym(f, act(pi, x));
    const bool d = member(normalize(conj(pi, stab(x))), f);
    out.require(a == b && b == c && c == d, "routes disagree on case " + std::to_string(i));
    positives += a ? 1 : 0;
  }
  if (!out.ok)
    return out;

  const std::vector<Rational> atoms{r(0), r(1), r(-1), r(1, 2), r(3)};
  std::vector<HFAValue> items, xs;
  EStream stream;
  for (const auto &a : atoms) {
    items.push_back(HFAValue::atom(a));
    xs.push_back(HFAValue::seq(items));
    stream.increments.push_back(NDSet::of_points({a}));
  }
  const ShiftTrace tr = run_shift_construction(stream, 4);
  out.require(verify_shift_trace(tr, stream).passed(), "witness trace does not verify");
  std::vector<PLMap> pis;
  ShiftProblem prob;
  for (std::size_t n = 0; n < xs.size(); ++n)
    prob.groups.push_back(fix(atoms_support(xs[n])));
  for (const auto &st : tr.steps)
    pis.push_back(st.pi);
  prob.witness = pis;
  prob.candidate = witness_subgroup(tr);
  out.require(check_shift_witness(prob).passed(), "witness is not a shift witness for Fix(supp x_n)");
  // Both the prefix sequences and the bare atoms, against the same witness.
  std::size_t assertions = 0;
  for (const auto &list : {xs, items}) {
    const EssentialShift es = essential_shift(list, pis);
    for (const auto &c : es.report.checks())
      out.require(c.status == Status::Pass, "essential_shift: " + c.condition + " step " + std::to_string(c.step));
    assertions += es.report.checks().size();
  }
  if (out.ok)
    out.detail = "500 cases agree on four routes (" + std::to_string(positives) + " members); essential_shift " +
                 std::to_string(assertions) + " assertions pass";
  return out;
}

// ---------------------------------------------------------------- criterion 6
Outcome one_implies_two() {
  Outcome out;
  TreeInstance inst;
  for (long i = 1; i <= 12; ++i)
    inst.base.push_back(HFAValue::atom(r(i)));
  inst.base_support = NDSet::of_points({r(0)});
  std::vector<HFAValue> s;
  for (std::size_t n = 0; n <= 10; ++n)
    s.push_back(inst.node(n));
  const EStream stream = support_stream(inst.base_support, s);
  const ShiftTrace tr = run_shift_construction(stream, 11);
  out.require(verify_shift_trace(tr, stream).passed(), "shift trace over the induced supports does not verify");
  std::vector<PLMap> pis;
  for (const auto &st : tr.steps)
    pis.push_back(st.pi);
  const BranchResult br = branch_from_shifts(inst, s, pis);
  std::size_t chain = 0, fixed = 0, orbit = 0;
  for (const auto &c : br.report.checks()) {
    out.require(c.status == Status::Pass, c.condition + " fails at n = " + std::to_string(c.step));
    chain += c.condition == "chain";
    fixed += c.condition == "fixed";
    orbit += c.condition == "orbit";
  }
  out.require(chain == 10 && fixed == 11 && orbit == 11, "unexpected number of assertions");
  // Orbit membership realized by explicit maps fixing the support.
  for (std::size_t n = 0; n < br.t.size() && out.ok; ++n) {
    const auto w = orbit_witness(inst, br.t[n]);
    out.require(w && act(*w, inst.node(n)) == br.t[n] && !fix_violation(*w, inst.base_support),
                "no explicit orbit map for t_" + std::to_string(n));
  }
  if (out.ok)
    out.detail = "chain x10, fixed-point x11, orbit x11 for n <= 10";
  return out;
}

// ---------------------------------------------------------------- criterion 7
Outcome two_implies_one() {
  Outcome out;
  const TheoremInstance inst = theorem_from_json(read_json_file(data("theorem-translation.json")));
  const auto &cf = inst.certificate;
  out.require(cf.cert.tau.size() == 11, "certificate must cover n = 0..10");
  SamplingOptions opts;
  opts.samples = 100;
  ShiftsFromBranch sb;
  try {
    sb = shifts_from_branch(cf.cert, cf.hs, opts);
  } catch (const TauInconsistency &e) {
    out.require(false, std::string("tau-consistency: ") + e.what());
    return out;
  }
  std::size_t tel = 0, c1 = 0, c2 = 0;
  for (const auto &c : sb.report.checks()) {
    out.require(c.status == Status::Pass, c.condition + " fails at n = " + std::to_string(c.step));
    tel += c.condition == "telescoping";
    c1 += c.condition == "claim1";
    c2 += c.condition == "claim2";
  }
  out.require(tel == 11 && c1 == 11 && c2 >= 11, "unexpected number of checks");
  const PLMap c = cf.cert.tau.front();
  out.require(sb.pis.front() == c, "pi_0 != tau_0");
  for (std::size_t n = 1; n < sb.pis.size(); ++n)
    out.require(sb.pis[n].is_identity(), "pi_" + std::to_string(n) + " is not the identity");
  if (out.ok)
    out.detail = "tau-consistent; telescoping x11, claim 1 x11, claim 2 x" + std::to_string(c2) +
                 " levels at 100 samples, 0 failures";
  return out;
}

// ---------------------------------------------------------------- criterion 8
Outcome gap_oracle() {
  Outcome out;
  Rng rng(derive_seed(8, 0));
  std::size_t scanned = 0;
  for (int i = 0; i < 200 && out.ok; ++i) {
    const NDSet e = random_ndset(rng);
    const Interval iv = random_interval(rng);
    const Interval j = find_gap(e, iv);
    out.require(j.bounded() && iv.contains_closed(j.lower().value, j.upper().value), "J not inside I, case " + std::to_string(i));
    if (!out.ok)
      break;
    const ClosedInterval c(j.lower().value, j.upper().value);
    scanned += scan_size(c, 128);
    if (const auto hit = scan_closure(e, c, 128))
      out.require(false, "closure point " + hit->str() + " inside find_gap output, case " + std::to_string(i));
  }
  if (out.ok)
    out.detail = "200 cases, " + std::to_string(scanned) + " rationals scanned";
  return out;
}

// ---------------------------------------------------------------- criterion 9
std::string slurp(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism() {
  Outcome out;
  const fs::path work = fs::temp_directory_path() / "shiftdc-acceptance";
  fs::create_directories(work);
  struct Golden {
    const char *spec;
    long steps;
    const char *golden;
  };
  const Golden cases[] = {{"empty.json", 3, "empty-N3.json"},
                          {"dense-singletons.json", 10, "dense-singletons-N10.json"},
                          {"dense-singletons.json", 20, "dense-singletons-N20.json"},
                          {"geomtail.json", 10, "geomtail-N10.json"}};
  int runs = 0;
  for (const auto &g : cases) {
    const std::string golden = slurp(fs::path(SHIFTDC_GOLDEN_DIR) / g.golden);
    out.require(!golden.empty(), std::string("missing golden ") + g.golden);
    for (int threads : {1, 4})
      for (int rep = 0; rep < 2; ++rep) {
        const fs::path trace = work / (std::string(g.golden) + "." + std::to_string(threads) + "." + std::to_string(rep));
        const std::string cmd = std::string(SHIFTDC_CLI) + " construct --stream " + data(g.spec) + " --steps " +
                                std::to_string(g.steps) + " --threads " + std::to_string(threads) + " --out " +
                                trace.string() + " > /dev/null";
        out.require(std::system(cmd.c_str()) == 0, "construct exited nonzero for " + std::string(g.golden));
        out.require(slurp(trace) == golden, std::string(g.golden) + " differs at threads=" + std::to_string(threads));
        ++runs;
      }
  }
  if (out.ok)
    out.detail = std::to_string(runs) + " runs (4 specs x 2 runs x threads 1,4) byte-identical to golden traces";
  return out;
}

} // namespace

int main() {
  struct Criterion {
    int id;
    const char *name;
    double budget;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "group-law suite", 5, group_laws},
      {2, "construction, dense-singleton stream, N = 20", 30, [] { return construction("dense-singletons.json", 20, true); }},
      {3, "construction, GeomTail start + 10 singletons, N = 10", 30, [] { return construction("geomtail.json", 10, false); }},
      {4, "shift-witness prefix check and single mutations", 0, shift_witness_prefix},
      {5, "conjugation identity and essential_shift", 0, conjugation},
      {6, "(1)=>(2) composite on the counting tree", 0, one_implies_two},
      {7, "(2)=>(1) translation certificate", 0, two_implies_one},
      {8, "find_gap against a denominator <= 128 scan", 0, gap_oracle},
      {9, "golden traces byte-exact across runs and thread counts", 0, determinism},
  };
  int failed = 0;
  for (const auto &c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[64];
    if (c.budget > 0)
      std::snprintf(timing, sizeof timing, "%.2f s, expected < %.0f s", secs, c.budget);
    else
      std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " -- " << o.detail << " ("
              << timing << ")" << std::endl;
    failed += o.ok ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all 9 criteria pass" : std::to_string(failed) + " criteria fail") << std::endl;
  return failed == 0 ? 0 : 1;
}
