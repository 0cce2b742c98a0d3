#include "shiftdc/dc.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "shiftdc/sampling.hpp"

namespace shiftdc {

HFAValue TreeInstance::node(std::size_t n) const {
  if (n > base.size())
    throw std::out_of_range("TreeInstance::node: prefix longer than the base sequence");
  return HFAValue::seq(std::vector<HFAValue>(base.begin(), base.begin() + static_cast<long>(n)));
}

namespace {

std::vector<Rational> atom_values(const HFAValue &seq, const char *what) {
  if (seq.kind() != HFAValue::Kind::Seq)
    throw std::invalid_argument(std::string(what) + " is not a sequence");
  std::vector<Rational> out;
  for (const auto &item : seq.items()) {
    if (!item.is_atom())
      throw std::invalid_argument(std::string(what) + " contains a non-atom item");
    out.push_back(item.value());
  }
  return out;
}

// Base prefix and candidate values of equal length, or nullopt on a length mismatch.
std::optional<std::pair<std::vector<Rational>, std::vector<Rational>>> aligned(const TreeInstance &inst,
                                                                               const HFAValue &candidate) {
  std::vector<Rational> cand = atom_values(candidate, "candidate");
  if (cand.size() > inst.base.size())
    throw std::invalid_argument("orbit_member: candidate longer than the base sequence");
  std::vector<Rational> base = atom_values(inst.node(cand.size()), "base sequence");
  return std::make_pair(std::move(base), std::move(cand));
}

} // namespace

bool orbit_member(const TreeInstance &inst, const HFAValue &candidate) {
  const auto pair = aligned(inst, candidate);
  const auto &[xs, cs] = *pair;
  const std::size_t n = xs.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if ((xs[i] <=> xs[j]) != (cs[i] <=> cs[j]))
        return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (inst.base_support.closure_contains(xs[i])) {
      if (cs[i] != xs[i])
        return false;
      continue;
    }
    if (inst.base_support.closure_meets(ClosedInterval(min(xs[i], cs[i]), max(xs[i], cs[i]))))
      return false;
  }
  return true;
}

std::optional<PLMap> orbit_witness(const TreeInstance &inst, const HFAValue &candidate) {
  if (!orbit_member(inst, candidate))
    return std::nullopt;
  const auto pair = aligned(inst, candidate);
  const auto &[xs, cs] = *pair;
  const NDSet &supp = inst.base_support;

  // Pairs grouped by the gap of closure(supp) that holds them, keyed by the
  // gap's left end (nullopt for -inf).
  struct Gap {
    std::optional<Rational> left, right;
    std::vector<Breakpoint> pairs;
    bool moves = false;
  };
  std::map<std::string, Gap> gaps;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (supp.closure_contains(xs[i]))
      continue;
    const auto left = supp.closure_max_below(xs[i]);
    auto &g = gaps[left ? left->str() : "-inf"];
    g.left = left;
    g.right = supp.closure_min_above(xs[i]);
    g.pairs.push_back({xs[i], cs[i]});
    g.moves = g.moves || xs[i] != cs[i];
  }

  std::vector<Breakpoint> bps;
  for (auto &[key, g] : gaps) {
    if (!g.moves)
      continue;
    std::sort(g.pairs.begin(), g.pairs.end(), [](const auto &a, const auto &b) { return a.in < b.in; });
    g.pairs.erase(std::unique(g.pairs.begin(), g.pairs.end()), g.pairs.end());
    Rational lo = min(g.pairs.front().in, g.pairs.front().out);
    Rational hi = max(g.pairs.back().in, g.pairs.back().out);
    const Rational u = g.left ? midpoint(*g.left, lo) : lo - Rational(1);
    const Rational v = g.right ? midpoint(hi, *g.right) : hi + Rational(1);
    bps.push_back({u, u});
    bps.insert(bps.end(), g.pairs.begin(), g.pairs.end());
    bps.push_back({v, v});
  }
  if (bps.empty())
    return PLMap::identity();
  std::sort(bps.begin(), bps.end(), [](const auto &a, const auto &b) { return a.in < b.in; });
  return PLMap(std::move(bps), Rational(1), Rational(1));
}

BranchResult branch_from_shifts(const TreeInstance &inst, const std::vector<HFAValue> &s,
                                const std::vector<PLMap> &pis) {
  if (pis.size() < s.size())
    throw std::invalid_argument("branch_from_shifts: need a shift for every chain element");
  BranchResult out;
  PLMap sigma = PLMap::identity();
  for (std::size_t n = 0; n < s.size(); ++n) {
    sigma = compose(pis[n], sigma);
    out.t.push_back(act(sigma, s[n]));
  }
  for (std::size_t n = 0; n < s.size(); ++n) {
    const long step = static_cast<long>(n);
    if (n + 1 < s.size())
      out.report.add("chain", step, is_proper_prefix(out.t[n], out.t[n + 1]),
                     "t_" + std::to_string(n) + " is not a proper prefix of t_" + std::to_string(n + 1));
    if (n + 1 < pis.size())
      out.report.add("fixed", step, in_sym(pis[n + 1], out.t[n]),
                     "pi_" + std::to_string(n + 1) + " moves t_" + std::to_string(n));
    out.report.add("orbit", step, orbit_member(inst, out.t[n]), "t_" + std::to_string(n) + " is not in the tree");
  }
  return out;
}

EStream support_stream(const NDSet &base_support, const std::vector<HFAValue> &s) {
  EStream stream;
  stream.increments.push_back(base_support);
  for (const auto &node : s)
    stream.increments.push_back(atoms_support(node));
  return stream;
}

ShiftsFromBranch shifts_from_branch(const BranchCertificate &cert, const std::vector<SubgroupTerm> &hs,
                                    const SamplingOptions &opts) {
  const std::size_t m = cert.tau.size();
  if (cert.x.size() < m || cert.t.size() < m)
    throw std::invalid_argument("shifts_from_branch: certificate shorter than its tau list");
  for (std::size_t n = 0; n < m; ++n) {
    const HFAValue xs(HFAValue::seq({cert.x.begin(), cert.x.begin() + static_cast<long>(n + 1)}));
    const HFAValue ts(HFAValue::seq({cert.t.begin(), cert.t.begin() + static_cast<long>(n + 1)}));
    if (act(cert.tau[n], xs) != ts)
      throw TauInconsistency(n, "tau_" + std::to_string(n) + " does not map <x_i : i <= " + std::to_string(n) +
                                    "> onto <t_i : i <= " + std::to_string(n) + ">");
  }

  ShiftsFromBranch out;
  for (std::size_t n = 0; n < m; ++n)
    out.pis.push_back(n == 0 ? cert.tau[0] : compose(cert.tau[n], invert(cert.tau[n - 1])));

  PLMap fold = PLMap::identity();
  for (std::size_t n = 0; n < m; ++n) {
    fold = compose(out.pis[n], fold);
    out.report.add("telescoping", static_cast<long>(n), fold == cert.tau[n],
                   "pi_" + std::to_string(n) + " . ... . pi_0 != tau_" + std::to_string(n));
  }

  const std::size_t levels = std::min(hs.size(), m + 1);
  for (std::size_t n = 0; n < levels; ++n)
    out.ks.push_back(n == 0 ? normalize(hs[0]) : normalize(conj(cert.tau[n - 1], hs[n])));

  for (std::size_t n = 0; n < std::min(levels, m); ++n)
    out.report.add("claim1", static_cast<long>(n), member(out.ks[n], out.pis[n]),
                   "pi_" + std::to_string(n) + " not in K_" + std::to_string(n));

  if (out.ks.empty())
    return out;
  // K = Stab(<t>) ∩ K_0, sampled through its Fix generator.
  const SubgroupTerm k = inter({stab(HFAValue::seq(cert.t)), out.ks[0]});
  const NDSet generator = fix_generator(k);
  const auto claim2 = map_indices<Check>(opts.exec, out.ks.size(), [&](std::size_t n) {
    Rng rng(derive_seed(opts.seed, n));
    for (int i = 0; i < opts.samples; ++i) {
      const PLMap g = random_fix_element(rng, generator);
      if (!member(k, g))
        return Check{"claim2", static_cast<long>(n), Status::Fail, Evidence::Sampled,
                     "sample " + std::to_string(i) + " escapes K itself"};
      if (!member(out.ks[n], g))
        return Check{"claim2", static_cast<long>(n), Status::Fail, Evidence::Sampled,
                     "sample " + std::to_string(i) + " in K but not in K_" + std::to_string(n)};
    }
    return Check{"claim2", static_cast<long>(n), Status::Pass, Evidence::Sampled,
                 std::to_string(opts.samples) + " samples"};
  });
  for (const auto &c : claim2)
    out.report.add(c);
  return out;
}

EssentialShift essential_shift(const std::vector<HFAValue> &xs, const std::vector<PLMap> &pis,
                               const SamplingOptions &opts) {
  if (!xs.empty() && pis.size() + 1 < xs.size())
    throw std::invalid_argument("essential_shift: need pi_0 .. pi_{N-1} for N+1 objects");
  const std::vector<PLMap> sigma = telescope(pis);
  EssentialShift out;
  for (std::size_t n = 0; n < xs.size(); ++n)
    out.y.push_back(act(sigma[n], xs[n]));

  std::vector<SubgroupTerm> ks;
  for (std::size_t n = 0; n < xs.size(); ++n)
    ks.push_back(conj(sigma[n], stab(xs[n])));

  for (std::size_t n = 0; n < xs.size() && n < pis.size(); ++n)
    out.report.add("witness", static_cast<long>(n), member(conj(sigma[n], fix(atoms_support(xs[n]))), pis[n]),
                   "pi_" + std::to_string(n) + " not in sigma_n Fix(supp x_n) sigma_n^-1");

  const auto conjugation = map_indices<Check>(opts.exec, xs.size(), [&](std::size_t n) {
    Rng rng(derive_seed(opts.seed, n));
    const NDSet supp = atoms_support(out.y[n]);
    for (int i = 0; i < opts.samples; ++i) {
      const PLMap f = i % 2 == 0 ? random_fix_element(rng, supp) : random_plmap(rng);
      if (in_sym(f, out.y[n]) != member(ks[n], f))
        return Check{"conjugation", static_cast<long>(n), Status::Fail, Evidence::Sampled,
                     "routes disagree on sample " + std::to_string(i)};
    }
    return Check{"conjugation", static_cast<long>(n), Status::Pass, Evidence::Sampled,
                 std::to_string(opts.samples) + " samples"};
  });
  for (const auto &c : conjugation)
    out.report.add(c);

  if (!xs.empty()) {
    const HFAValue whole = HFAValue::seq(out.y);
    const SubgroupTerm all = inter(ks);
    Rng rng(derive_seed(opts.seed, xs.size() + 1));
    std::string bad;
    for (int i = 0; i < opts.samples && bad.empty(); ++i) {
      PLMap f = PLMap::identity();
      switch (i % 3) {
      case 0:
        f = random_fix_element(rng, atoms_support(whole));
        break;
      case 1: {
        const auto upto = static_cast<std::size_t>(rng.below(xs.size()));
        f = random_fix_element(rng, atoms_support(whole.prefix(upto)));
        break;
      }
      default:
        f = random_plmap(rng);
      }
      if (member(all, f) != in_sym(f, whole))
        bad = "disagreement on sample " + std::to_string(i);
    }
    out.report.add("sequence_stabilizer", -1, bad.empty(), bad, Evidence::Sampled);
  }
  return out;
}

} // namespace shiftdc
