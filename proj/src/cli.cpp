#include "shiftdc/cli.hpp"

#include <ostream>

#include "shiftdc/dc.hpp"
#include "shiftdc/json_io.hpp"
#include "shiftdc/parallel.hpp"
#include "shiftdc/props.hpp"
#include "shiftdc/shift.hpp"

namespace shiftdc {

namespace {

void emit(std::ostream &os, const Json &j) { os << j.dump() << '\n'; }

Json summary(const char *command, bool ok) {
  Json j;
  j["command"] = command;
  j["status"] = ok ? "pass" : "fail";
  return j;
}

Json format_error(const char *command, const std::exception &e) {
  Json j;
  j["command"] = command;
  j["status"] = "error";
  j["detail"] = e.what();
  return j;
}

void emit_report(std::ostream &os, const Report &r, const char *section = nullptr) {
  for (const auto &c : r.checks()) {
    Json j = to_json(c);
    if (section)
      j["section"] = section;
    emit(os, j);
  }
}

std::vector<PLMap> shifts_of(const ShiftTrace &tr) {
  std::vector<PLMap> pis;
  for (const auto &st : tr.steps)
    pis.push_back(st.pi);
  return pis;
}

} // namespace

int cmd_construct(const RunConfig &config, std::ostream &out, std::ostream &err) {
  EStream stream;
  try {
    stream = stream_from_json(read_json_file(config.stream));
  } catch (const FormatError &e) {
    emit(err, format_error("construct", e));
    return kExitFormat;
  }
  if (config.steps < 0) {
    emit(err, format_error("construct", std::invalid_argument("--steps must be non-negative")));
    return kExitFormat;
  }

  ShiftTrace trace;
  try {
    trace = run_shift_construction(stream, config.steps);
  } catch (const EvacuationError &e) {
    Json j = summary("construct", false);
    j["detail"] = e.what();
    j["witness"] = e.witness().str();
    emit(err, j);
    return kExitFail;
  }

  try {
    write_json_file(config.out, trace_to_json(trace, stream));
  } catch (const FormatError &e) {
    emit(err, format_error("construct", e));
    return kExitFormat;
  }

  const Report report = verify_shift_trace(trace, stream);
  if (!report.passed())
    emit_report(err, report);
  Json s = summary("construct", report.passed());
  s["N"] = config.steps;
  s["trace"] = config.out;
  s["checks"] = report.checks().size();
  s["failures"] = report.failures();
  emit(out, s);
  return report.passed() ? kExitPass : kExitFail;
}

int cmd_verify(const RunConfig &config, std::ostream &out, std::ostream &err) {
  LoadedTrace loaded;
  try {
    loaded = trace_from_json(read_json_file(config.out));
  } catch (const FormatError &e) {
    emit(err, format_error("verify", e));
    emit(out, format_error("verify", e));
    return kExitFormat;
  }
  const Report report = verify_shift_trace(loaded.trace, loaded.stream);
  emit_report(out, report);
  Json s = summary("verify", report.passed());
  s["checks"] = report.checks().size();
  s["failures"] = report.failures();
  if (const auto first = report.first_failure()) {
    s["firstFailure"] = first->condition;
    s["step"] = first->step;
  }
  emit(out, s);
  return report.passed() ? kExitPass : kExitFail;
}

int cmd_theorem(const RunConfig &config, std::ostream &out, std::ostream &err) {
  TheoremInstance inst;
  try {
    inst = theorem_from_json(read_json_file(config.stream));
  } catch (const FormatError &e) {
    emit(err, format_error("theorem", e));
    return kExitFormat;
  }

  SamplingOptions sampling;
  sampling.seed = config.seed;
  bool ok = true;
  try {
    // (1) => (2): a chain in the tree, shifts over its induced supports.
    std::vector<HFAValue> s;
    for (std::size_t k = 0; k <= inst.chain; ++k)
      s.push_back(inst.tree.node(k));
    const EStream stream = support_stream(inst.tree.base_support, s);
    const ShiftTrace trace = run_shift_construction(stream, static_cast<long>(inst.chain));
    const Report traced = verify_shift_trace(trace, stream);
    emit_report(out, traced, "shifts");
    const BranchResult br = branch_from_shifts(inst.tree, s, shifts_of(trace));
    emit_report(out, br.report, "branch_from_shifts");
    ok = traced.passed() && br.report.passed();

    // (2) => (1): a certified branch gives shifts.
    const CertificateFile &cf = inst.certificate;
    const ShiftsFromBranch sb = shifts_from_branch(cf.cert, cf.hs, sampling);
    emit_report(out, sb.report, "shifts_from_branch");
    ok = ok && sb.report.passed();

    if (!cf.hs.empty()) {
      TreeInstance tree{cf.cert.x, cf.base_support ? *cf.base_support : fix_generator(cf.hs[0])};
      Report branch;
      for (std::size_t n = 0; n < cf.cert.t.size() && n < cf.cert.x.size(); ++n)
        branch.add("branch", static_cast<long>(n),
                   orbit_member(tree, HFAValue::seq({cf.cert.t.begin(), cf.cert.t.begin() + static_cast<long>(n + 1)})),
                   "<t_0 .. t_n> is not in the tree");
      emit_report(out, branch, "shifts_from_branch");
      ok = ok && branch.passed();
    }
  } catch (const TauInconsistency &e) {
    Json j = summary("theorem", false);
    j["claim"] = "tau_consistency";
    j["index"] = e.index();
    j["detail"] = e.what();
    emit(out, j);
    emit(err, j);
    return kExitFail;
  } catch (const std::invalid_argument &e) {
    emit(err, format_error("theorem", e));
    return kExitFormat;
  }
  emit(out, summary("theorem", ok));
  return ok ? kExitPass : kExitFail;
}

int cmd_props(const RunConfig &config, std::ostream &out, std::ostream &) {
  PropsOptions opts;
  opts.seed = config.seed;
  opts.cases = config.cases;
  opts.filter = config.filter;
  const PropsSummary result = run_properties(opts);
  for (const auto &r : result.results) {
    Json j;
    j["property"] = r.name;
    j["cases"] = r.cases;
    j["failures"] = r.failures;
    if (r.counterexample) {
      j["minimizedSize"] = r.minimized_size;
      j["counterexample"] = Json::parse(*r.counterexample);
    }
    emit(out, j);
  }
  Json s = summary("props", result.passed());
  s["properties"] = result.results.size();
  s["cases"] = result.total_cases();
  s["failures"] = result.total_failures();
  emit(out, s);
  return result.passed() ? kExitPass : kExitFail;
}

int run(const RunConfig &config, std::ostream &out, std::ostream &err) {
  if (config.threads > 0)
    set_threads(config.threads);
  switch (config.command) {
  case Command::Construct:
    return cmd_construct(config, out, err);
  case Command::Verify:
    return cmd_verify(config, out, err);
  case Command::Theorem:
    return cmd_theorem(config, out, err);
  case Command::Props:
    return cmd_props(config, out, err);
  }
  return kExitFormat;
}

} // namespace shiftdc
