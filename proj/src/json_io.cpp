#include "shiftdc/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace shiftdc {

namespace {

// Every parser error surfaces as FormatError.
template <typename F> auto guarded(const char *what, F &&f) -> decltype(f()) {
  try {
    return f();
  } catch (const FormatError &) {
    throw;
  } catch (const nlohmann::json::exception &e) {
    throw FormatError(std::string(what) + ": " + e.what());
  } catch (const std::invalid_argument &e) {
    throw FormatError(std::string(what) + ": " + e.what());
  } catch (const std::out_of_range &e) {
    throw FormatError(std::string(what) + ": " + e.what());
  }
}

const Json &field(const Json &j, const char *key) {
  if (!j.is_object())
    throw FormatError(std::string("expected an object with field '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end())
    throw FormatError(std::string("missing field '") + key + "'");
  return *it;
}

const Json &array_field(const Json &j, const char *key) {
  const Json &a = field(j, key);
  if (!a.is_array())
    throw FormatError(std::string("field '") + key + "' is not an array");
  return a;
}

std::string text(const Json &j) {
  if (!j.is_string())
    throw FormatError("expected a string, got " + j.dump());
  return j.get<std::string>();
}

Json endpoint_json(const Endpoint &e) { return e.str(); }

template <typename T, typename F> std::vector<T> list(const Json &a, F &&f) {
  if (!a.is_array())
    throw FormatError("expected an array, got " + a.dump());
  std::vector<T> out;
  for (const auto &item : a)
    out.push_back(f(item));
  return out;
}

} // namespace

Json to_json(const Rational &q) { return q.str(); }

Json to_json(const Interval &iv) { return Json::array({endpoint_json(iv.lower()), endpoint_json(iv.upper())}); }

Json to_json(const PLMap &f) {
  Json bps = Json::array();
  for (const auto &b : f.breakpoints())
    bps.push_back(Json::array({b.in.str(), b.out.str()}));
  Json j;
  j["breakpoints"] = std::move(bps);
  j["leftSlope"] = f.left_slope().str();
  j["rightSlope"] = f.right_slope().str();
  return j;
}

Json to_json(const GeomTail &t) {
  Json j;
  j["limit"] = t.limit.str();
  j["coeff"] = t.coeff.str();
  j["ratio"] = t.ratio.str();
  j["headDrop"] = t.head_drop;
  return j;
}

Json to_json(const NDSet &e) {
  Json pts = Json::array();
  for (const auto &p : e.points())
    pts.push_back(p.str());
  Json tails = Json::array();
  for (const auto &t : e.tails())
    tails.push_back(to_json(t));
  Json j;
  j["points"] = std::move(pts);
  j["tails"] = std::move(tails);
  return j;
}

Json to_json(const HFAValue &x) {
  Json j;
  switch (x.kind()) {
  case HFAValue::Kind::Atom:
    j["atom"] = x.value().str();
    return j;
  case HFAValue::Kind::Set:
  case HFAValue::Kind::Seq: {
    Json items = Json::array();
    for (const auto &y : x.items())
      items.push_back(to_json(y));
    j[x.kind() == HFAValue::Kind::Set ? "set" : "seq"] = std::move(items);
    return j;
  }
  }
  return j;
}

Json to_json(const SubgroupTerm &h) {
  return std::visit(
      [](const auto &n) -> Json {
        using T = std::decay_t<decltype(n)>;
        Json j;
        if constexpr (std::is_same_v<T, FullGroup>) {
          return "full";
        } else if constexpr (std::is_same_v<T, FixTerm>) {
          j["fix"] = to_json(n.support);
        } else if constexpr (std::is_same_v<T, StabTerm>) {
          j["stab"] = to_json(n.object);
        } else if constexpr (std::is_same_v<T, ConjTerm>) {
          Json c;
          c["by"] = to_json(n.by);
          c["inner"] = to_json(*n.inner);
          j["conj"] = std::move(c);
        } else {
          Json parts = Json::array();
          for (const auto &p : n.parts)
            parts.push_back(to_json(p));
          j["inter"] = std::move(parts);
        }
        return j;
      },
      h.node());
}

Json to_json(const EStream &s) {
  Json inc = Json::array();
  for (const auto &d : s.increments)
    inc.push_back(to_json(d));
  Json j;
  j["increments"] = std::move(inc);
  return j;
}

Json to_json(const Check &c) {
  Json j;
  j["condition"] = c.condition;
  j["step"] = c.step;
  j["status"] = to_string(c.status);
  j["evidence"] = to_string(c.evidence);
  if (!c.detail.empty())
    j["detail"] = c.detail;
  return j;
}

Rational rational_from_json(const Json &j) {
  return guarded("rational", [&] { return Rational::parse(text(j)); });
}

Interval interval_from_json(const Json &j) {
  return guarded("interval", [&] {
    if (!j.is_array() || j.size() != 2)
      throw FormatError("interval must be a two-element array");
    return Interval(Endpoint::parse(text(j[0])), Endpoint::parse(text(j[1])));
  });
}

PLMap plmap_from_json(const Json &j) {
  return guarded("plmap", [&] {
    std::vector<Breakpoint> bps = list<Breakpoint>(array_field(j, "breakpoints"), [](const Json &b) {
      if (!b.is_array() || b.size() != 2)
        throw FormatError("breakpoint must be a two-element array");
      return Breakpoint{rational_from_json(b[0]), rational_from_json(b[1])};
    });
    return PLMap(std::move(bps), rational_from_json(field(j, "leftSlope")), rational_from_json(field(j, "rightSlope")));
  });
}

GeomTail tail_from_json(const Json &j) {
  return guarded("tail", [&] {
    long drop = 0;
    if (j.is_object() && j.contains("headDrop")) {
      if (!j["headDrop"].is_number_integer())
        throw FormatError("headDrop must be an integer");
      drop = j["headDrop"].get<long>();
    }
    return GeomTail(rational_from_json(field(j, "limit")), rational_from_json(field(j, "coeff")),
                    rational_from_json(field(j, "ratio")), drop);
  });
}

NDSet ndset_from_json(const Json &j) {
  return guarded("ndset", [&] {
    if (!j.is_object())
      throw FormatError("ndset must be an object");
    std::vector<Rational> pts;
    std::vector<GeomTail> tails;
    if (j.contains("points"))
      pts = list<Rational>(j["points"], rational_from_json);
    if (j.contains("tails"))
      tails = list<GeomTail>(j["tails"], tail_from_json);
    return NDSet(std::move(pts), std::move(tails));
  });
}

HFAValue hfa_from_json(const Json &j) {
  return guarded("hfa", [&] {
    if (!j.is_object() || j.size() != 1)
      throw FormatError("HFA value must be an object with one of 'atom', 'set', 'seq'");
    if (j.contains("atom"))
      return HFAValue::atom(rational_from_json(j["atom"]));
    if (j.contains("set"))
      return HFAValue::set(list<HFAValue>(j["set"], hfa_from_json));
    if (j.contains("seq"))
      return HFAValue::seq(list<HFAValue>(j["seq"], hfa_from_json));
    throw FormatError("unknown HFA value " + j.dump());
  });
}

SubgroupTerm subgroup_from_json(const Json &j) {
  return guarded("subgroup", [&] {
    if (j.is_string() && j.get<std::string>() == "full")
      return full_group();
    if (!j.is_object() || j.size() != 1)
      throw FormatError("subgroup term must be \"full\" or a one-key object");
    if (j.contains("fix"))
      return fix(ndset_from_json(j["fix"]));
    if (j.contains("stab"))
      return stab(hfa_from_json(j["stab"]));
    if (j.contains("conj"))
      return conj(plmap_from_json(field(j["conj"], "by")), subgroup_from_json(field(j["conj"], "inner")));
    if (j.contains("inter"))
      return inter(list<SubgroupTerm>(j["inter"], subgroup_from_json));
    throw FormatError("unknown subgroup term " + j.dump());
  });
}

EStream stream_from_json(const Json &j) {
  return guarded("stream", [&] { return EStream{list<NDSet>(array_field(j, "increments"), ndset_from_json)}; });
}

std::string stream_hash(const EStream &s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : to_json(s).dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json trace_to_json(const ShiftTrace &trace, const EStream &stream) {
  Json header;
  header["N"] = trace.steps.empty() ? -1 : trace.steps.back().n;
  header["streamHash"] = stream_hash(stream);
  header["stream"] = to_json(stream);
  Json steps = Json::array();
  for (const auto &st : trace.steps) {
    Json s;
    s["n"] = st.n;
    s["I"] = to_json(st.I);
    s["J"] = to_json(st.J);
    s["pi"] = to_json(st.pi);
    s["sigmaNext"] = to_json(st.sigma_next);
    s["shifted"] = to_json(st.shifted);
    steps.push_back(std::move(s));
  }
  Json j;
  j["header"] = std::move(header);
  j["steps"] = std::move(steps);
  return j;
}

LoadedTrace trace_from_json(const Json &j) {
  return guarded("trace", [&] {
    const Json &header = field(j, "header");
    LoadedTrace out;
    out.stream = stream_from_json(field(header, "stream"));
    if (text(field(header, "streamHash")) != stream_hash(out.stream))
      throw FormatError("trace: streamHash does not match the embedded stream");
    for (const auto &s : array_field(j, "steps")) {
      const Json &n = field(s, "n");
      if (!n.is_number_integer())
        throw FormatError("trace: step index must be an integer");
      out.trace.steps.push_back({n.get<long>(), interval_from_json(field(s, "I")), interval_from_json(field(s, "J")),
                                 plmap_from_json(field(s, "pi")), plmap_from_json(field(s, "sigmaNext")),
                                 ndset_from_json(field(s, "shifted"))});
    }
    const Json &big_n = field(header, "N");
    const long expected = out.trace.steps.empty() ? -1 : static_cast<long>(out.trace.steps.size()) - 1;
    if (!big_n.is_number_integer() || big_n.get<long>() != expected)
      throw FormatError("trace: header N disagrees with the number of steps");
    return out;
  });
}

CertificateFile certificate_from_json(const Json &j) {
  return guarded("certificate", [&] {
    CertificateFile c;
    c.cert.x = list<HFAValue>(array_field(j, "x"), hfa_from_json);
    c.cert.t = list<HFAValue>(array_field(j, "t"), hfa_from_json);
    c.cert.tau = list<PLMap>(array_field(j, "tau"), plmap_from_json);
    c.hs = list<SubgroupTerm>(array_field(j, "H"), subgroup_from_json);
    if (j.contains("baseSupport"))
      c.base_support = ndset_from_json(j["baseSupport"]);
    return c;
  });
}

Json to_json(const CertificateFile &c) {
  auto arr = [](const auto &v) {
    Json a = Json::array();
    for (const auto &x : v)
      a.push_back(to_json(x));
    return a;
  };
  Json j;
  j["x"] = arr(c.cert.x);
  j["t"] = arr(c.cert.t);
  j["tau"] = arr(c.cert.tau);
  j["H"] = arr(c.hs);
  if (c.base_support)
    j["baseSupport"] = to_json(*c.base_support);
  return j;
}

TheoremInstance theorem_from_json(const Json &j) {
  return guarded("theorem instance", [&] {
    TheoremInstance t;
    t.tree.base_support = ndset_from_json(field(j, "baseSupport"));
    t.tree.base = list<HFAValue>(array_field(j, "base"), hfa_from_json);
    const Json &chain = field(j, "chain");
    if (!chain.is_number_unsigned())
      throw FormatError("chain must be a non-negative integer");
    t.chain = chain.get<std::size_t>();
    if (t.chain > t.tree.base.size())
      throw FormatError("chain longer than the base sequence");
    t.certificate = certificate_from_json(field(j, "certificate"));
    return t;
  });
}

Json to_json(const TheoremInstance &t) {
  Json base = Json::array();
  for (const auto &x : t.tree.base)
    base.push_back(to_json(x));
  Json j;
  j["baseSupport"] = to_json(t.tree.base_support);
  j["base"] = std::move(base);
  j["chain"] = t.chain;
  j["certificate"] = to_json(t.certificate);
  return j;
}

Json read_json_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw FormatError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::parse_error &e) {
    throw FormatError("'" + path + "': " + e.what());
  }
}

void write_json_file(const std::string &path, const Json &j) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw FormatError("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
  if (!out)
    throw FormatError("write to '" + path + "' failed");
}

} // namespace shiftdc
