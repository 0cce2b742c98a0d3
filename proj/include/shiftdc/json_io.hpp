#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "shiftdc/dc.hpp"
#include "shiftdc/hfa.hpp"
#include "shiftdc/ndset.hpp"
#include "shiftdc/plmap.hpp"
#include "shiftdc/report.hpp"
#include "shiftdc/shift.hpp"
#include "shiftdc/subgroup.hpp"

namespace shiftdc {

using Json = nlohmann::ordered_json;

/// Ill-formed document (wrong shape, bad rational, invariant violation).
class FormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Rationals are written as "p" or "p/q" strings; endpoints also accept
// "-inf" and "+inf".
Json to_json(const Rational &q);
Json to_json(const Interval &iv);
Json to_json(const PLMap &f);
Json to_json(const GeomTail &t);
Json to_json(const NDSet &e);
Json to_json(const HFAValue &x);
Json to_json(const SubgroupTerm &h);
Json to_json(const EStream &s);
Json to_json(const Check &c);

Rational rational_from_json(const Json &j);
Interval interval_from_json(const Json &j);
PLMap plmap_from_json(const Json &j);
GeomTail tail_from_json(const Json &j);
NDSet ndset_from_json(const Json &j);
HFAValue hfa_from_json(const Json &j);
SubgroupTerm subgroup_from_json(const Json &j);
EStream stream_from_json(const Json &j);

/// FNV-1a 64 of the compact stream dump, as 16 hex digits.
std::string stream_hash(const EStream &s);

/// {"header": {"N", "stream", "streamHash"}, "steps": [...]}
Json trace_to_json(const ShiftTrace &trace, const EStream &stream);

struct LoadedTrace {
  ShiftTrace trace;
  EStream stream;
};
/// Also checks that the header's N and hash agree with the body.
LoadedTrace trace_from_json(const Json &j);

/// {"x", "t", "tau", "H", optional "baseSupport"}
struct CertificateFile {
  BranchCertificate cert;
  std::vector<SubgroupTerm> hs;
  std::optional<NDSet> base_support;
};
CertificateFile certificate_from_json(const Json &j);
Json to_json(const CertificateFile &c);

/**
 * Theorem instance: {"baseSupport", "base": [HFAValue], "chain": n,
 * "certificate": {...}}. The chain is s_k = <base_0 .. base_{k-1}> for
 * k = 0 .. n.
 */
struct TheoremInstance {
  TreeInstance tree;
  std::size_t chain = 0;
  CertificateFile certificate;
};
TheoremInstance theorem_from_json(const Json &j);
Json to_json(const TheoremInstance &t);

/// Reads and parses a JSON file; FormatError on I/O or syntax failure.
Json read_json_file(const std::string &path);
/// Writes j.dump(2) and a trailing newline.
void write_json_file(const std::string &path, const Json &j);

} // namespace shiftdc
