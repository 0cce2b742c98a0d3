#pragma once

#include <optional>
#include <string>
#include <vector>

namespace shiftdc {

enum class Status { Pass, Fail, Unknown };

/// "exact" checks are decided; "sampled" ones only gathered evidence over
/// generated group elements.
enum class Evidence { Exact, Sampled };

struct Check {
  std::string condition;
  long step = -1;
  Status status = Status::Pass;
  Evidence evidence = Evidence::Exact;
  std::string detail;
};

class Report {
public:
  void add(Check c) { checks_.push_back(std::move(c)); }
  void add(std::string condition, long step, bool ok, std::string detail = {},
           Evidence evidence = Evidence::Exact) {
    checks_.push_back({std::move(condition), step, ok ? Status::Pass : Status::Fail, evidence,
                       ok ? std::string{} : std::move(detail)});
  }
  void append(const Report &other) { checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end()); }

  const std::vector<Check> &checks() const { return checks_; }
  bool passed() const;
  std::size_t failures() const;
  std::optional<Check> first_failure() const;
  /// Failing checks (status Fail) with the given condition name.
  std::vector<Check> failures_of(const std::string &condition) const;

private:
  std::vector<Check> checks_;
};

const char *to_string(Status s);
const char *to_string(Evidence e);

} // namespace shiftdc
