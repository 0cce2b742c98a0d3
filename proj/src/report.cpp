#include "shiftdc/report.hpp"

#include <algorithm>

namespace shiftdc {

bool Report::passed() const {
  return std::none_of(checks_.begin(), checks_.end(), [](const Check &c) { return c.status == Status::Fail; });
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [](const Check &c) { return c.status == Status::Fail; }));
}

std::optional<Check> Report::first_failure() const {
  const auto it = std::find_if(checks_.begin(), checks_.end(), [](const Check &c) { return c.status == Status::Fail; });
  if (it == checks_.end())
    return std::nullopt;
  return *it;
}

std::vector<Check> Report::failures_of(const std::string &condition) const {
  std::vector<Check> out;
  for (const auto &c : checks_)
    if (c.status == Status::Fail && c.condition == condition)
      out.push_back(c);
  return out;
}

const char *to_string(Status s) {
  switch (s) {
  case Status::Pass:
    return "pass";
  case Status::Fail:
    return "fail";
  case Status::Unknown:
    return "unknown";
  }
  return "?";
}

const char *to_string(Evidence e) { return e == Evidence::Exact ? "exact" : "sampled"; }

} // namespace shiftdc
