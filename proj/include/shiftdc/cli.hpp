#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace shiftdc {

enum class Command { Construct, Verify, Theorem, Props };

struct RunConfig {
  Command command = Command::Construct;
  long steps = 10;
  std::uint64_t seed = 1;
  std::string stream;
  std::string out;
  /// 0 keeps the OpenMP default.
  int threads = 0;
  std::size_t cases = 100;
  /// Props only: property-name prefix.
  std::string filter;
};

// Exit codes: 0 pass, 1 semantic failure, 2 parse or I/O failure. Reports
// are JSON lines.
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitFormat = 2;

/// Reads the stream spec, writes the trace to config.out, verifies it.
int cmd_construct(const RunConfig &config, std::ostream &out, std::ostream &err);
/// Verifies the trace at config.out using nothing but that file.
int cmd_verify(const RunConfig &config, std::ostream &out, std::ostream &err);
/// Runs both directions on the theorem instance at config.stream.
int cmd_theorem(const RunConfig &config, std::ostream &out, std::ostream &err);
int cmd_props(const RunConfig &config, std::ostream &out, std::ostream &err);

int run(const RunConfig &config, std::ostream &out, std::ostream &err);

} // namespace shiftdc
