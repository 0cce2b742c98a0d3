#include <iostream>

#include <CLI11.hpp>

#include "shiftdc/cli.hpp"

int main(int argc, char **argv) {
  using namespace shiftdc;
  CLI::App app{"shiftdc: shift construction and finite-prefix theorem checks over Q"};
  app.require_subcommand(1);

  RunConfig config;
  auto common = [&](CLI::App *sub) {
    sub->add_option("--seed", config.seed, "seed for all sampling");
    sub->add_option("--threads", config.threads, "OpenMP threads (0 = default)")->check(CLI::NonNegativeNumber);
  };

  auto *construct = app.add_subcommand("construct", "run the construction and write a trace");
  construct->add_option("--stream", config.stream, "stream spec JSON")->required();
  construct->add_option("--out", config.out, "trace file to write")->required();
  construct->add_option("--steps", config.steps, "last step index N");
  common(construct);

  auto *verify = app.add_subcommand("verify", "check a trace file");
  verify->add_option("--out", config.out, "trace file to read")->required();
  common(verify);

  auto *theorem = app.add_subcommand("theorem", "run both directions on a theorem instance");
  theorem->add_option("--stream", config.stream, "theorem instance JSON")->required();
  common(theorem);

  auto *props = app.add_subcommand("props", "run the randomized property suites");
  props->add_option("--cases", config.cases, "cases per property");
  props->add_option("--filter", config.filter, "property-name prefix");
  common(props);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitFormat;
  }

  if (construct->parsed())
    config.command = Command::Construct;
  else if (verify->parsed())
    config.command = Command::Verify;
  else if (theorem->parsed())
    config.command = Command::Theorem;
  else
    config.command = Command::Props;
  return run(config, std::cout, std::cerr);
}
