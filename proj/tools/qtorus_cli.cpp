#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  namespace cli = qtorus::cli;
  const std::vector<std::string> args(argv + 1, argv + argc);

  cli::Report report;
  std::string out_path;
  try {
    const cli::Invocation inv = cli::parse(args);
    if (inv.has("out")) out_path = inv.get("out");
    report = cli::execute(inv);
  } catch (const cli::UsageError& e) {
    report = {cli::kExitUsage, {}, e.what()};
  }

  if (!report.output.empty()) {
    if (out_path.empty()) {
      std::cout << report.output << std::flush;
    } else {
      try {
        cli::write_atomically(out_path, report.output);
      } catch (const cli::UsageError& e) {
        std::cerr << "qtorus: " << e.what() << '\n';
        return cli::kExitUsage;
      }
    }
  }
  if (!report.message.empty()) std::cerr << "qtorus: " << report.message << '\n';
  return report.exit_code;
}
