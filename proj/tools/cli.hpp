#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <qtorus/errors.hpp>
#include <qtorus/bargmann.hpp>

namespace qtorus::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitTolerance = 1;
inline constexpr int kExitUsage = 2;

/// Bad command line; the message names the offending flag.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A validated command line. Option keys drop the leading "--"; defaults for
/// the command are filled in, so equal invocations compare equal.
struct Invocation {
  std::string command;
  std::map<std::string, std::string> options;
  bool help = false;

  bool has(const std::string& key) const { return options.contains(key); }
  const std::string& get(const std::string& key) const { return options.at(key); }
  friend bool operator==(const Invocation&, const Invocation&) = default;
};

struct Report {
  int exit_code = kExitOk;
  std::string output;   // the document for stdout / --out
  std::string message;  // diagnostics for stderr
};

/// args excludes the program name. Throws UsageError.
Invocation parse(const std::vector<std::string>& args);

/// Runs a parsed invocation; never throws.
Report execute(const Invocation& inv);

/// parse + execute, mapping UsageError to exit code 2.
Report run(const std::vector<std::string>& args);

std::string help_text();

/// Writes text to path via a temporary file in the same directory and a rename.
void write_atomically(const std::string& path, std::string_view text);

// Documents emitted by the check and plot commands, and their JSON readers.

struct CheckDocument {
  std::string command;  // "dft-check" or "basis-check"
  std::int64_t n = 0;
  double theta1 = 0.0;
  double theta2 = 0.0;
  std::int64_t parameter = 0;  // truncation K or quadrature grid
  double tolerance = 0.0;
  double max_deviation = 0.0;
  bool pass = false;
  std::vector<SectorMatrix> matrices;  // dft-check: recovered, expected; basis-check: gram
  friend bool operator==(const CheckDocument&, const CheckDocument&) = default;
};
std::string check_to_json(const CheckDocument& doc);
CheckDocument check_from_json(std::string_view text);
std::string check_to_csv(const CheckDocument& doc);

struct KernelPlotDocument {
  double h = 0.0;
  bool figure_convention = false;  // which series the CSV form carries
  std::vector<KernelPlotRow> figure;   // hbar := h
  std::vector<KernelPlotRow> library;  // hbar = h / (2 pi)
  friend bool operator==(const KernelPlotDocument& a, const KernelPlotDocument& b);
};
std::string kernel_plot_to_json(const KernelPlotDocument& doc);
KernelPlotDocument kernel_plot_from_json(std::string_view text);

/// {"re": x, "im": y}
std::string complex_to_json(Complex z);
Complex complex_from_json(std::string_view text);

}  // namespace qtorus::cli
