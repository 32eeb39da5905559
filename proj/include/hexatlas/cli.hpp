#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "hexatlas/error.hpp"

namespace hexatlas {

enum class OutputFormat { Json, Csv, Pretty };

struct Config {
  std::map<std::string, double> tolerances;  // from --tol-<name> <value>
  int n_max = 40;
  OutputFormat format = OutputFormat::Pretty;
  bool trace = false;

  double tolerance(const std::string& name, double fallback) const;
};

/// Tolerance names accepted by --tol-<name>.
inline constexpr const char* kToleranceNames[] = {"limit", "split"};

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kDomain = 2;
inline constexpr int kNotConverged = 3;
inline constexpr int kUsage = 64;
inline constexpr int kInternal = 70;
}  // namespace exit_code

int exit_code_for(ErrorKind kind);

/// Runs one command; `args` excludes the program name. Results go to `out`,
/// one-line diagnostics "error: <Kind>: <message>" to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hexatlas
