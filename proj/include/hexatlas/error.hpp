#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hexatlas {

enum class ErrorKind {
  NonPositiveLength,
  Infeasible,
  NotInGoodPosition,
  ZeroCoords,
  ZeroFoliation,
  NotInChart,
  NotConverged,
  UnsupportedSpec,
  InvalidTriple,
  IncompatibleSupport,
  NegativeWeight,
  Parse,
  InternalConsistency,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so the
/// command-line layer can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hexatlas
