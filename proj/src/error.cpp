#include "hexatlas/error.hpp"

namespace hexatlas {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPositiveLength: return "NonPositiveLength";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::NotInGoodPosition: return "NotInGoodPosition";
    case ErrorKind::ZeroCoords: return "ZeroCoords";
    case ErrorKind::ZeroFoliation: return "ZeroFoliation";
    case ErrorKind::NotInChart: return "NotInChart";
    case ErrorKind::NotConverged: return "NotConverged";
    case ErrorKind::UnsupportedSpec: return "UnsupportedSpec";
    case ErrorKind::InvalidTriple: return "InvalidTriple";
    case ErrorKind::IncompatibleSupport: return "IncompatibleSupport";
    case ErrorKind::NegativeWeight: return "NegativeWeight";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::InternalConsistency: return "InternalConsistency";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace hexatlas
