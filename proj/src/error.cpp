#include "dgahom/error.hpp"

namespace dgahom {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::PresentationMismatch: return "PresentationMismatch";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::WeightsMissing: return "WeightsMissing";
    case ErrorKind::ZeroLambda: return "ZeroLambda";
    case ErrorKind::NotACofibration: return "NotACofibration";
    case ErrorKind::InvalidDecomposition: return "InvalidDecomposition";
    case ErrorKind::HomotopyEndpointMismatch: return "HomotopyEndpointMismatch";
    case ErrorKind::LemmaViolation: return "LemmaViolation";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::InvalidFiltration: return "InvalidFiltration";
    case ErrorKind::UnsupportedShape: return "UnsupportedShape";
    case ErrorKind::ClassificationIncomplete: return "ClassificationIncomplete";
    case ErrorKind::Parse: return "Parse";
  }
  return "Error";
}

}  // namespace dgahom
