#include "qvol/errors.hpp"

namespace qvol {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedPd: return "MalformedPd";
    case ErrorCode::NonPlanar: return "NonPlanar";
    case ErrorCode::TrivialComponent: return "TrivialComponent";
    case ErrorCode::RelationViolated: return "RelationViolated";
    case ErrorCode::InconsistentPropagation: return "InconsistentPropagation";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::GenericityViolated: return "GenericityViolated";
    case ErrorCode::UnknownExample: return "UnknownExample";
    case ErrorCode::MalformedJob: return "MalformedJob";
    case ErrorCode::ArgumentOnCut: return "ArgumentOnCut";
    case ErrorCode::NotAtSaddle: return "NotAtSaddle";
    case ErrorCode::NotIntegral: return "NotIntegral";
    case ErrorCode::DegenerateTetrahedron: return "DegenerateTetrahedron";
    case ErrorCode::GluingMismatch: return "GluingMismatch";
  }
  return "Unknown";
}

bool is_validation_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedPd:
    case ErrorCode::NonPlanar:
    case ErrorCode::TrivialComponent:
    case ErrorCode::RelationViolated:
    case ErrorCode::InconsistentPropagation:
    case ErrorCode::SearchExhausted:
    case ErrorCode::GenericityViolated:
    case ErrorCode::UnknownExample:
    case ErrorCode::MalformedJob:
      return true;
    case ErrorCode::ArgumentOnCut:
    case ErrorCode::NotAtSaddle:
    case ErrorCode::NotIntegral:
    case ErrorCode::DegenerateTetrahedron:
    case ErrorCode::GluingMismatch:
      return false;
  }
  return false;
}

}  // namespace qvol
