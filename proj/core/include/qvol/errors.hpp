#pragma once

#include <map>
#include <stdexcept>
#include <string>

namespace qvol {

// Error taxonomy for the whole library.  Codes are split into two classes:
// input/validation problems (a caller can fix the input) and numerical gate
// failures (the data passed validation but a computed certificate failed).
enum class ErrorCode {
  // validation
  MalformedPd,
  NonPlanar,
  TrivialComponent,
  RelationViolated,
  InconsistentPropagation,
  SearchExhausted,
  GenericityViolated,
  UnknownExample,
  MalformedJob,
  // numerical gates
  ArgumentOnCut,
  NotAtSaddle,
  NotIntegral,
  DegenerateTetrahedron,
  GluingMismatch,
};

const char* error_code_name(ErrorCode code);

// True for codes that indicate bad input rather than a failed numerical
// certificate.  The CLI maps validation errors to exit code 1 and gate
// failures to exit code 2.
bool is_validation_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message,
        std::map<std::string, std::string> details = {})
      : std::runtime_error(std::move(message)),
        code_(code),
        details_(std::move(details)) {}

  ErrorCode code() const { return code_; }
  const std::map<std::string, std::string>& details() const { return details_; }

 private:
  ErrorCode code_;
  std::map<std::string, std::string> details_;
};

}  // namespace qvol
