#ifndef UNICOMP_ERROR_H_
#define UNICOMP_ERROR_H_

#include <stdexcept>
#include <string>

namespace unicomp {

enum class ErrorCode {
  kInvalidArgument,
  kOutOfRange,
  kDimensionMismatch,
  kInputNotUnitary,
  kInputNotSpecial,
  kResidualTooLarge,
  kUnsupportedMoment,
  kNonFiniteIntegrand,
  kInvalidState,
  kInvalidWeights,
  kParse,
};

const char* error_code_name(ErrorCode code);

// Single exception type for the library. `norm()` carries the offending
// measurement (unitarity defect, determinant error, residual) when one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, double norm = 0.0)
      : std::runtime_error(message), code_(code), norm_(norm) {}

  ErrorCode code() const { return code_; }
  double norm() const { return norm_; }

  // True for the failures a caller should treat as "bad input matrix".
  bool is_validation() const {
    return code_ == ErrorCode::kInputNotUnitary ||
           code_ == ErrorCode::kInputNotSpecial ||
           code_ == ErrorCode::kInvalidState ||
           code_ == ErrorCode::kInvalidWeights;
  }

 private:
  ErrorCode code_;
  double norm_;
};

}  // namespace unicomp

#endif  // UNICOMP_ERROR_H_
