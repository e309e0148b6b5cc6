#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace specpair {

enum class ErrorCode {
  invalid_argument,
  dimension_mismatch,
  duplicate_point,
  insufficient_spectrum,
  symmetry_undefined,
  overlap,
  duplicate_spectrum,
  non_invertible,
  empty_spectrum,
  shape_mismatch,
  unsupported,
  parse_error,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this exception; the code lets
// callers (the CLI in particular) map failures onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace specpair
