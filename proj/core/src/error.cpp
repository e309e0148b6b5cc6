#include "specpair/error.hpp"

namespace specpair {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::dimension_mismatch: return "dimension-mismatch";
    case ErrorCode::duplicate_point: return "duplicate-point";
    case ErrorCode::insufficient_spectrum: return "insufficient-spectrum";
    case ErrorCode::symmetry_undefined: return "symmetry-undefined";
    case ErrorCode::overlap: return "overlap";
    case ErrorCode::duplicate_spectrum: return "duplicate-spectrum";
    case ErrorCode::non_invertible: return "non-invertible";
    case ErrorCode::empty_spectrum: return "empty-spectrum";
    case ErrorCode::shape_mismatch: return "shape-mismatch";
    case ErrorCode::unsupported: return "unsupported";
    case ErrorCode::parse_error: return "parse-error";
  }
  return "unknown";
}

}  // namespace specpair
