#pragma once

#include <stdexcept>
#include <string>

namespace mukai_lab {

enum class Err {
  dimension_mismatch,
  non_square,
  invalid_surface,
  not_ample,
  nonpositive_k,
  on_wall,
  n_too_small,
  not_numerical_section,
  not_perpendicular,
  zero_rank,
  rank_range,
  recursion_mismatch,
  decomposition_failed,
  bad_input,
};

// Stable machine-readable names, used in CLI error objects.
const char* err_name(Err e);

class DomainError : public std::runtime_error {
public:
  DomainError(Err code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  Err code() const { return code_; }

private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) {
  throw DomainError(code, msg);
}

}  // namespace mukai_lab
