#pragma once

#include <stdexcept>
#include <string>

namespace toricsym {

enum class ErrorCode {
  kInvalidArgument,  // malformed input, bad grammar, out-of-range values
  kInvalidCenter,    // star subdivision center is not a cone of the fan
  kNotAWall,         // codimension-one cone not shared by exactly two maximal cones
  kNotUnimodular,
  kDuplicate,        // repeated blowup center
  kOrderingViolation,  // line center listed before a point center
  kInvalidFan,       // smoothness / completeness / simpliciality failure
  kOverflow,
  kInternal,         // broken invariant; never expected on valid input
};

// Single exception type for the library. The code lets callers (the CLI in
// particular) distinguish user errors from internal invariant failures.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  bool is_internal() const noexcept {
    return code_ == ErrorCode::kInternal || code_ == ErrorCode::kOverflow;
  }

 private:
  ErrorCode code_;
};

}  // namespace toricsym
