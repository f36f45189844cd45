#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gentropy {

enum class Errc {
  EmptyInput,
  NegativeProbability,
  NotNormalized,
  IndexOutOfRange,
  DegenerateSampling,
  StepTooLarge,
  ParameterOutOfRange,
  DegenerateH,
  DomainViolation,
  SingularDerivative,
  RankDeficient,
  ParseError,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure in the library is reported through this one exception type;
/// `code()` tells callers (and the CLI exit-code mapping) what went wrong.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace gentropy
